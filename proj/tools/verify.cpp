#include "verify.hpp"

#include <fmt/format.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "scene.hpp"
#include "weingarten/hyperbolic_family.hpp"
#include "weingarten/parallel_lw.hpp"
#include "weingarten/profiles.hpp"
#include "weingarten/specfun.hpp"

namespace weingarten::cli {

bool Check::pass() const
{
    if (!std::isfinite(value)) {
        return false;
    }
    return lower_bound ? value > tolerance : value <= tolerance;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;

double interior(Range r, std::size_t i, std::size_t n)
{
    return r.lo + (r.hi - r.lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
}

double angle(std::size_t i)
{
    const double x = static_cast<double>(i) * kGolden;
    return kTwoPi * (x - std::floor(x));
}

double pick(double value, double fallback)
{
    return value > 0.0 ? value : fallback;
}

std::vector<int> signs(const VerifyOptions& o)
{
    if (o.K) {
        if (*o.K != 1 && *o.K != -1) {
            throw BadInput(fmt::format("--K must be 1 or -1, got {}", *o.K));
        }
        return {*o.K};
    }
    return {1, -1};
}

void cgc_profile_checks(const std::string& prefix, const ProfileCurve& profile, Range range, std::vector<Check>& out)
{
    constexpr std::size_t n = 1000;
    const auto surf = revolve(profile);
    const bool minimal = profile.family() == ProfileFamily::Catenoid;
    double curvature = 0.0;
    double ode = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = interior(range, i, n);
        const CurvatureData cd = curvatures(surf->jet(s, angle(i)));
        if (!minimal) {
            curvature = std::max(curvature, std::abs(cd.K - *profile.K_target()));
            const OdeResiduals res = ode_residuals(profile, s);
            ode = std::max({ode, std::abs(res.r), std::abs(res.h)});
        } else {
            curvature = std::max(curvature, std::abs(cd.H));
        }
    }
    if (!minimal) {
        out.push_back({prefix + "max_abs_K_error", curvature, 1e-8});
        out.push_back({prefix + "max_ode_residual", ode, 1e-10});
    } else {
        out.push_back({prefix + "max_abs_H", curvature, 1e-9});
    }
}

std::vector<Check> verify_specfun(const VerifyOptions& o)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> S(-20.0, 20.0);
    std::uniform_real_distribution<double> P(0.05, 0.95);
    double pyth = 0.0;
    double dn_id = 0.0;
    double quarter = 0.0;
    double deriv = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double p = o.p > 0.0 ? o.p : P(rng);
        const EllipticModulus m = make_modulus(p);
        const double s = S(rng);
        const JacobiTriple j = jacobi(s, m);
        pyth = std::max(pyth, std::abs(j.sn * j.sn + j.cn * j.cn - 1.0));
        dn_id = std::max(dn_id, std::abs(j.dn * j.dn + p * p * j.sn * j.sn - 1.0));
        constexpr double h = 1e-5;
        const JacobiTriple a = jacobi(s + h, m);
        const JacobiTriple b = jacobi(s - h, m);
        deriv = std::max({deriv, std::abs((a.sn - b.sn) / (2 * h) - j.cn * j.dn),
                          std::abs((a.cn - b.cn) / (2 * h) + j.sn * j.dn),
                          std::abs((a.dn - b.dn) / (2 * h) + p * p * j.sn * j.cn),
                          std::abs((a.am - b.am) / (2 * h) - j.dn)});
        if (i % 100 == 0) {
            const JacobiTriple k = jacobi(m.complete_K(), m);
            quarter = std::max({quarter, std::abs(k.sn - 1.0), std::abs(k.cn), std::abs(k.dn - m.q())});
        }
    }
    return {{"sn2_plus_cn2", pyth, 1e-12},
            {"dn2_plus_p2sn2", dn_id, 1e-12},
            {"quarter_period", quarter, 1e-12},
            {"finite_difference_derivatives", deriv, 1e-6}};
}

std::vector<Check> verify_profile_family(const VerifyOptions& o)
{
    std::vector<Check> out;
    const std::string& f = o.target;
    if (f == "sphere" || f == "pseudosphere" || f == "catenoid") {
        FamilySpec spec;
        spec.family = f;
        const ResolvedProfile rp = resolve_profile(spec);
        cgc_profile_checks("", rp.profile, default_range(spec, rp), out);
        return out;
    }
    for (int K : signs(o)) {
        FamilySpec spec;
        spec.family = f;
        spec.K = K;
        spec.p = pick(o.p, 0.5);
        const ResolvedProfile rp = resolve_profile(spec);
        cgc_profile_checks(fmt::format("K{:+d}/", K), rp.profile, default_range(spec, rp), out);
    }
    return out;
}

std::vector<Check> verify_bonnet(const VerifyOptions& o)
{
    const EllipticModulus m = make_modulus(pick(o.p, 0.6));
    const auto base = revolve(profile_dn(+1, m));
    const LWCoefficients lw{1.0, 0.0, -1.0};
    const LWClass cls = classify(lw);
    const double pK = m.p() * m.complete_K();

    std::vector<Check> out;
    double offset_error = 0.0;
    for (const LabeledOffset& off : cls.offsets) {
        if (off.label != "cmc") {
            continue;
        }
        offset_error = std::max(offset_error, std::abs(std::abs(off.t) - 1.0));
        const OffsetSurface shifted(base, off.t);
        double worst = 0.0;
        constexpr std::size_t n = 400;
        for (std::size_t i = 0; i < n; ++i) {
            // one period [-pK, 3pK) without the cusps at pK and -pK
            const double s = -pK + 4.0 * pK * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
            if (base->profile().distance_to_singular(s) < 0.05) {
                continue;
            }
            const CurvatureData cd = curvatures(shifted.jet(s, angle(i)));
            worst = std::max(worst, std::abs(std::abs(cd.H) - 0.5));
        }
        out.push_back({fmt::format("cmc_offset_{}/max_abs_H_minus_half", num(off.t)), worst, 1e-7});
    }
    out.push_back({"cmc_offsets_at_unit_distance", offset_error, 1e-12});
    return out;
}

void tubular_checks(const Surface& surf, double rho, std::vector<Check>& out)
{
    const LWCoefficients lw{1.0, 1.0 / rho, 1.0 / (rho * rho)};
    const auto grid = param_grid(0.0, kTwoPi, 40, 0.0, kTwoPi, 25);
    out.push_back({"lw_residual", lw_residual(surf, lw, grid), 1e-9});
    double constant = 0.0;
    for (const ParamPoint& pt : grid) {
        const CurvatureData cd = curvatures(surf.jet(pt.u, pt.v));
        constant =
            std::max(constant, std::min(std::abs(lw.a * cd.kappa1 + lw.b), std::abs(lw.a * cd.kappa2 + lw.b)));
    }
    out.push_back({"constant_principal_curvature", constant, 1e-8});
}

std::vector<Check> verify_cylinder(const VerifyOptions& o)
{
    const double rho = pick(o.rho, 2.0);
    const auto cyl = tube(straight_line(Vec3::Zero(), Vec3::UnitZ()), rho);
    std::vector<Check> out;
    tubular_checks(*cyl, rho, out);
    return out;
}

std::vector<Check> verify_torus(const VerifyOptions& o)
{
    const double rho = pick(o.rho, 1.0);
    const double R = o.R;
    const auto torus = tube(circle_curve(R), rho);
    std::vector<Check> out;
    tubular_checks(*torus, rho, out);
    const double lo = -1.0 / (rho * (R - rho));
    const double hi = 1.0 / (rho * (R + rho));
    double excess = 0.0;
    for (const ParamPoint& pt : param_grid(0.0, kTwoPi, 64, 0.0, kTwoPi, 64)) {
        const double K = curvatures(torus->jet(pt.u, pt.v)).K;
        excess = std::max({excess, lo - K, K - hi});
    }
    out.push_back({"K_outside_bounds", excess, 1e-12});
    return out;
}

struct Sampled {
    std::shared_ptr<const Surface> surface;
    std::vector<ParamPoint> samples;
};

std::vector<ParamPoint> profile_samples(const ProfileCurve& profile, Range range, std::size_t n, double margin)
{
    std::vector<ParamPoint> out;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = interior(range, i, n);
        if (profile.distance_to_singular(s) > margin) {
            out.push_back({s, angle(i)});
        }
    }
    return out;
}

std::vector<Check> verify_cayley_hamilton(const VerifyOptions&)
{
    const EllipticModulus m = make_modulus(0.5);
    std::vector<Sampled> cases;
    const auto add = [&cases](const ProfileCurve& prof, Range r) {
        cases.push_back({revolve(prof), profile_samples(prof, r, 200, 0.05)});
    };
    add(profile_sphere(), {-3.0, 3.0});
    add(profile_pseudosphere(), {0.2, 3.0});
    add(profile_catenoid(), {-2.0, 2.0});
    add(profile_dn(+1, m), {-1.5, 1.5});
    add(profile_cn(-1, m), {0.1, 1.6});
    const FamilyMember member = family_member(m, 1.0);
    add(member.profile, {0.0, member.s_period});
    cases.push_back({tube(circle_curve(3.0), 1.0), param_grid(0.0, kTwoPi, 15, 0.0, kTwoPi, 15)});
    cases.push_back({tube(helix_curve(2.0, 0.7), 0.4), param_grid(-2.0, 2.0, 15, 0.0, kTwoPi, 15)});
    cases.push_back({std::make_shared<OffsetSurface>(cases[3].surface, 0.3), cases[3].samples});

    double worst = 0.0;
    for (const Sampled& c : cases) {
        for (const ParamPoint& pt : c.samples) {
            const SurfaceJet jet = c.surface->jet(pt.u, pt.v);
            worst = std::max(worst, cayley_hamilton_residual(forms(jet), curvatures(jet)));
        }
    }
    return {{"max_cayley_hamilton_residual", worst, 1e-9}};
}

std::vector<Check> verify_parallel_consistency(const VerifyOptions&)
{
    struct Case {
        std::string name;
        Sampled sampled;
        LWCoefficients lw;
    };
    const EllipticModulus m = make_modulus(0.6);
    const double pK = m.p() * m.complete_K();
    std::vector<Case> cases;
    // Finite-difference jets lose accuracy near cusps, so samples keep 0.5
    // away from them.
    const auto add = [&cases](std::string name, const ProfileCurve& prof, LWCoefficients lw, Range r) {
        cases.push_back({std::move(name), {revolve(prof), profile_samples(prof, r, 40, 0.5)}, lw});
    };
    add("sphere", profile_sphere(), {1, 0, -1}, {-2.0, 2.0});
    add("pseudosphere", profile_pseudosphere(), {1, 0, 1}, {0.5, 1.8});
    add("dn+", profile_dn(+1, m), {1, 0, -1}, {-pK, pK});
    add("dn-", profile_dn(-1, m), {1, 0, 1}, {0.0, 2.0 * pK});
    add("catenoid", profile_catenoid(), {0, 1, 0}, {-1.5, 1.5});
    cases.push_back({"torus", {tube(circle_curve(3.0), 1.0), param_grid(0.0, 6.0, 8, 0.0, 6.0, 8)}, {1, 1, 1}});

    std::vector<Check> out;
    for (const Case& c : cases) {
        double worst = 0.0;
        for (double t : {-0.2, -0.1, 0.05, 0.1, 0.2}) {
            const OffsetSurface offset(c.sampled.surface, t);
            const LWCoefficients tr = transform_coefficients(c.lw, t);
            const PointMap map = [&offset](double u, double v) { return offset.point(u, v); };
            for (const ParamPoint& pt : c.sampled.samples) {
                const CurvatureData base = curvatures(c.sampled.surface->jet(pt.u, pt.v));
                const double d = 1.0 - 2.0 * t * base.H + t * t * base.K;
                if (std::abs(d) < 0.05) {
                    continue;  // too close to the focal set for a finite-difference jet
                }
                const CurvatureData cd = curvatures(fd_jet(map, pt.u, pt.v, 1e-4));
                const double H = (d > 0.0 ? 1.0 : -1.0) * cd.H;
                worst = std::max(worst, std::abs(tr.a * cd.K + 2.0 * tr.b * H + tr.c));
            }
        }
        out.push_back({c.name + "/max_transformed_triple_residual", worst, 1e-6});
    }

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::uniform_real_distribution<double> T(-3.0, 3.0);
    double ulps = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const LWCoefficients lw{U(rng), U(rng), U(rng)};
        const double t = T(rng);
        const LWCoefficients tr = transform_coefficients(lw, t);
        const double scale = std::max({lw.b * lw.b, std::abs(lw.a * lw.c), tr.b * tr.b, std::abs(tr.a * tr.c),
                                       t * t * lw.c * lw.c, std::abs(2.0 * t * lw.b * lw.c)});
        if (scale > 0.0) {
            const double err = std::abs(discriminant(tr) - discriminant(lw));
            ulps = std::max(ulps, err / (std::numeric_limits<double>::epsilon() * scale));
        }
    }
    out.push_back({"discriminant_invariance_ulps", ulps, 4.0, false, true});
    return out;
}

std::vector<Check> verify_hyperbolic(const VerifyOptions& o)
{
    const EllipticModulus m = make_modulus(pick(o.p, 0.5));
    const FamilyMember member = family_member(m, o.t);
    std::vector<Check> out;
    // h(s_period) - h(0) by quadrature of h'
    const double numeric = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&member](double s) { return member.profile.eval(s).dh; }, 0.0, member.s_period, 15, 1e-14);
    out.push_back({"h_translation_error", std::abs(member.h_translation - numeric), 1e-9});
    if (member.singular) {
        const auto root = locate_singularity(member);
        out.push_back({"singularity_root_residual",
                       root ? member_speed(member, *root) : std::numeric_limits<double>::infinity(), 1e-10});
        return out;
    }
    const ScanMinimum radius = min_radius(member);
    if (member.reaches_axis) {
        out.push_back({"min_radius_nonpositive", radius.value, 0.0});
        return out;
    }
    out.push_back({"min_speed", min_speed(member).value, 1e-3, true});
    out.push_back({"min_radius", radius.value, 1e-3, true});
    const RevolvedSurface surf(member.profile);
    const auto grid = param_grid(0.0, member.s_period, 100, 0.0, kTwoPi, 10);
    // The triple refers to the offset normal nu; flip it where the revolved
    // surface is oriented the other way.
    const Vec3 n = curvatures(surf.jet(0.0, 0.0)).n;
    const Vec2 nu = base_frame(m, 0.0).nu;
    const bool aligned = n.x() * nu.x() + n.z() * nu.y() > 0.0;
    out.push_back({"lw_residual", lw_residual(surf, aligned ? member.lw : flip_orientation(member.lw), grid), 1e-7});
    return out;
}

std::vector<Check> verify_corrupted(const VerifyOptions&)
{
    // A sphere profile scaled by 1.001 no longer has K = 1.
    const ProfileCurve sphere = profile_sphere();
    ProfileCurve corrupted(sphere.metadata(), [sphere](double s) {
        ProfilePoint pt = sphere.eval(s);
        pt.r *= 1.001;
        pt.h *= 1.001;
        pt.dr *= 1.001;
        pt.dh *= 1.001;
        pt.ddr *= 1.001;
        pt.ddh *= 1.001;
        return pt;
    });
    std::vector<Check> out;
    cgc_profile_checks("", corrupted, {-3.0, 3.0}, out);
    return out;
}

using Runner = std::function<std::vector<Check>(const VerifyOptions&)>;

Runner runner(const std::string& target)
{
    if (target == "specfun") {
        return verify_specfun;
    }
    if (target == "sphere" || target == "pseudosphere" || target == "cn" || target == "dn" ||
        target == "catenoid") {
        return verify_profile_family;
    }
    if (target == "bonnet") {
        return verify_bonnet;
    }
    if (target == "cylinder") {
        return verify_cylinder;
    }
    if (target == "torus") {
        return verify_torus;
    }
    if (target == "cayley-hamilton") {
        return verify_cayley_hamilton;
    }
    if (target == "parallel-consistency") {
        return verify_parallel_consistency;
    }
    if (target == "hyperbolic") {
        return verify_hyperbolic;
    }
    if (target == "corrupted-fixture") {
        return verify_corrupted;
    }
    throw BadInput(fmt::format("unknown verify target '{}'", target));
}

}  // namespace

std::vector<Check> run_verify(const VerifyOptions& options)
{
    std::vector<Check> checks;
    if (options.target == "all") {
        for (const std::string& target : kVerifyTargets) {
            if (target == "all" || target == "corrupted-fixture") {
                continue;
            }
            VerifyOptions sub = options;
            sub.target = target;
            for (Check c : runner(target)(sub)) {
                c.name = target + "/" + c.name;
                checks.push_back(std::move(c));
            }
        }
    } else {
        checks = runner(options.target)(options);
    }
    if (options.tolerance) {
        for (Check& c : checks) {
            if (!c.lower_bound && !c.fixed_tolerance) {
                c.tolerance = *options.tolerance;
            }
        }
    }
    return checks;
}

}  // namespace weingarten::cli
