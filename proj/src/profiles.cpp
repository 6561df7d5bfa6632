#include "weingarten/profiles.hpp"

#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "weingarten/errors.hpp"

namespace weingarten {

std::string_view to_string(ProfileFamily family)
{
    switch (family) {
    case ProfileFamily::CnPlus: return "cn+";
    case ProfileFamily::CnMinus: return "cn-";
    case ProfileFamily::Sphere: return "sphere";
    case ProfileFamily::Pseudosphere: return "pseudosphere";
    case ProfileFamily::DnPlus: return "dn+";
    case ProfileFamily::DnMinus: return "dn-";
    case ProfileFamily::Catenoid: return "catenoid";
    case ProfileFamily::NumericOde: return "numeric-ode";
    case ProfileFamily::HyperbolicOffset: return "hyperbolic-offset";
    }
    return "unknown";
}

double SingularLattice::distance(double s) const
{
    if (spacing > 0.0) {
        return std::abs(std::remainder(s - offset, spacing));
    }
    return std::abs(s - offset);
}

ProfileCurve::ProfileCurve(Metadata meta, Evaluator eval) : meta_(std::move(meta)), eval_(std::move(eval)) {}

ProfilePoint ProfileCurve::eval(double s) const
{
    if (!meta_.domain.contains(s)) {
        throw DomainError(fmt::format("{} profile evaluated at s = {:.9g} outside ({:.9g}, {:.9g})",
                                      to_string(meta_.family), s, meta_.domain.lo, meta_.domain.hi));
    }
    return eval_(s);
}

ProfileCurve ProfileCurve::with_domain(ParamInterval domain) const
{
    Metadata meta = meta_;
    meta.domain = domain;
    return ProfileCurve(std::move(meta), eval_);
}

double ProfileCurve::distance_to_singular(double s) const
{
    if (!meta_.singular) {
        return std::numeric_limits<double>::infinity();
    }
    return meta_.singular->distance(s);
}

namespace {

int checked_sign(int sign)
{
    if (sign != 1 && sign != -1) {
        throw DomainError(fmt::format("profile sign must be +1 or -1, got {}", sign));
    }
    return sign;
}

}  // namespace

ProfileCurve profile_cn(int sign, const EllipticModulus& m)
{
    checked_sign(sign);
    const double p = m.p();
    const double K = m.complete_K();

    ProfileCurve::Metadata meta;
    meta.family = sign > 0 ? ProfileFamily::CnPlus : ProfileFamily::CnMinus;
    meta.K_target = sign;
    // K = -1 swaps the roles of C and 1 - C.
    meta.C = sign > 0 ? p * p : 1.0 - p * p;
    meta.h_sign = sign;
    meta.modulus = m;
    meta.s_period = 4.0 * K;
    meta.domain = {-K, K};
    if (sign < 0) {
        // r' and h' = -p^2 sn^2 vanish together where sn = 0.
        meta.singular = SingularLattice{0.0, 2.0 * K};
    }

    const double shift = sign > 0 ? 0.0 : 1.0;
    return ProfileCurve(std::move(meta), [m, p, shift](double s) {
        const JacobiTriple j = jacobi(s, m);
        ProfilePoint pt;
        pt.r = p * j.cn;
        pt.h = elliptic_E_am(s, m) - shift * s;
        pt.dr = -p * j.sn * j.dn;
        pt.dh = j.dn * j.dn - shift;
        pt.ddr = -p * j.cn * (j.dn * j.dn - p * p * j.sn * j.sn);
        pt.ddh = -2.0 * p * p * j.sn * j.cn * j.dn;
        return pt;
    });
}

namespace {

ProfileCurve sech_profile(ProfileFamily family, double K, double C, double shift)
{
    ProfileCurve::Metadata meta;
    meta.family = family;
    meta.K_target = K;
    meta.C = C;
    meta.h_sign = K;
    if (K < 0) {
        meta.singular = SingularLattice{0.0, 0.0};
    }
    return ProfileCurve(std::move(meta), [shift](double s) {
        const double sech = 1.0 / std::cosh(s);
        const double th = std::tanh(s);
        ProfilePoint pt;
        pt.r = sech;
        pt.h = th - shift * s;
        pt.dr = -sech * th;
        pt.dh = sech * sech - shift;
        pt.ddr = sech * (th * th - sech * sech);
        pt.ddh = -2.0 * sech * sech * th;
        return pt;
    });
}

}  // namespace

ProfileCurve profile_sphere()
{
    return sech_profile(ProfileFamily::Sphere, 1.0, 1.0, 0.0);
}

ProfileCurve profile_pseudosphere()
{
    return sech_profile(ProfileFamily::Pseudosphere, -1.0, 0.0, 1.0);
}

ProfileCurve profile_dn(int sign, const EllipticModulus& m)
{
    checked_sign(sign);
    const double p = m.p();
    const double K = m.complete_K();

    ProfileCurve::Metadata meta;
    meta.family = sign > 0 ? ProfileFamily::DnPlus : ProfileFamily::DnMinus;
    meta.K_target = sign;
    meta.C = sign > 0 ? 1.0 / (p * p) : 1.0 - 1.0 / (p * p);
    meta.h_sign = sign;
    meta.modulus = m;
    meta.s_period = 2.0 * p * K;
    // speed^2 = cn^2 (K = +1) or sn^2 (K = -1) at s/p
    meta.singular = SingularLattice{sign > 0 ? p * K : 0.0, 2.0 * p * K};

    const double slope = sign > 0 ? (1.0 - p * p) / (p * p) : 1.0 / (p * p);
    return ProfileCurve(std::move(meta), [m, p, slope](double s) {
        const double x = s / p;
        const JacobiTriple j = jacobi(x, m);
        ProfilePoint pt;
        pt.r = j.dn / p;
        pt.h = elliptic_E_am(x, m) / p - slope * s;
        pt.dr = -j.sn * j.cn;
        pt.dh = j.dn * j.dn / (p * p) - slope;
        pt.ddr = -(j.dn / p) * (j.cn * j.cn - j.sn * j.sn);
        pt.ddh = -2.0 * j.sn * j.cn * j.dn / p;
        return pt;
    });
}

ProfileCurve profile_catenoid()
{
    ProfileCurve::Metadata meta;
    meta.family = ProfileFamily::Catenoid;
    meta.K_target = 0.0;
    return ProfileCurve(std::move(meta), [](double s) {
        ProfilePoint pt;
        pt.r = std::cosh(s);
        pt.h = s;
        pt.dr = std::sinh(s);
        pt.dh = 1.0;
        pt.ddr = std::cosh(s);
        pt.ddh = 0.0;
        return pt;
    });
}

RevolvedSurface::RevolvedSurface(ProfileCurve profile, double eps) : profile_(std::move(profile)), eps_(eps) {}

Vec3 RevolvedSurface::point(double s, double theta) const
{
    const ProfilePoint pt = profile_.eval(s);
    return {pt.r * std::cos(theta), pt.r * std::sin(theta), pt.h};
}

SurfaceJet RevolvedSurface::jet(double s, double theta) const
{
    const ProfilePoint pt = profile_.eval(s);
    const double speed = std::hypot(pt.dr, pt.dh);
    if (!(std::abs(pt.r) * speed > eps_)) {
        throw DegenerateJet(fmt::format("{} surface is not immersed at s = {:.9g} (r = {:.3g}, |profile'| = {:.3g})",
                                        to_string(profile_.family()), s, pt.r, speed));
    }
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    SurfaceJet jet;
    jet.u = s;
    jet.v = theta;
    jet.x = {pt.r * c, pt.r * sn, pt.h};
    jet.x_u = {pt.dr * c, pt.dr * sn, pt.dh};
    jet.x_v = {-pt.r * sn, pt.r * c, 0.0};
    jet.x_uu = {pt.ddr * c, pt.ddr * sn, pt.ddh};
    jet.x_uv = {-pt.dr * sn, pt.dr * c, 0.0};
    jet.x_vv = {-pt.r * c, -pt.r * sn, 0.0};
    return jet;
}

std::shared_ptr<const RevolvedSurface> revolve(ProfileCurve profile)
{
    return std::make_shared<const RevolvedSurface>(std::move(profile));
}

double revolution_K(const ProfileCurve& profile, double s)
{
    const ProfilePoint pt = profile.eval(s);
    if (std::abs(pt.dr) <= 1e-12) {
        throw FormulaSingular(fmt::format("r'({:.9g}) = 0; use the jet curvature instead", s));
    }
    const double S = pt.dr * pt.dr + pt.dh * pt.dh;
    // (r'^2 / S)' = 2 r' (r'' S - r' (r' r'' + h' h'')) / S^2
    const double ratio_prime = 2.0 * pt.dr * (pt.ddr * S - pt.dr * (pt.dr * pt.ddr + pt.dh * pt.ddh)) / (S * S);
    return -ratio_prime / (2.0 * pt.r * pt.dr);
}

OdeResiduals ode_residuals(const ProfileCurve& profile, double s)
{
    if (!profile.K_target() || !profile.C()) {
        throw DomainError(fmt::format("{} profile declares no (K, C)", to_string(profile.family())));
    }
    const double K = *profile.K_target();
    const double C = *profile.C();
    const ProfilePoint pt = profile.eval(s);
    const double speed2 = (1.0 - C) + K * pt.r * pt.r;
    OdeResiduals res;
    res.r = pt.dr * pt.dr - speed2 * (C - K * pt.r * pt.r);
    res.h = pt.dh - profile.h_sign() * speed2;
    return res;
}

namespace {

// Dense output of the numerically integrated profile on a uniform grid.
struct OdeSolution {
    CgcParameters params;
    double h_sign;
    double step;
    std::vector<double> r, dr, h;

    double dh_at(double rr) const { return h_sign * ((1.0 - params.C) + params.K * rr * rr); }
    double ddr_at(double rr) const
    {
        return params.K * rr * (2.0 * params.C - 1.0 - 2.0 * params.K * rr * rr);
    }

    ProfilePoint eval(double s) const
    {
        const auto last = r.size() - 1;
        const auto i = std::min<std::size_t>(static_cast<std::size_t>(std::max(0.0, std::floor(s / step))), last - 1);
        const double t = (s - static_cast<double>(i) * step) / step;
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        const double d00 = (6 * t2 - 6 * t) / step;
        const double d10 = 3 * t2 - 4 * t + 1;
        const double d01 = (-6 * t2 + 6 * t) / step;
        const double d11 = 3 * t2 - 2 * t;

        ProfilePoint pt;
        pt.r = h00 * r[i] + h10 * step * dr[i] + h01 * r[i + 1] + h11 * step * dr[i + 1];
        pt.dr = d00 * r[i] + d10 * dr[i] + d01 * r[i + 1] + d11 * dr[i + 1];
        const double dh0 = dh_at(r[i]);
        const double dh1 = dh_at(r[i + 1]);
        pt.h = h00 * h[i] + h10 * step * dh0 + h01 * h[i + 1] + h11 * step * dh1;
        pt.dh = dh_at(pt.r);
        pt.ddr = ddr_at(pt.r);
        pt.ddh = h_sign * 2.0 * params.K * pt.r * pt.dr;
        return pt;
    }
};

}  // namespace

ProfileCurve profile_from_ode(const CgcParameters& params, double r0, int sign_dr0, double s_max, double step,
                              double h_sign)
{
    checked_sign(sign_dr0);
    constexpr double kSlack = 1e-12;
    const double K = params.K;
    const double C = params.C;
    const double angle = C - K * r0 * r0;
    const double speed2 = (1.0 - C) + K * r0 * r0;
    if (angle < -kSlack || angle > 1.0 + kSlack || speed2 < -kSlack) {
        throw DomainError(fmt::format("initial data violate 0 <= C - K r0^2 <= 1 <= ...: K = {}, C = {}, r0 = {}",
                                      K, C, r0));
    }
    if (!(step > 0.0) || !(s_max > 0.0)) {
        throw DomainError("profile_from_ode needs step > 0 and s_max > 0");
    }

    auto sol = std::make_shared<OdeSolution>();
    sol->params = params;
    sol->h_sign = h_sign;
    const auto n = static_cast<std::size_t>(std::ceil(s_max / step));
    sol->step = s_max / static_cast<double>(n);

    using State = std::array<double, 3>;  // r, r', h
    State y{r0, sign_dr0 * std::sqrt(std::max(0.0, speed2 * angle)), 0.0};
    const auto rhs = [&sol](const State& x, State& dxdt, double /*s*/) {
        dxdt[0] = x[1];
        dxdt[1] = sol->ddr_at(x[0]);
        dxdt[2] = sol->dh_at(x[0]);
    };
    boost::numeric::odeint::runge_kutta4<State> stepper;
    sol->r.reserve(n + 1);
    sol->dr.reserve(n + 1);
    sol->h.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        sol->r.push_back(y[0]);
        sol->dr.push_back(y[1]);
        sol->h.push_back(y[2]);
        if (i < n) {
            stepper.do_step(rhs, y, static_cast<double>(i) * sol->step, sol->step);
        }
    }

    ProfileCurve::Metadata meta;
    meta.family = ProfileFamily::NumericOde;
    meta.K_target = K;
    meta.C = C;
    meta.h_sign = h_sign;
    // closed interval [0, s_max] up to rounding
    meta.domain = {-1e-12, s_max + 1e-12};
    return ProfileCurve(std::move(meta), [sol](double s) { return sol->eval(s); });
}

SpaceCurve::SpaceCurve(Evaluator eval, double max_curvature) : eval_(std::move(eval)), max_curvature_(max_curvature) {}

SpaceCurve straight_line(const Vec3& origin, const Vec3& direction)
{
    const Vec3 T = direction.normalized();
    // any unit vector orthogonal to T
    Vec3 N = T.unitOrthogonal();
    const Vec3 B = T.cross(N);
    return SpaceCurve(
        [origin, T, N, B](double u) {
            FrenetPoint fp;
            fp.position = origin + u * T;
            fp.tangent = T;
            fp.normal = N;
            fp.binormal = B;
            return fp;
        },
        0.0);
}

SpaceCurve circle_curve(double radius)
{
    if (!(radius > 0.0)) {
        throw DomainError("circle radius must be positive");
    }
    return SpaceCurve(
        [radius](double u) {
            const double c = std::cos(u);
            const double s = std::sin(u);
            FrenetPoint fp;
            fp.position = {radius * c, radius * s, 0.0};
            fp.tangent = {-s, c, 0.0};
            fp.normal = {-c, -s, 0.0};
            fp.binormal = {0.0, 0.0, 1.0};
            fp.speed = radius;
            fp.curvature = 1.0 / radius;
            return fp;
        },
        1.0 / radius);
}

SpaceCurve helix_curve(double radius, double pitch)
{
    if (!(radius > 0.0)) {
        throw DomainError("helix radius must be positive");
    }
    const double speed = std::hypot(radius, pitch);
    const double kappa = radius / (speed * speed);
    const double torsion = pitch / (speed * speed);
    return SpaceCurve(
        [radius, pitch, speed, kappa, torsion](double u) {
            const double c = std::cos(u);
            const double s = std::sin(u);
            FrenetPoint fp;
            fp.position = {radius * c, radius * s, pitch * u};
            fp.tangent = Vec3{-radius * s, radius * c, pitch} / speed;
            fp.normal = {-c, -s, 0.0};
            fp.binormal = Vec3{pitch * s, -pitch * c, radius} / speed;
            fp.speed = speed;
            fp.curvature = kappa;
            fp.torsion = torsion;
            return fp;
        },
        kappa);
}

TubeSurface::TubeSurface(SpaceCurve center, double rho) : center_(std::move(center)), rho_(rho)
{
    if (!(rho > 0.0)) {
        throw DomainError("tube radius must be positive");
    }
    if (rho * center_.max_curvature() >= 1.0) {
        throw ImmersionError(fmt::format("tube radius {:.9g} reaches the focal radius {:.9g} of its center curve", rho,
                                         1.0 / center_.max_curvature()));
    }
}

Vec3 TubeSurface::point(double u, double v) const
{
    const FrenetPoint f = center_.frenet(u);
    return f.position + rho_ * (f.normal * std::cos(v) - f.binormal * std::sin(v));
}

SurfaceJet TubeSurface::jet(double u, double v) const
{
    const FrenetPoint f = center_.frenet(u);
    const double c = std::cos(v);
    const double s = std::sin(v);
    const double sig = f.speed;
    const double kap = f.curvature;
    const double tor = f.torsion;
    const Vec3& T = f.tangent;
    const Vec3& N = f.normal;
    const Vec3 W = N * c - f.binormal * s;
    const Vec3 Wv = -N * s - f.binormal * c;

    SurfaceJet jet;
    jet.u = u;
    jet.v = v;
    jet.x = f.position + rho_ * W;
    jet.x_u = sig * (1.0 - rho_ * kap * c) * T - rho_ * sig * tor * Wv;
    jet.x_v = rho_ * Wv;
    jet.x_vv = -rho_ * W;
    // W_uv = sig (kappa sin v T + tau W)
    jet.x_uv = rho_ * sig * (kap * s * T + tor * W);
    jet.x_uu = (f.d_speed * (1.0 - rho_ * kap * c) - sig * rho_ * f.d_curvature * c) * T
               + sig * sig * kap * (1.0 - rho_ * kap * c) * N
               - rho_ * (f.d_speed * tor + sig * f.d_torsion) * Wv
               - rho_ * sig * sig * tor * (kap * s * T + tor * W);
    return jet;
}

std::shared_ptr<const TubeSurface> tube(SpaceCurve center, double rho)
{
    return std::make_shared<const TubeSurface>(std::move(center), rho);
}

}  // namespace weingarten
