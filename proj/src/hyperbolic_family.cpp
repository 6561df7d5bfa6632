#include "weingarten/hyperbolic_family.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include <fmt/format.h>

#include "weingarten/errors.hpp"

namespace weingarten {

PlaneCurveFrame base_frame(const EllipticModulus& m, double s)
{
    const double p = m.p();
    const double x = s / p;
    const JacobiTriple j = jacobi(x, m);
    PlaneCurveFrame f;
    f.xi = {j.dn / p, elliptic_E_am(x, m) / p - s / (p * p)};
    f.tau = {j.cn, j.sn};
    f.nu = {-j.sn, j.cn};
    f.speed = std::abs(j.sn);
    return f;
}

bool AxisCrossingRange::contains(double t) const
{
    return std::abs(t) >= bound;
}

bool SingularRange::contains(double t) const
{
    return std::abs(t) <= bound;
}

AxisCrossingRange axis_crossing_range(const EllipticModulus& m)
{
    return {m.q() / m.p()};
}

SingularRange singular_range(const EllipticModulus& m)
{
    return {m.p() / m.q()};
}

std::optional<OffsetInterval> safe_interval(const EllipticModulus& m)
{
    const double lo = m.p() / m.q();
    const double hi = m.q() / m.p();
    if (!(lo < hi)) {
        return std::nullopt;
    }
    return OffsetInterval{lo, hi};
}

std::string FamilyMember::status() const
{
    if (singular) {
        return "singular";
    }
    if (reaches_axis) {
        return "axis-crossing";
    }
    return "immersed";
}

FamilyMember family_member(const EllipticModulus& m, double t)
{
    const double p = m.p();
    const double K = m.complete_K();
    const double E = m.complete_E();
    const double s_period = (t == 0.0 ? 2.0 : 4.0) * p * K;

    ProfileCurve::Metadata meta;
    meta.family = ProfileFamily::HyperbolicOffset;
    meta.modulus = m;
    meta.s_period = s_period;

    ProfileCurve profile(std::move(meta), [m, p, t](double s) {
        const double x = s / p;
        const JacobiTriple j = jacobi(x, m);
        // (xi^t)' = -g tau, tau' = (dn/p) nu
        const double g = j.sn + (t / p) * j.dn;
        const double dg = j.cn * j.dn / p - t * j.sn * j.cn;
        ProfilePoint pt;
        pt.r = j.dn / p - t * j.sn;
        pt.h = elliptic_E_am(x, m) / p - s / (p * p) + t * j.cn;
        pt.dr = -g * j.cn;
        pt.dh = -g * j.sn;
        pt.ddr = -dg * j.cn + g * j.dn * j.sn / p;
        pt.ddh = -dg * j.sn - g * j.dn * j.cn / p;
        return pt;
    });

    FamilyMember out{m, t, std::move(profile), 0.0, 0.0, {}, false, false, false};
    out.s_period = s_period;
    out.h_translation = (s_period / (2.0 * p * K)) * (2.0 / p) * (E - K);
    out.lw = transform_coefficients({1.0, 0.0, 1.0}, t);
    out.singular = singular_range(m).contains(t);
    out.reaches_axis = axis_crossing_range(m).contains(t);
    const auto safe = safe_interval(m);
    out.in_safe_interval = safe && (safe->contains(t) || safe->mirrored().contains(t));
    return out;
}

double member_speed(const FamilyMember& member, double s)
{
    const double p = member.modulus.p();
    const JacobiTriple j = jacobi(s / p, member.modulus);
    return std::abs(j.sn + (member.t / p) * j.dn);
}

namespace {

template <class F>
ScanMinimum scan_minimum(F&& f, double period, std::size_t samples)
{
    samples = std::max<std::size_t>(samples, 3);
    const double ds = period / static_cast<double>(samples);
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const double value = f(static_cast<double>(i) * ds);
        if (value < best_value) {
            best_value = value;
            best = i;
        }
    }
    const double centre = static_cast<double>(best) * ds;
    std::uintmax_t iters = 200;
    const auto refined =
        boost::math::tools::brent_find_minima(f, centre - ds, centre + ds, std::numeric_limits<double>::digits / 2, iters);
    if (refined.second < best_value) {
        return {refined.second, refined.first};
    }
    return {best_value, centre};
}

}  // namespace

ScanMinimum min_speed(const FamilyMember& member, std::size_t samples)
{
    return scan_minimum([&member](double s) { return member_speed(member, s); }, member.s_period, samples);
}

ScanMinimum min_radius(const FamilyMember& member, std::size_t samples)
{
    return scan_minimum([&member](double s) { return member.profile.eval(s).r; }, member.s_period, samples);
}

std::vector<double> singular_points(const FamilyMember& member, double lo, double hi, std::size_t samples_per_period)
{
    std::vector<double> roots;
    if (!(hi >= lo)) {
        return roots;
    }
    const double p = member.modulus.p();
    const double t = member.t;
    const auto g = [&member, p, t](double s) {
        const JacobiTriple j = jacobi(s / p, member.modulus);
        return j.sn + (t / p) * j.dn;
    };
    samples_per_period = std::max<std::size_t>(samples_per_period, 3);
    const auto n = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil((hi - lo) / member.s_period * static_cast<double>(samples_per_period))));
    const double ds = (hi - lo) / static_cast<double>(n);
    double prev = g(lo);
    if (prev == 0.0) {
        roots.push_back(lo);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const double s = i == n ? hi : lo + static_cast<double>(i) * ds;
        const double cur = g(s);
        if (cur == 0.0) {
            roots.push_back(s);
        } else if (prev != 0.0 && (prev < 0.0) != (cur < 0.0)) {
            std::uintmax_t iters = 200;
            const auto bracket = boost::math::tools::bisect(g, s - ds, s, boost::math::tools::eps_tolerance<double>(),
                                                            iters);
            roots.push_back(0.5 * (bracket.first + bracket.second));
        }
        prev = cur;
    }
    return roots;
}

std::optional<double> locate_singularity(const FamilyMember& member, std::size_t samples)
{
    const std::vector<double> roots = singular_points(member, 0.0, member.s_period, samples);
    if (roots.empty()) {
        return std::nullopt;
    }
    return roots.front();
}

namespace {

// Rounded to 0.01 with -0.00 folded into 0.00, so output bytes do not
// depend on the sign of a rounding error.
double centi(double v)
{
    return std::round(v * 100.0) / 100.0 + 0.0;
}

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string profile_svg(std::span<const FamilyMember> members, std::optional<Viewport> viewport, int periods,
                        int samples_per_period)
{
    if (members.empty()) {
        throw DomainError("profile_svg needs at least one member");
    }
    periods = std::max(periods, 1);
    samples_per_period = std::max(samples_per_period, 2);

    std::vector<std::vector<Vec2>> curves;
    curves.reserve(members.size());
    for (const FamilyMember& member : members) {
        std::vector<Vec2> pts;
        const int n = periods * samples_per_period;
        pts.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            const double s = member.s_period * static_cast<double>(i) / static_cast<double>(samples_per_period);
            const ProfilePoint pt = member.profile.eval(s);
            pts.emplace_back(pt.h, pt.r);
        }
        curves.push_back(std::move(pts));
    }

    return polyline_svg(curves, viewport);
}

std::string polyline_svg(std::span<const std::vector<Vec2>> curves, std::optional<Viewport> viewport)
{
    if (curves.empty()) {
        throw DomainError("polyline_svg needs at least one curve");
    }
    Viewport vp = viewport.value_or(Viewport{});
    if (!viewport || !(vp.h_max > vp.h_min) || !(vp.r_max > vp.r_min)) {
        double h_lo = std::numeric_limits<double>::infinity();
        double h_hi = -h_lo;
        double r_lo = h_lo;
        double r_hi = -h_lo;
        for (const auto& c : curves) {
            for (const Vec2& q : c) {
                h_lo = std::min(h_lo, q.x());
                h_hi = std::max(h_hi, q.x());
                r_lo = std::min(r_lo, q.y());
                r_hi = std::max(r_hi, q.y());
            }
        }
        r_lo = std::min(r_lo, 0.0);  // keep the rotation axis in view
        const double mh = 0.05 * std::max(h_hi - h_lo, 1e-9);
        const double mr = 0.05 * std::max(r_hi - r_lo, 1e-9);
        vp.h_min = h_lo - mh;
        vp.h_max = h_hi + mh;
        vp.r_min = r_lo - mr;
        vp.r_max = r_hi + mr;
    }

    // Uniform scale keeps the profile geometry undistorted.
    const double scale = std::min(vp.width / (vp.h_max - vp.h_min), vp.height / (vp.r_max - vp.r_min));
    const double off_x = 0.5 * (vp.width - scale * (vp.h_max - vp.h_min));
    const double off_y = 0.5 * (vp.height - scale * (vp.r_max - vp.r_min));

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n",
        vp.width, vp.height);
    for (std::size_t k = 0; k < curves.size(); ++k) {
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"",
                           kPalette[k % kPalette.size()]);
        bool first = true;
        for (const Vec2& q : curves[k]) {
            const double x = off_x + scale * (q.x() - vp.h_min);
            const double y = vp.height - (off_y + scale * (q.y() - vp.r_min));
            out += fmt::format("{}{:.2f},{:.2f}", first ? "" : " ", centi(x), centi(y));
            first = false;
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace weingarten
