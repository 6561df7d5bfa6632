#include "weingarten/parallel_lw.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "weingarten/errors.hpp"

namespace weingarten {

double LWCoefficients::magnitude() const
{
    return std::max({std::abs(a), std::abs(b), std::abs(c)});
}

double LWCoefficients::discriminant() const
{
    // b^2 - ac with the rounding error of a*c recovered by fma.
    const double ac = a * c;
    const double err = std::fma(-a, c, ac);
    return std::fma(b, b, -ac) + err;
}

double discriminant(const LWCoefficients& lw)
{
    return lw.discriminant();
}

LWCoefficients transform_coefficients(const LWCoefficients& lw, double t)
{
    return {lw.a + 2.0 * t * lw.b + t * t * lw.c, lw.b + t * lw.c, lw.c};
}

LWCoefficients flip_orientation(const LWCoefficients& lw)
{
    return {lw.a, -lw.b, lw.c};
}

namespace {

double focal_factor(double K, double H, double t, double tol)
{
    const double d = 1.0 - 2.0 * t * H + t * t * K;
    if (!(std::abs(d) > tol)) {
        throw FocalPoint(fmt::format("offset t = {:.9g} is focal: 1 - 2tH + t^2 K = {:.3g}", t, d));
    }
    return d;
}

}  // namespace

ParallelCurvatures parallel_curvatures(double K, double H, double t, double tol)
{
    const double d = focal_factor(K, H, t, tol);
    return {K / d, (H - t * K) / d};
}

SurfaceJet parallel_point(const SurfaceJet& jet, const CurvatureData& curv, double t, double tol)
{
    focal_factor(curv.K, curv.H, t, tol);
    const FundamentalForms ff = forms(jet);
    const Mat2 S = shape_operator(ff);
    const Vec3& n = curv.n;
    // Weingarten equations: n_u = -(S00 x_u + S10 x_v), n_v = -(S01 x_u + S11 x_v)
    const Vec3 n_u = -(S(0, 0) * jet.x_u + S(1, 0) * jet.x_v);
    const Vec3 n_v = -(S(0, 1) * jet.x_u + S(1, 1) * jet.x_v);

    SurfaceJet out = jet;
    out.x = jet.x + t * n;
    out.x_u = jet.x_u + t * n_u;
    out.x_v = jet.x_v + t * n_v;
    // n_ij . n = -III_ij
    out.x_uu = jet.x_uu - t * ff.third(0, 0) * n;
    out.x_uv = jet.x_uv - t * ff.third(0, 1) * n;
    out.x_vv = jet.x_vv - t * ff.third(1, 1) * n;
    return out;
}

OffsetSurface::OffsetSurface(std::shared_ptr<const Surface> base, double t, double focal_tol)
    : base_(std::move(base)), t_(t), focal_tol_(focal_tol)
{
}

Vec3 OffsetSurface::point(double u, double v) const
{
    const SurfaceJet j = base_->jet(u, v);
    return j.x + t_ * normal(j);
}

SurfaceJet OffsetSurface::jet(double u, double v) const
{
    const SurfaceJet j = base_->jet(u, v);
    return parallel_point(j, curvatures(j), t_, focal_tol_);
}

double OffsetSurface::orientation(double u, double v) const
{
    const CurvatureData cd = curvatures(base_->jet(u, v));
    return focal_factor(cd.K, cd.H, t_, focal_tol_) > 0.0 ? 1.0 : -1.0;
}

std::string to_string(LWKind kind)
{
    switch (kind) {
    case LWKind::Tubular: return "Tubular";
    case LWKind::ParallelToMinimal: return "ParallelToMinimal";
    case LWKind::ParallelToCGC: return "ParallelToCGC";
    }
    return "Unknown";
}

LWClass classify(const LWCoefficients& lw, double tol)
{
    const double mag = lw.magnitude();
    if (mag == 0.0) {
        throw InvalidTriple("the zero triple (0, 0, 0) imposes no condition");
    }
    const double delta = lw.discriminant();
    LWClass out;
    if (std::abs(delta) <= tol * mag * mag) {
        out.kind = LWKind::Tubular;
        if (std::abs(lw.a) > tol * mag) {
            out.constant_principal_curvature = -lw.b / lw.a;
        }
        return out;
    }
    if (std::abs(lw.c) <= tol * mag) {
        // Delta = b^2 != 0 here, so b != 0.
        out.kind = LWKind::ParallelToMinimal;
        out.offsets.push_back({"minimal", -lw.a / (2.0 * lw.b)});
        return out;
    }
    out.kind = LWKind::ParallelToCGC;
    out.offsets.push_back({"cgc", -lw.b / lw.c});
    out.K_at_cgc_offset = lw.c * lw.c / delta;
    if (delta > 0.0) {
        const double root = std::sqrt(delta);
        double t1 = (-lw.b + root) / lw.c;
        double t2 = (-lw.b - root) / lw.c;
        if (t2 < t1) {
            std::swap(t1, t2);
        }
        out.offsets.push_back({"cmc", t1});
        out.offsets.push_back({"cmc", t2});
    }
    return out;
}

std::vector<ParamPoint> param_grid(double u0, double u1, std::size_t n_u, double v0, double v1, std::size_t n_v)
{
    std::vector<ParamPoint> out;
    out.reserve(n_u * n_v);
    const auto lerp = [](double a, double b, std::size_t i, std::size_t n) {
        return n < 2 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    for (std::size_t i = 0; i < n_u; ++i) {
        for (std::size_t j = 0; j < n_v; ++j) {
            out.push_back({lerp(u0, u1, i, n_u), lerp(v0, v1, j, n_v)});
        }
    }
    return out;
}

double lw_residual(const Surface& surface, const LWCoefficients& lw, std::span<const ParamPoint> samples)
{
    double worst = 0.0;
    for (const ParamPoint& pt : samples) {
        CurvatureData cd;
        try {
            cd = curvatures(surface.jet(pt.u, pt.v));
        } catch (const DegenerateJet& e) {
            throw DegenerateJet(fmt::format("lw_residual sample (u, v) = ({:.9g}, {:.9g}): {}", pt.u, pt.v, e.what()));
        }
        worst = std::max(worst, std::abs(lw.a * cd.K + 2.0 * lw.b * cd.H + lw.c));
    }
    return worst;
}

}  // namespace weingarten
