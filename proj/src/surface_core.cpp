#include "weingarten/surface_core.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "weingarten/errors.hpp"

namespace weingarten {

Vec3 normal(const SurfaceJet& jet, double eps)
{
    const Vec3 cross = jet.x_u.cross(jet.x_v);
    const double len = cross.norm();
    if (!(len > eps)) {
        throw DegenerateJet(
            fmt::format("non-immersed point at (u, v) = ({:.9g}, {:.9g}): |x_u x x_v| = {:.3g}",
                        jet.u, jet.v, len));
    }
    return cross / len;
}

FundamentalForms forms(const SurfaceJet& jet, double eps)
{
    const Vec3 n = normal(jet, eps);
    FundamentalForms ff;
    const double E = jet.x_u.dot(jet.x_u);
    const double F = jet.x_u.dot(jet.x_v);
    const double G = jet.x_v.dot(jet.x_v);
    ff.first << E, F, F, G;
    const double e = jet.x_uu.dot(n);
    const double f = jet.x_uv.dot(n);
    const double g = jet.x_vv.dot(n);
    ff.second << e, f, f, g;
    // III = dn . dn = II I^{-1} II
    const Mat2 third = ff.second * ff.first.inverse() * ff.second;
    ff.third = 0.5 * (third + third.transpose());
    return ff;
}

Mat2 shape_operator(const FundamentalForms& ff)
{
    return ff.first.inverse() * ff.second;
}

CurvatureData curvatures(const SurfaceJet& jet, double eps)
{
    const FundamentalForms ff = forms(jet, eps);
    const double E = ff.first(0, 0);
    const double F = ff.first(0, 1);
    const double G = ff.first(1, 1);
    const double e = ff.second(0, 0);
    const double f = ff.second(0, 1);
    const double g = ff.second(1, 1);
    const double det = E * G - F * F;

    CurvatureData cd;
    cd.K = (e * g - f * f) / det;
    cd.H = (e * G - 2.0 * f * F + g * E) / (2.0 * det);
    // Principal curvatures from the shape operator in an orthonormal frame
    // (Cholesky of I): hypot avoids the cancellation in sqrt(H^2 - K) near
    // umbilics.
    const double l11 = std::sqrt(E);
    const double l21 = F / l11;
    const double l22 = std::sqrt(det) / l11;
    const double alpha = e / E;
    const double beta = (f - l21 * e / l11) / (l11 * l22);
    const double gamma = (g - 2.0 * l21 * (f / l11) + l21 * l21 * alpha) / (l22 * l22);
    const double mid = 0.5 * (alpha + gamma);
    const double half_gap = std::hypot(0.5 * (alpha - gamma), beta);
    cd.kappa1 = mid - half_gap;
    cd.kappa2 = mid + half_gap;
    cd.n = jet.x_u.cross(jet.x_v).normalized();
    return cd;
}

double cayley_hamilton_residual(const FundamentalForms& ff, const CurvatureData& cd)
{
    const Mat2 r = ff.third - 2.0 * cd.H * ff.second + cd.K * ff.first;
    return r.cwiseAbs().maxCoeff();
}

SurfaceJet fd_jet(const PointMap& map, double u, double v, double h)
{
    const Vec3 c = map(u, v);
    const Vec3 up = map(u + h, v);
    const Vec3 um = map(u - h, v);
    const Vec3 vp = map(u, v + h);
    const Vec3 vm = map(u, v - h);
    const Vec3 pp = map(u + h, v + h);
    const Vec3 pm = map(u + h, v - h);
    const Vec3 mp = map(u - h, v + h);
    const Vec3 mm = map(u - h, v - h);

    SurfaceJet jet;
    jet.u = u;
    jet.v = v;
    jet.x = c;
    jet.x_u = (up - um) / (2.0 * h);
    jet.x_v = (vp - vm) / (2.0 * h);
    jet.x_uu = (up - 2.0 * c + um) / (h * h);
    jet.x_vv = (vp - 2.0 * c + vm) / (h * h);
    jet.x_uv = (pp - pm - mp + mm) / (4.0 * h * h);
    return jet;
}

}  // namespace weingarten
