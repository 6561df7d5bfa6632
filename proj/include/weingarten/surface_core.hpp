#pragma once

// Point-wise differential geometry of parametrized surfaces.
//
// Orientation: n = (x_u x x_v) / |x_u x x_v|. For surfaces of revolution
// (u, v) = (s, theta). Every sign of H, kappa_i and of the LW coefficient b
// reported by this library is relative to that choice.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <functional>

namespace weingarten {

using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;

inline constexpr double kDefaultImmersionEps = 1e-12;

struct SurfaceJet {
    Vec3 x = Vec3::Zero();
    Vec3 x_u = Vec3::Zero();
    Vec3 x_v = Vec3::Zero();
    Vec3 x_uu = Vec3::Zero();
    Vec3 x_uv = Vec3::Zero();
    Vec3 x_vv = Vec3::Zero();
    double u = 0.0;
    double v = 0.0;
};

struct FundamentalForms {
    Mat2 first;   ///< (E F; F G)
    Mat2 second;  ///< (e f; f g)
    Mat2 third;
};

struct CurvatureData {
    double K = 0.0;
    double H = 0.0;
    double kappa1 = 0.0;  ///< kappa1 <= kappa2
    double kappa2 = 0.0;
    Vec3 n = Vec3::Zero();
};

/// A parametrized surface with analytic 2-jets.
class Surface {
public:
    virtual ~Surface() = default;
    virtual Vec3 point(double u, double v) const = 0;
    virtual SurfaceJet jet(double u, double v) const = 0;
};

using PointMap = std::function<Vec3(double, double)>;

/// Unit normal of the jet; throws DegenerateJet when |x_u x x_v| <= eps.
Vec3 normal(const SurfaceJet& jet, double eps = kDefaultImmersionEps);

FundamentalForms forms(const SurfaceJet& jet, double eps = kDefaultImmersionEps);

/// Shape operator I^{-1} II in the (x_u, x_v) basis.
Mat2 shape_operator(const FundamentalForms& ff);

CurvatureData curvatures(const SurfaceJet& jet, double eps = kDefaultImmersionEps);

/// Largest entry of |III - 2H II + K I|.
double cayley_hamilton_residual(const FundamentalForms& ff, const CurvatureData& cd);

/// Central-difference jet of a point map with step h. Test oracle only;
/// error is O(h^2) plus O(eps/h^2) in the second partials.
SurfaceJet fd_jet(const PointMap& map, double u, double v, double h);

}  // namespace weingarten
