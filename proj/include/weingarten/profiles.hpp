#pragma once

// Profile curves s -> (r(s), h(s)) of the constant Gauss curvature surfaces
// of revolution, the catenoid, their revolution into surfaces, and tubes
// about space curves.
//
// Representatives are normalized so that r is maximal at s = 0 and h(0) = 0.
// Constant Gauss curvature profiles satisfy
//
//     r'^2 = ((1 - C) + K r^2) (C - K r^2),      h' = sigma ((1 - C) + K r^2),
//
// with sigma = +1 for K = +1 and sigma = -1 (a reflection h -> -h) for the
// K = -1 rows.

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string_view>

#include "weingarten/specfun.hpp"
#include "weingarten/surface_core.hpp"

namespace weingarten {

enum class ProfileFamily {
    CnPlus,
    CnMinus,
    Sphere,
    Pseudosphere,
    DnPlus,
    DnMinus,
    Catenoid,
    NumericOde,
    HyperbolicOffset,
};

std::string_view to_string(ProfileFamily family);

/// Values and first two derivatives of a profile at one parameter.
struct ProfilePoint {
    double r = 0.0;
    double h = 0.0;
    double dr = 0.0;
    double dh = 0.0;
    double ddr = 0.0;
    double ddh = 0.0;
};

struct ParamInterval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double s) const { return s > lo && s < hi; }
};

/// Singular parameters offset + k * spacing (k integer); spacing 0 means the
/// single point `offset`.
struct SingularLattice {
    double offset = 0.0;
    double spacing = 0.0;

    double distance(double s) const;
};

/// First-integral data of a constant Gauss curvature profile.
struct CgcParameters {
    double K = 1.0;
    double C = 0.0;
};

class ProfileCurve {
public:
    using Evaluator = std::function<ProfilePoint(double)>;

    struct Metadata {
        ProfileFamily family = ProfileFamily::NumericOde;
        std::optional<double> K_target;  ///< +1 or -1; 0 marks the minimal catenoid
        std::optional<double> C;
        double h_sign = 1.0;
        std::optional<EllipticModulus> modulus;
        std::optional<double> s_period;
        ParamInterval domain;
        std::optional<SingularLattice> singular;
    };

    ProfileCurve(Metadata meta, Evaluator eval);

    /// Throws DomainError outside the declared domain.
    ProfilePoint eval(double s) const;

    ProfileFamily family() const { return meta_.family; }
    std::optional<double> K_target() const { return meta_.K_target; }
    std::optional<double> C() const { return meta_.C; }
    double h_sign() const { return meta_.h_sign; }
    const std::optional<EllipticModulus>& modulus() const { return meta_.modulus; }
    std::optional<double> s_period() const { return meta_.s_period; }
    const ParamInterval& domain() const { return meta_.domain; }
    const std::optional<SingularLattice>& singular() const { return meta_.singular; }
    const Metadata& metadata() const { return meta_; }

    /// Same curve with another declared domain.
    ProfileCurve with_domain(ParamInterval domain) const;

    /// Distance from s to the nearest declared singular parameter (inf if none).
    double distance_to_singular(double s) const;

private:
    Metadata meta_;
    Evaluator eval_;
};

/// r = p cn(s); h = E(am(s)) (sign +1, K = +1) or E(am(s)) - s (sign -1, K = -1).
/// Domain (-K(p), K(p)), where r > 0.
ProfileCurve profile_cn(int sign, const EllipticModulus& m);

/// r = sech s; h = tanh s.
ProfileCurve profile_sphere();

/// r = sech s; h = tanh s - s. Cusp circle at s = 0.
ProfileCurve profile_pseudosphere();

/// r = dn(s/p)/p; h = E(am(s/p))/p - (1 - p^2) s / p^2 (sign +1) or - s / p^2
/// (sign -1). r stays in [q/p, 1/p].
ProfileCurve profile_dn(int sign, const EllipticModulus& m);

/// r = cosh s, h = s.
ProfileCurve profile_catenoid();

/// Surface of revolution (r(s) cos t, r(s) sin t, h(s)) with analytic jets.
class RevolvedSurface final : public Surface {
public:
    explicit RevolvedSurface(ProfileCurve profile, double eps = kDefaultImmersionEps);

    Vec3 point(double s, double theta) const override;
    /// Throws DegenerateJet on the axis or at a singular profile point.
    SurfaceJet jet(double s, double theta) const override;

    const ProfileCurve& profile() const { return profile_; }

private:
    ProfileCurve profile_;
    double eps_;
};

std::shared_ptr<const RevolvedSurface> revolve(ProfileCurve profile);

/// K = -(1 / (2 r r')) (r'^2 / (r'^2 + h'^2))', from the profile alone.
/// Throws FormulaSingular where r' = 0.
double revolution_K(const ProfileCurve& profile, double s);

struct OdeResiduals {
    double r = 0.0;  ///< r'^2 - ((1-C) + K r^2)(C - K r^2)
    double h = 0.0;  ///< h' - sigma ((1-C) + K r^2)
};

/// Throws DomainError if the profile declares no (K, C).
OdeResiduals ode_residuals(const ProfileCurve& profile, double s);

/// Integrates the profile equations from s = 0 to s_max with fixed-step RK4
/// using the second-order form r'' = K r (2C - 1 - 2K r^2), so turning points
/// need no sign bookkeeping. Dense output by cubic Hermite interpolation.
/// Throws DomainError unless 0 <= C - K r0^2 <= 1 and (1 - C) + K r0^2 >= 0.
ProfileCurve profile_from_ode(const CgcParameters& params, double r0, int sign_dr0, double s_max,
                              double step, double h_sign = 1.0);

/// Frenet data of a space curve at one parameter, with u-derivatives of the
/// speed, curvature and torsion.
struct FrenetPoint {
    Vec3 position = Vec3::Zero();
    Vec3 tangent = Vec3::UnitX();
    Vec3 normal = Vec3::UnitY();
    Vec3 binormal = Vec3::UnitZ();
    double speed = 1.0;
    double curvature = 0.0;
    double torsion = 0.0;
    double d_speed = 0.0;
    double d_curvature = 0.0;
    double d_torsion = 0.0;
};

class SpaceCurve {
public:
    using Evaluator = std::function<FrenetPoint(double)>;

    SpaceCurve(Evaluator eval, double max_curvature);

    FrenetPoint frenet(double u) const { return eval_(u); }
    double max_curvature() const { return max_curvature_; }

private:
    Evaluator eval_;
    double max_curvature_;
};

/// Unit-speed line origin + u * direction.
SpaceCurve straight_line(const Vec3& origin, const Vec3& direction);
/// Circle of radius R in the xy-plane, parametrized by angle.
SpaceCurve circle_curve(double radius);
/// Helix (a cos u, a sin u, b u).
SpaceCurve helix_curve(double radius, double pitch);

/// Tube gamma(u) + rho (N(u) cos v - B(u) sin v). Traversing the circle
/// against the (N, B) sense makes x_u x x_v the outward normal, so the
/// circle's principal curvature is the constant -1/rho.
class TubeSurface final : public Surface {
public:
    /// Throws DomainError for rho <= 0, ImmersionError when rho reaches
    /// 1 / max curvature of the center curve.
    TubeSurface(SpaceCurve center, double rho);

    Vec3 point(double u, double v) const override;
    SurfaceJet jet(double u, double v) const override;

    double rho() const { return rho_; }

private:
    SpaceCurve center_;
    double rho_;
};

std::shared_ptr<const TubeSurface> tube(SpaceCurve center, double rho);

}  // namespace weingarten
