#pragma once

// Parallel curves xi^t = xi + t nu of the pseudospherical dn-profile
//
//     xi(s) = (dn(s/p) / p,  E(am(s/p)) / p - s / p^2),
//
// whose surfaces of revolution are linear Weingarten of hyperbolic type
// (discriminant -1). With tau = (cn, sn)(s/p) and nu = (-sn, cn)(s/p) one has
// xi' = -sn(s/p) tau, and
//
//     r^t = 0      where t =  (1/p) dn/sn (s/p),  i.e. |t| >= q/p,
//     (xi^t)' = 0  where t = -p sn/dn (s/p),      i.e. |t| <= p/q.
//
// For p < 1/sqrt(2) every t in (p/q, q/p) gives an immersed profile that
// never reaches the axis.

#include <Eigen/Core>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weingarten/parallel_lw.hpp"
#include "weingarten/profiles.hpp"
#include "weingarten/specfun.hpp"

namespace weingarten {

using Vec2 = Eigen::Vector2d;

struct PlaneCurveFrame {
    Vec2 xi = Vec2::Zero();
    Vec2 tau = Vec2::UnitX();
    Vec2 nu = Vec2::UnitY();
    double speed = 0.0;  ///< |xi'| = |sn(s/p)|
};

PlaneCurveFrame base_frame(const EllipticModulus& m, double s);

/// Offsets whose parallel curve reaches the rotation axis: |t| >= bound = q/p.
struct AxisCrossingRange {
    double bound = 0.0;
    bool contains(double t) const;
};

/// Offsets whose parallel curve has a singular point: |t| <= bound = p/q.
struct SingularRange {
    double bound = 0.0;
    bool contains(double t) const;
};

AxisCrossingRange axis_crossing_range(const EllipticModulus& m);
SingularRange singular_range(const EllipticModulus& m);

/// Open interval (lo, hi) of offsets giving immersed, axis-avoiding members.
struct OffsetInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double t) const { return t > lo && t < hi; }
    double width() const { return hi - lo; }
    /// The mirror image (-hi, -lo).
    OffsetInterval mirrored() const { return {-hi, -lo}; }
};

/// (p/q, q/p) when p < 1/sqrt(2), otherwise empty.
std::optional<OffsetInterval> safe_interval(const EllipticModulus& m);

struct FamilyMember {
    EllipticModulus modulus;
    double t = 0.0;
    ProfileCurve profile;
    /// Period of r^t: 2pK for t = 0, else 4pK (r^t(s + 2pK) = r^{-t}(s)).
    double s_period = 0.0;
    /// h^t(s + s_period) - h^t(s).
    double h_translation = 0.0;
    /// Coefficients (1 + t^2, t, 1) relative to the offset normal nu,
    /// discriminant -1.
    LWCoefficients lw;
    bool singular = false;      ///< |t| <= p/q
    bool reaches_axis = false;  ///< |t| >= q/p
    bool in_safe_interval = false;

    std::string status() const;
};

/// Any t is accepted; the flags report immersion and axis status.
FamilyMember family_member(const EllipticModulus& m, double t);

/// Profile speed |(xi^t)'| = |sn + (t/p) dn| (s/p) without the profile machinery.
double member_speed(const FamilyMember& member, double s);

struct ScanMinimum {
    double value = 0.0;
    double s = 0.0;
};

/// Dense scan of one period (samples points) refined by Brent's method.
ScanMinimum min_speed(const FamilyMember& member, std::size_t samples = 10000);
ScanMinimum min_radius(const FamilyMember& member, std::size_t samples = 10000);

/// All zeros of the member's speed in [lo, hi], bracketed on a uniform scan
/// and refined by bisection.
std::vector<double> singular_points(const FamilyMember& member, double lo, double hi,
                                    std::size_t samples_per_period = 10000);

/// First root of sn + (t/p) dn in [0, s_period], or nullopt if the speed
/// never changes sign.
std::optional<double> locate_singularity(const FamilyMember& member, std::size_t samples = 10000);

/// Plot window in profile coordinates (h horizontal, r vertical) and the
/// output size in pixels.
struct Viewport {
    double h_min = 0.0;
    double h_max = 1.0;
    double r_min = 0.0;
    double r_max = 1.0;
    int width = 800;
    int height = 400;
};

/// SVG 1.1 document with one polyline per curve; x is h, y is r.
/// Bounds default to the data plus the axis r = 0.
std::string polyline_svg(std::span<const std::vector<Vec2>> curves, std::optional<Viewport> viewport = std::nullopt);

/// SVG 1.1 document with one polyline per member, each over `periods`
/// periods sampled at `samples_per_period` points. Without a viewport the
/// window is the data bounding box plus a 5% margin.
std::string profile_svg(std::span<const FamilyMember> members, std::optional<Viewport> viewport = std::nullopt,
                        int periods = 2, int samples_per_period = 400);

}  // namespace weingarten
