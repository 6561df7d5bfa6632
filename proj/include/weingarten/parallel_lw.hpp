#pragma once

// Parallel surfaces x^t = x + t n and the linear Weingarten condition
// a K + 2b H + c = 0 along a parallel family.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weingarten/surface_core.hpp"

namespace weingarten {

inline constexpr double kDefaultFocalTol = 1e-9;
inline constexpr double kDefaultClassifyTol = 1e-9;

struct LWCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    /// b^2 - ac
    double discriminant() const;
    /// max(|a|, |b|, |c|)
    double magnitude() const;
};

double discriminant(const LWCoefficients& lw);

/// Coefficients satisfied by x^t: (a + 2tb + t^2 c, b + tc, c).
LWCoefficients transform_coefficients(const LWCoefficients& lw, double t);

/// The same condition with respect to the opposite normal: (a, -b, c).
LWCoefficients flip_orientation(const LWCoefficients& lw);

/// K^t = K / D and H^t = (H - tK) / D with D = 1 - 2tH + t^2 K, relative to
/// the base normal n. Throws FocalPoint when |D| <= tol.
struct ParallelCurvatures {
    double K = 0.0;
    double H = 0.0;
};
ParallelCurvatures parallel_curvatures(double K, double H, double t, double tol = kDefaultFocalTol);

/// Jet of x + t n. First partials are exact (x_u + t n_u through the shape
/// operator). Second partials are exact in the normal direction, which is
/// all the forms and curvatures read; their tangential parts omit the terms
/// that would need third derivatives of x.
/// Throws FocalPoint when |1 - 2tH + t^2 K| <= tol.
SurfaceJet parallel_point(const SurfaceJet& jet, const CurvatureData& curv, double t,
                          double tol = kDefaultFocalTol);

/// Offset of a surface with analytic jets; point() is the exact map x + t n.
class OffsetSurface final : public Surface {
public:
    OffsetSurface(std::shared_ptr<const Surface> base, double t, double focal_tol = kDefaultFocalTol);

    Vec3 point(double u, double v) const override;
    SurfaceJet jet(double u, double v) const override;

    /// sign of 1 - 2tH + t^2 K at (u, v): +1 where x^t keeps the base
    /// orientation, -1 where x_u^t x x_v^t points along -n.
    double orientation(double u, double v) const;

private:
    std::shared_ptr<const Surface> base_;
    double t_;
    double focal_tol_;
};

enum class LWKind { Tubular, ParallelToMinimal, ParallelToCGC };

std::string to_string(LWKind kind);

struct LabeledOffset {
    std::string label;  ///< "minimal", "cgc" or "cmc"
    double t = 0.0;
};

struct LWClass {
    LWKind kind = LWKind::Tubular;
    std::vector<LabeledOffset> offsets;
    std::optional<double> K_at_cgc_offset;
    /// Tubular with a != 0: the constant principal curvature -b/a.
    std::optional<double> constant_principal_curvature;
};

/// Discriminant and c are tested relative to the triple's magnitude.
/// Throws InvalidTriple for (0, 0, 0).
LWClass classify(const LWCoefficients& lw, double tol = kDefaultClassifyTol);

struct ParamPoint {
    double u = 0.0;
    double v = 0.0;
};

/// Tensor grid of n_u x n_v points over [u0, u1] x [v0, v1] (endpoints included).
std::vector<ParamPoint> param_grid(double u0, double u1, std::size_t n_u, double v0, double v1, std::size_t n_v);

/// max |a K + 2b H + c| over the samples, with curvatures from the surface's
/// own jets. A DegenerateJet is rethrown naming the offending sample.
double lw_residual(const Surface& surface, const LWCoefficients& lw, std::span<const ParamPoint> samples);

}  // namespace weingarten
