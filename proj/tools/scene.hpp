#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weingarten/hyperbolic_family.hpp"
#include "weingarten/profiles.hpp"
#include "weingarten/surface_core.hpp"

namespace weingarten::cli {

/// Invalid user input; maps to exit code 2.
class BadInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation hit a singular parameter; maps to exit code 3.
class SingularEvaluation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

/// Parses "a:b" with a < b.
Range parse_range(const std::string& text);

struct FamilySpec {
    std::string family = "sphere";
    int K = 1;
    double p = 0.5;
    double t = 1.0;
    double rho = 1.0;
    double R = 3.0;
};

inline const std::vector<std::string> kProfileFamilies = {"cn", "dn", "sphere", "pseudosphere", "catenoid",
                                                          "hyperbolic"};
inline const std::vector<std::string> kSurfaceFamilies = {"cn",         "dn",        "sphere",     "pseudosphere",
                                                          "catenoid",   "hyperbolic", "tube-line", "tube-circle"};

bool is_tube(const std::string& family);

/// A profile family resolved to something that can be sampled and revolved.
struct ResolvedProfile {
    ProfileCurve profile;
    std::optional<FamilyMember> member;  ///< set for the hyperbolic family
};

ResolvedProfile resolve_profile(const FamilySpec& spec);

/// Default parameter window: an open cell of the family between singular
/// points, or one period for the hyperbolic family.
Range default_range(const FamilySpec& spec, const ResolvedProfile& resolved);

/// Singular parameters of the profile inside [lo, hi] (cusps of the profile
/// and zeros of r).
std::vector<double> singular_parameters(const ResolvedProfile& resolved, Range range, std::size_t n);

std::vector<double> linspace(double lo, double hi, std::size_t n);

struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::size_t, 3>> faces;  ///< 0-based
    std::vector<double> u;  ///< parameter of each grid vertex
    std::vector<double> v;
    std::size_t grid_vertices = 0;
};

/// Triangulated parameter grid, stitched along v (last column reuses the
/// first). With wrap_u the last row is stitched to the first. Caps add one
/// vertex per boundary ring and a triangle fan.
Mesh grid_mesh(const Surface& surface, const std::vector<double>& u, std::size_t n_v, bool wrap_u,
               std::optional<std::array<Vec3, 2>> caps = std::nullopt);

/// Decimal with 9 significant digits; negative zero prints as 0.
std::string num(double v);

std::string to_obj(const Mesh& mesh);

}  // namespace weingarten::cli
