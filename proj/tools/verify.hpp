#pragma once

#include <optional>
#include <string>
#include <vector>

namespace weingarten::cli {

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    /// Lower bounds pass when value > tolerance; everything else passes
    /// when value <= tolerance.
    bool lower_bound = false;
    /// Set for checks measured in ulps or other units a global tolerance
    /// override does not apply to.
    bool fixed_tolerance = false;
    bool pass() const;
};

struct VerifyOptions {
    std::string target;
    double p = 0.0;  ///< 0 selects the target's default modulus
    std::optional<int> K;  ///< both signs when unset
    double t = 1.0;
    double rho = 0.0;
    double R = 3.0;
    std::optional<double> tolerance;
};

inline const std::vector<std::string> kVerifyTargets = {
    "specfun", "sphere",          "pseudosphere",         "cn",         "dn",
    "catenoid", "bonnet",         "cylinder",             "torus",      "cayley-hamilton",
    "parallel-consistency",       "hyperbolic",           "corrupted-fixture", "all"};

std::vector<Check> run_verify(const VerifyOptions& options);

}  // namespace weingarten::cli
