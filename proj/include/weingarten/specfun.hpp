#pragma once

// Jacobi elliptic functions and elliptic integrals of the second kind for a
// real modulus 0 < p < 1, evaluated on the whole real line.
//
// The amplitude am_p is returned on its continuous branch,
// am(s + 2K) = am(s) + pi, never reduced mod 2 pi. Profile heights mix
// E(am(s)) with terms linear in s, so a principal-branch amplitude would
// tear every profile apart at s = K.

#include <array>
#include <cstddef>

namespace weingarten {

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
    double am;  ///< continuous (unwound) amplitude, radians
};

class EllipticModulus;
JacobiTriple jacobi(double s, const EllipticModulus& m);

class EllipticModulus {
public:
    double p() const { return p_; }
    /// Co-modulus sqrt(1 - p^2).
    double q() const { return q_; }
    /// Quarter period K(p).
    double complete_K() const { return K_; }
    /// Complete integral of the second kind E(p).
    double complete_E() const { return E_; }

private:
    friend EllipticModulus make_modulus(double p);

    static constexpr std::size_t kMaxAgmSteps = 16;

    explicit EllipticModulus(double p);

    double p_;
    double q_;
    double K_;
    double E_;
    // Descending AGM chain a_n, c_n; used for the amplitude back-substitution.
    std::array<double, kMaxAgmSteps> agm_a_{};
    std::array<double, kMaxAgmSteps> agm_c_{};
    std::size_t agm_steps_ = 0;

    friend JacobiTriple jacobi(double s, const EllipticModulus& m);
};

/// Throws DomainError unless 0 < p < 1. The circular (p = 0) and hyperbolic
/// (p = 1) limits have their own closed forms and are never taken here.
EllipticModulus make_modulus(double p);

/// sn, cn, dn and am at s. Throws DomainError for non-finite s.
JacobiTriple jacobi(double s, const EllipticModulus& m);

/// E_p(phi) = int_0^phi sqrt(1 - p^2 sin^2 x) dx for any finite phi.
double elliptic_E_incomplete(double phi, const EllipticModulus& m);

/// (E_p o am_p)(s) with the unwound amplitude; d/ds of it is dn^2(s).
double elliptic_E_am(double s, const EllipticModulus& m);

}  // namespace weingarten
