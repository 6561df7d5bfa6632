#include "weingarten/specfun.hpp"

#include <boost/math/special_functions/ellint_rd.hpp>
#include <boost/math/special_functions/ellint_rf.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "weingarten/errors.hpp"

namespace weingarten {

namespace {

constexpr double kPi = std::numbers::pi;

// E_p(phi) for |phi| <= pi/2 via Carlson's symmetric forms.
double elliptic_E_reduced(double phi, double p)
{
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double c2 = c * c;
    const double d2 = 1.0 - p * p * s * s;
    if (s == 0.0) {
        return 0.0;
    }
    const double rf = boost::math::ellint_rf(c2, d2, 1.0);
    const double rd = boost::math::ellint_rd(c2, d2, 1.0);
    return s * rf - (p * p / 3.0) * s * s * s * rd;
}

}  // namespace

EllipticModulus::EllipticModulus(double p) : p_(p), q_(std::sqrt((1.0 - p) * (1.0 + p)))
{
    // Descending AGM: a_0 = 1, b_0 = q, c_0 = p.
    double a = 1.0;
    double b = q_;
    double c = p;
    agm_a_[0] = a;
    agm_c_[0] = c;
    std::size_t n = 0;
    double weighted = 0.5 * c * c;  // sum 2^(n-1) c_n^2
    double pow2 = 0.5;
    while (std::abs(c) > std::numeric_limits<double>::epsilon() * a && n + 1 < kMaxAgmSteps) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        ++n;
        pow2 *= 2.0;
        weighted += pow2 * c * c;
        agm_a_[n] = a;
        agm_c_[n] = c;
    }
    agm_steps_ = n;
    K_ = kPi / (2.0 * a);
    E_ = K_ * (1.0 - weighted);
}

EllipticModulus make_modulus(double p)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("elliptic modulus must lie in (0, 1), got " + std::to_string(p));
    }
    return EllipticModulus(p);
}

JacobiTriple jacobi(double s, const EllipticModulus& m)
{
    if (!std::isfinite(s)) {
        throw DomainError("jacobi: non-finite argument");
    }
    // s = 2K n + r with |r| <= K, then am(s) = n pi + am(r).
    const double half_period = 2.0 * m.K_;
    const double n = std::nearbyint(s / half_period);
    const double r = s - n * half_period;

    const std::size_t steps = m.agm_steps_;
    double phi = std::ldexp(m.agm_a_[steps] * r, static_cast<int>(steps));
    for (std::size_t k = steps; k > 0; --k) {
        phi = 0.5 * (phi + std::asin(m.agm_c_[k] / m.agm_a_[k] * std::sin(phi)));
    }

    const double sign = std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0;
    const double sn = sign * std::sin(phi);
    const double cn = sign * std::cos(phi);
    const double dn = std::sqrt(1.0 - m.p_ * m.p_ * sn * sn);
    return {sn, cn, dn, n * kPi + phi};
}

double elliptic_E_incomplete(double phi, const EllipticModulus& m)
{
    if (!std::isfinite(phi)) {
        throw DomainError("elliptic_E_incomplete: non-finite argument");
    }
    const double n = std::nearbyint(phi / kPi);
    const double r = phi - n * kPi;
    return 2.0 * n * m.complete_E() + elliptic_E_reduced(r, m.p());
}

double elliptic_E_am(double s, const EllipticModulus& m)
{
    // Same reduction as jacobi(): the integer part of am/pi is exact, so the
    // quasi-periodic term 2nE never sees a rounded amplitude.
    const double half_period = 2.0 * m.complete_K();
    const double n = std::nearbyint(s / half_period);
    const JacobiTriple local = jacobi(s - n * half_period, m);
    return 2.0 * n * m.complete_E() + elliptic_E_incomplete(local.am, m);
}

}  // namespace weingarten
