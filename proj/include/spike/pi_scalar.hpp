#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "spike/rational.hpp"

namespace spike {

namespace detail {

inline mpz_class ipow10(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

/// floor-style arctan(1/q) * scale.
///
/// The series atan(1/q) = sum_k (-1)^k / ((2k+1) q^(2k+1)) alternates, so
/// truncating once the scaled power underflows to zero leaves a tail below
/// one unit; each term adds at most one unit of floor error.  The total
/// error is bounded by the number of terms plus one.
inline mpz_class atan_inv_scaled(unsigned long q, const mpz_class& scale) {
    const mpz_class q2 = mpz_class(q) * q;
    mpz_class power = scale / q;  // floor(scale / q^(2k+1)); nested floors are exact
    mpz_class sum = 0;
    for (unsigned long k = 0; power != 0; ++k, power /= q2) {
        const mpz_class term = power / (2 * k + 1);
        if (k % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

/// Integer P with |P - pi * 10^digits| <= 2.
///
/// Machin's identity pi = 16 atan(1/5) - 4 atan(1/239), evaluated at ten
/// extra working digits.  The arctangent errors are bounded by the term
/// counts (< working digits), so the combined error is far below the
/// 10^10 slack removed by the final division.
inline mpz_class pi_scaled(long digits) {
    const long guard = 10;
    const mpz_class scale = ipow10(digits + guard);
    const mpz_class p = 16 * atan_inv_scaled(5, scale) - 4 * atan_inv_scaled(239, scale);
    return p / ipow10(guard);
}

enum class RoundMode { half_away_from_zero, truncate };

/// Fixed-point rendering of an exact rational with the requested number of
/// fractional digits.  A value that rounds to zero is printed unsigned.
inline std::string format_fixed(const Rational& v, long digits, RoundMode mode) {
    const mpz_class num = v.num() * ipow10(digits);
    const mpz_class& den = v.den();
    const mpz_class mag = abs(num);
    mpz_class t;
    if (mode == RoundMode::half_away_from_zero)
        t = (2 * mag + den) / (2 * den);
    else
        t = mag / den;
    const mpz_class unit = ipow10(digits);
    const mpz_class ip = t / unit;
    const mpz_class fp = t % unit;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = ip.get_str() + "." + frac;
    if (v.sign() < 0 && t != 0) out.insert(0, 1, '-');
    return out;
}

}  // namespace detail

/// Rational approximation r of sqrt(pi) with |r - sqrt(pi)| < 10^-(digits+2).
///
/// pi is scaled to 2(digits+4) decimal places (error <= 2 units) and the
/// integer square root s of that value satisfies
/// |s - sqrt(pi) 10^(digits+4)| <= 2, so r = s / 10^(digits+4) is two
/// orders tighter than required.
inline Rational sqrt_pi_digits(long digits) {
    if (digits < 1) throw std::invalid_argument("sqrt_pi_digits: digits must be >= 1");
    const long k = digits + 4;
    const mpz_class scaled_pi = detail::pi_scaled(2 * k);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled_pi.get_mpz_t());
    return Rational(s, detail::ipow10(k));
}

/// Element a + b*sqrt(pi) of the 2-dimensional Q-vector space Q + Q*sqrt(pi).
///
/// sqrt(pi) is irrational, so a value is zero iff both components are zero.
/// Addition and rational scaling are closed.  A product of two elements with
/// nonzero sqrt(pi) parts needs pi itself and would leave the space, so no
/// such multiplication is provided.
struct PiScalar {
    Rational rat;  ///< rational component
    Rational pi;   ///< coefficient of sqrt(pi)

    PiScalar() = default;
    PiScalar(Rational rational_part, Rational pi_part)
        : rat(std::move(rational_part)), pi(std::move(pi_part)) {}

    bool is_zero() const { return rat.is_zero() && pi.is_zero(); }

    PiScalar operator-() const { return {-rat, -pi}; }

    PiScalar& operator+=(const PiScalar& o) { rat += o.rat; pi += o.pi; return *this; }
    PiScalar& operator-=(const PiScalar& o) { rat -= o.rat; pi -= o.pi; return *this; }

    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }

    friend bool operator==(const PiScalar& a, const PiScalar& b) {
        return a.rat == b.rat && a.pi == b.pi;
    }
    friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

    double to_double() const {
        return rat.to_double() + pi.to_double() * std::sqrt(std::acos(-1.0));
    }
};

inline PiScalar scale(const Rational& q, const PiScalar& x) {
    return {q * x.rat, q * x.pi};
}

/// Decimal rendering of a + b*sqrt(pi), rounded half-away-from-zero to
/// `digits` fractional places.  sqrt(pi) enters through sqrt_pi_digits with
/// four guard digits, keeping the rendering error below half an ulp for any
/// moderate pi coefficient.  The exact zero renders as "0".
inline std::string to_decimal(const PiScalar& x, long digits) {
    if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
    if (x.is_zero()) return "0";
    const Rational approx = x.rat + x.pi * sqrt_pi_digits(digits + 4);
    return detail::format_fixed(approx, digits, detail::RoundMode::half_away_from_zero);
}

}  // namespace spike
