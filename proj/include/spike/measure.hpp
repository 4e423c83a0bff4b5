#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spike/laurent.hpp"
#include "spike/operators.hpp"
#include "spike/pi_scalar.hpp"
#include "spike/quadrature.hpp"

namespace spike {

/// Weighted measure for brackets.  dim = 0 is the full-line linear measure
/// integral over (-inf, +inf) of . e^(-x^2) dx; dim = n >= 1 is the radial
/// measure 2 * integral over [0, +inf) of . x^(n-1) e^(-x^2) dx, with the
/// dimension-dependent sphere-volume constants dropped throughout.
struct Measure {
    long dim = 0;

    static Measure linear() { return {0}; }
    static Measure radial(long n) {
        if (n < 1) throw std::invalid_argument("Measure::radial: dimension must be >= 1");
        return {n};
    }
};

/// A bracket integrand kept a negative power of x after multiplying by the
/// volume element: exponent -1 diverges logarithmically, lower exponents
/// polynomially.  Both are rejected uniformly.
class NonIntegrableError : public std::domain_error {
public:
    explicit NonIntegrableError(long exponent)
        : std::domain_error("non-integrable integrand: x^" + std::to_string(exponent) +
                            " term survives"),
          exponent_(exponent) {}

    long exponent() const { return exponent_; }

private:
    long exponent_;
};

/// Exact weighted power moment P_e under the chosen measure.
///
/// Both measures satisfy P_0 = sqrt(pi) and P_e = (e-1)/2 * P_(e-2); the
/// odd base is P_1 = 0 on the full line and P_1 = 1 on the doubled
/// half-line, so even moments are rational multiples of sqrt(pi) and odd
/// moments are pure rationals (zero in the linear case).
inline PiScalar moment(const Measure& m, long e) {
    if (e < 0) throw std::invalid_argument("moment: exponent must be nonnegative");
    Rational c(1);
    if (e % 2 == 0) {
        for (long t = 2; t <= e; t += 2) c *= Rational(t - 1, 2);
        return {Rational(0), c};
    }
    if (m.dim == 0) return {};
    for (long t = 3; t <= e; t += 2) c *= Rational(t - 1, 2);
    return {c, Rational(0)};
}

namespace detail {

/// f * g * volume element, or the offending exponent if not integrable.
inline std::pair<LaurentSeries, std::optional<long>> weighted_product(const Measure& m,
                                                                      const LaurentSeries& f,
                                                                      const LaurentSeries& g) {
    LaurentSeries h = f * g;
    if (m.dim >= 1) h = h * LaurentSeries::monomial(m.dim - 1, 1);
    if (!h.is_zero()) {
        const long lo = *h.lowest_exponent();
        if (lo < 0) return {std::move(h), lo};
    }
    return {std::move(h), std::nullopt};
}

inline bool integrable_pair(const Measure& m, const LaurentSeries& f, const LaurentSeries& g) {
    return !weighted_product(m, f, g).second.has_value();
}

}  // namespace detail

/// Exact bracket of two stripped factors under the measure:
/// the sum of c_e * P_e over the terms c_e x^e of f * g * volume element.
inline PiScalar bracket_series(const Measure& m, const LaurentSeries& f,
                               const LaurentSeries& g) {
    auto [h, bad] = detail::weighted_product(m, f, g);
    if (bad) throw NonIntegrableError(*bad);
    if (h.is_zero()) return {};
    PiScalar sum;
    const long hi = *h.highest_exponent();
    for (long e = *h.lowest_exponent(); e <= hi; ++e) {
        const mpz_class c = h.coeff(e);
        if (c != 0) sum += scale(Rational(c), moment(m, e));
    }
    return sum;
}

/// Bracket of two states by label, on the canonical (gcd-normalized,
/// not unit-normalized) wavefunctions.
inline PiScalar bracket_raw(const Measure& m, const StateLabel& a, const StateLabel& b) {
    return bracket_series(m, wavefunction(a.l, a.k), wavefunction(b.l, b.k));
}

/// Decimal rendering of <a|b> / sqrt(<a|a> <b|b>).
///
/// Each exact bracket is turned into a rational at digits+8 guard precision
/// via sqrt_pi_digits, the square root of the norm product is taken as an
/// integer square root at the same precision, and the final quotient is cut
/// to `digits` places toward zero.  An exactly zero numerator returns "0".
inline std::string bracket_normalized(const Measure& m, const StateLabel& a,
                                      const StateLabel& b, long digits) {
    if (digits < 1) throw std::invalid_argument("bracket_normalized: digits must be >= 1");
    const PiScalar cross = bracket_raw(m, a, b);
    const PiScalar norm_a = bracket_raw(m, a, a);
    const PiScalar norm_b = bracket_raw(m, b, b);
    if (cross.is_zero()) return "0";

    const long guard = digits + 8;
    const Rational root_pi = sqrt_pi_digits(guard);
    const auto approx = [&](const PiScalar& v) { return v.rat + v.pi * root_pi; };
    const Rational va = approx(norm_a);
    const Rational vb = approx(norm_b);
    if (va.sign() <= 0 || vb.sign() <= 0)
        throw std::domain_error("bracket_normalized: vanishing norm");

    const Rational prod = va * vb;
    const mpz_class radicand = prod.num() * prod.den() * detail::ipow10(2 * guard);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    const Rational denom(root, prod.den() * detail::ipow10(guard));
    return detail::format_fixed(approx(cross) / denom, digits, detail::RoundMode::truncate);
}

/// Square-integrability of phi = f e^(-x^2/2) against the n-dimensional
/// radial volume element: true iff f * f * x^(n-1) keeps no negative powers.
inline bool is_physical(long n, const LaurentSeries& f) {
    if (n < 1) throw std::invalid_argument("is_physical: dimension must be >= 1");
    if (f.is_zero()) throw std::domain_error("is_physical: zero series has no physicality");
    return detail::integrable_pair(Measure::radial(n), f, f);
}

/// First `count` physicality flags of oscillator l in dimension n,
/// indexed by k = 0, 1, 2, ...
inline std::vector<bool> physical_pattern(long n, long l, long count) {
    std::vector<bool> out;
    out.reserve(static_cast<std::size_t>(count));
    WavefunctionStream stream(l);
    for (long k = 0; k < count; ++k) out.push_back(is_physical(n, stream.next()));
    return out;
}

/// Even eigenfunctions of oscillator l are physical in dimension n
/// exactly when n >= 2l + 1.  (Odd ones are always physical.)
inline bool even_rule(long n, long l) {
    if (n < 1) throw std::invalid_argument("even_rule: dimension must be >= 1");
    return n >= 2 * l + 1;
}

/// States |l,k> with odd k >= 1 and l + k - 1 = n, in ascending l: the
/// degenerate multiplet of the 3-D isotropic level epsilon_n = (n + 3/2).
inline std::vector<StateLabel> level_states(long n) {
    if (n < 0) throw std::invalid_argument("level_states: level must be nonnegative");
    std::vector<StateLabel> out;
    long k = n + 1;
    if (k % 2 == 0) --k;
    for (; k >= 1; k -= 2) out.push_back({n + 1 - k, k});
    return out;
}

/// Total degeneracy of the 3-D level n, counting the 2l+1 angular
/// multiplicities: (n+1)(n+2)/2.
inline long degeneracy(long n) {
    if (n < 0) throw std::invalid_argument("degeneracy: level must be nonnegative");
    return (n + 1) * (n + 2) / 2;
}

/// Bracket matrix of one oscillator plus the derived orthogonality
/// structure.  partition holds the mutually orthogonal classes when a
/// consistent staggering exists, and is empty otherwise, in which case
/// violation names the first pair that broke the candidate pattern.
struct GramReport {
    long dim = 0;
    long l = 0;
    std::vector<long> ks;                                    ///< admissible k, ascending
    std::vector<std::vector<PiScalar>> matrix;               ///< symmetric, ks order
    std::optional<std::vector<std::vector<long>>> partition; ///< nullopt: no consistent pattern
    std::optional<std::pair<long, long>> violation;
};

/// Builds the Gram matrix of oscillator l over all physically admissible
/// k <= k_max and searches it for a staggered-basis pattern.
///
/// Classes are grown greedily: seed with the smallest unassigned k, then
/// absorb, in order, every k' whose bracket with each current member is
/// exactly zero.  A grouping counts as consistent only if the classes are
/// arithmetic progressions with one common step that fill the admissible
/// range, and the progressions survive probing one step past k_max (the
/// probe is what separates a genuine staggering from a finite-window
/// coincidence).
inline GramReport gram(const Measure& m, long l, long k_max) {
    if (k_max < 1) throw std::invalid_argument("gram: k_max must be >= 1");
    GramReport report;
    report.dim = m.dim;
    report.l = l;

    std::vector<LaurentSeries> wf;
    for (long k = 0; k <= k_max; ++k) {
        LaurentSeries f = wavefunction(l, k);
        if (detail::integrable_pair(m, f, f)) {
            report.ks.push_back(k);
            wf.push_back(std::move(f));
        }
    }
    const std::size_t n = report.ks.size();

    report.matrix.assign(n, std::vector<PiScalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            PiScalar v = bracket_series(m, wf[i], wf[j]);
            report.matrix[j][i] = v;
            report.matrix[i][j] = std::move(v);
        }

    if (n <= 1) {
        report.partition = std::vector<std::vector<long>>();
        if (n == 1) report.partition->push_back({report.ks[0]});
        return report;
    }

    const auto zero_at = [&](std::size_t i, std::size_t j) { return report.matrix[i][j].is_zero(); };

    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (assigned[seed]) continue;
        std::vector<std::size_t> cls{seed};
        assigned[seed] = true;
        for (std::size_t cand = seed + 1; cand < n; ++cand) {
            if (assigned[cand]) continue;
            const bool fits = std::all_of(cls.begin(), cls.end(),
                                          [&](std::size_t mem) { return zero_at(mem, cand); });
            if (fits) {
                cls.push_back(cand);
                assigned[cand] = true;
            }
        }
        classes.push_back(std::move(cls));
    }

    const auto fail = [&](std::optional<std::pair<long, long>> pair) {
        report.partition = std::nullopt;
        report.violation = pair;
        return report;
    };

    // One common arithmetic step across all classes that have one.
    long step = 0;
    for (const auto& cls : classes) {
        for (std::size_t t = 0; t + 1 < cls.size(); ++t) {
            const long d = report.ks[cls[t + 1]] - report.ks[cls[t]];
            if (step == 0) step = d;
            if (d != step)
                return fail(std::make_pair(report.ks[cls[t]], report.ks[cls[t + 1]]));
        }
    }
    if (step == 0) return fail(std::nullopt);  // no orthogonal pair at all

    // Each class must cover its whole progression inside the window.
    for (const auto& cls : classes) {
        std::size_t at = 0;
        for (long k = report.ks[cls[0]]; k <= k_max; k += step) {
            if (std::find(report.ks.begin(), report.ks.end(), k) == report.ks.end()) continue;
            if (at >= cls.size() || report.ks[cls[at]] != k) {
                for (std::size_t mem : cls)
                    if (!bracket_series(m, wf[mem],
                                        wavefunction(l, k)).is_zero())
                        return fail(std::make_pair(report.ks[mem], k));
                return fail(std::make_pair(report.ks[cls[0]], k));
            }
            ++at;
        }
    }

    // Probe one step beyond the window.
    for (const auto& cls : classes) {
        const long next = report.ks[cls.back()] + step;
        const LaurentSeries f = wavefunction(l, next);
        if (!detail::integrable_pair(m, f, f)) continue;
        for (std::size_t mem : cls)
            if (!bracket_series(m, wf[mem], f).is_zero())
                return fail(std::make_pair(report.ks[mem], next));
    }

    // Present even-seeded classes before odd-seeded ones, seeds ascending.
    std::stable_sort(classes.begin(), classes.end(),
                     [&](const auto& a, const auto& b) {
                         const long sa = report.ks[a[0]], sb = report.ks[b[0]];
                         if (sa % 2 != sb % 2) return sa % 2 < sb % 2;
                         return sa < sb;
                     });
    report.partition = std::vector<std::vector<long>>();
    for (const auto& cls : classes) {
        std::vector<long> named;
        named.reserve(cls.size());
        for (std::size_t idx : cls) named.push_back(report.ks[idx]);
        report.partition->push_back(std::move(named));
    }
    return report;
}

/// Floating-point cross-check of bracket_series by adaptive quadrature.
///
/// The weighted product is a polynomial after the integrability check, so
/// the integrand h(x) e^(-x^2) is smooth everywhere.  The domain is cut at
/// |x| = 12 (e^(-144) ~ 4e-63 buries any desk-scale polynomial) with a
/// 1e-12 lower cutoff on the half-line.  Relative error target 1e-9.
inline double quadrature_oracle(const Measure& m, const LaurentSeries& f,
                                const LaurentSeries& g) {
    auto [h, bad] = detail::weighted_product(m, f, g);
    if (bad) throw NonIntegrableError(*bad);
    if (h.is_zero()) return 0.0;
    const auto integrand = [&h](double x) { return h.eval(x) * std::exp(-x * x); };
    constexpr double cutoff = 12.0;
    if (m.dim == 0) return integrate_adaptive(integrand, -cutoff, cutoff, 1e-10, 1e-16);
    return 2.0 * integrate_adaptive(integrand, 1e-12, cutoff, 1e-10, 1e-16);
}

}  // namespace spike
