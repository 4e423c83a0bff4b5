#pragma once

#include <stdexcept>
#include <string>

#include "spike/laurent.hpp"

namespace spike {

/// Oscillator index l and excitation index k of a state |l,k>.
struct StateLabel {
    long l = 0;
    long k = 0;

    friend bool operator==(const StateLabel& a, const StateLabel& b) {
        return a.l == b.l && a.k == b.k;
    }
    friend bool operator!=(const StateLabel& a, const StateLabel& b) { return !(a == b); }
};

/// Energy of a state, in units of omega*hbar/2.  Always the odd integer
/// 2(l+k)+1 for the state it labels.
struct Energy {
    long value = 0;

    friend bool operator==(const Energy& a, const Energy& b) { return a.value == b.value; }
};

inline Energy energy(long l, long k) { return {2 * (l + k) + 1}; }

/// All operators act on the Gaussian-stripped factor f of a wavefunction
/// phi = f(x) exp(-x^2/2), where f is an integer Laurent series.
///
/// raw keeps every operator exactly linear; canonical gcd-normalizes after
/// each elementary application, the scale convention used by the printed
/// eigenfunction tables.  Algebraic operator identities hold only for raw.
enum class OpMode { raw, canonical };

namespace detail {
inline LaurentSeries finish(LaurentSeries f, OpMode mode) {
    return mode == OpMode::canonical ? gcd_normalize(std::move(f)) : std::move(f);
}
inline void require_index(long v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}
}  // namespace detail

/// Intertwiner b_l^dag = -d/dx + x + l/x, stripped: f -> -f' + (2x + l/x) f.
/// Raises the oscillator index: it maps an eigenfunction of H_{l-1} to one
/// of H_l with the same k.  l = 0 coincides with the ladder raiser a_0^dag.
inline LaurentSeries raise_l(long l, const LaurentSeries& f, OpMode mode = OpMode::canonical) {
    detail::require_index(l, "raise_l: l");
    const LaurentSeries p = LaurentSeries::monomial(1, 2) + LaurentSeries::monomial(-1, l);
    return detail::finish(p * f - diff(f), mode);
}

/// Intertwiner b_l = d/dx + x + l/x, stripped: f -> f' + (l/x) f.
/// Lowers the oscillator index: H_l eigenfunctions map to H_{l-1} ones.
inline LaurentSeries lower_l(long l, const LaurentSeries& f, OpMode mode = OpMode::canonical) {
    detail::require_index(l, "lower_l: l");
    return detail::finish(LaurentSeries::monomial(-1, l) * f + diff(f), mode);
}

/// Ladder raiser a_l^dag, defined by a_0^dag = b_0^dag and the recursion
/// a_l^dag = b_l^dag a_{l-1}^dag b_l.  Each step costs O(l) elementary
/// operator applications; no memoization is needed at desk scale.
inline LaurentSeries raise_k(long l, const LaurentSeries& f, OpMode mode = OpMode::canonical) {
    detail::require_index(l, "raise_k: l");
    if (l == 0) return raise_l(0, f, mode);
    return raise_l(l, raise_k(l - 1, lower_l(l, f, mode), mode), mode);
}

/// Ladder lowerer a_l, defined by a_0 = b_0 (so a_0 f = f') and the
/// recursion a_l = b_l^dag a_{l-1} b_l.  Annihilates the ground state of H_l.
inline LaurentSeries lower_k(long l, const LaurentSeries& f, OpMode mode = OpMode::canonical) {
    detail::require_index(l, "lower_k: l");
    if (l == 0) return lower_l(0, f, mode);
    return raise_l(l, lower_k(l - 1, lower_l(l, f, mode), mode), mode);
}

/// Cumulative intertwiner b_l^dag ... b_1^dag; identity for l = 0.
inline LaurentSeries twine(long l, const LaurentSeries& f, OpMode mode = OpMode::canonical) {
    detail::require_index(l, "twine: l");
    LaurentSeries g = f;
    for (long i = 1; i <= l; ++i) g = raise_l(i, g, mode);
    return g;
}

/// k-fold ladder raiser (a_l^dag)^k; identity for k = 0.
inline LaurentSeries ladder(long l, long k, const LaurentSeries& f,
                            OpMode mode = OpMode::canonical) {
    detail::require_index(l, "ladder: l");
    detail::require_index(k, "ladder: k");
    LaurentSeries g = f;
    for (long i = 0; i < k; ++i) g = raise_k(l, g, mode);
    return g;
}

/// Stripped factor f_{l,k} of the eigenfunction |l,k>, gcd-normalized:
/// the cumulative intertwiner applied to the k-th ladder iterate of 1.
inline LaurentSeries wavefunction(long l, long k) {
    return twine(l, ladder(0, k, LaurentSeries({1}, {})));
}

/// Unbounded generator of the canonical eigenfunctions of H_l in excitation
/// order k = 0, 1, 2, ...  Streams are independent per consumer.
class WavefunctionStream {
public:
    explicit WavefunctionStream(long l) : l_(l), base_({1}, {}) {
        detail::require_index(l, "WavefunctionStream: l");
    }

    LaurentSeries next() {
        LaurentSeries out = twine(l_, base_);
        base_ = raise_k(0, base_);
        return out;
    }

private:
    long l_;
    LaurentSeries base_;
};

/// The Hamiltonian H_l = -d^2/dx^2 + x^2 + l(l+1)/x^2 transported to the
/// stripped representation (always raw, exactly linear).
///
/// Derivation: for phi = f exp(-x^2/2),
///   phi'' = (f'' - 2x f' - f + x^2 f) exp(-x^2/2),
/// so
///   H_l phi = (-f'' + 2x f' + f + l(l+1) x^-2 f) exp(-x^2/2),
/// the x^2 terms cancelling between -phi'' and the potential.  l = -1 is
/// accepted and collapses to the l = 0 operator, matching H_{-1} = H_0.
inline LaurentSeries hamiltonian_apply(long l, const LaurentSeries& f) {
    if (l < -1) throw std::invalid_argument("hamiltonian_apply: l must be >= -1");
    const LaurentSeries df = diff(f);
    return -diff(df) + LaurentSeries::monomial(1, 2) * df + f +
           LaurentSeries::monomial(-2, l * (l + 1)) * f;
}

}  // namespace spike
