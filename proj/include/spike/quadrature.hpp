#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace spike {

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half).
// Even indices are the Kronrod-only nodes, odd indices the Gauss-7 nodes.
inline constexpr double gk_node[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
std::pair<double, double> gk15(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double k15 = gk_wk[7] * f0;
    double g7 = gk_wg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * gk_node[i];
        const double fi = f(mid + dx) + f(mid - dx);
        k15 += gk_wk[i] * fi;
        if (i % 2 == 1) g7 += gk_wg[i / 2] * fi;
    }
    k15 *= half;
    g7 *= half;
    return {k15, std::abs(k15 - g7)};
}

template <class F>
double integrate_rec(F& f, double a, double b, double tol, int depth) {
    const auto [value, err] = gk15(f, a, b);
    if (err <= tol || depth >= 48) return value;
    const double mid = 0.5 * (a + b);
    return integrate_rec(f, a, mid, 0.5 * tol, depth + 1) +
           integrate_rec(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 7/15 integration of f over [a, b].
///
/// Bisects until the local Kronrod-Gauss discrepancy meets the tolerance
/// max(abs_tol, rel_tol * |first whole-interval estimate|).
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                          double abs_tol = 1e-14) {
    if (!(a < b)) throw std::invalid_argument("integrate_adaptive: need a < b");
    auto& fn = f;
    const auto [rough, err0] = detail::gk15(fn, a, b);
    const double tol = std::max(abs_tol, rel_tol * std::abs(rough));
    if (err0 <= tol) return rough;
    return detail::integrate_rec(fn, a, b, tol, 0);
}

}  // namespace spike
