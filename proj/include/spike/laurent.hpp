#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spike {

/// Finite two-sided Laurent series with exact integer coefficients,
/// f(x) = sum_n a_n x^n over a finite set of integer exponents n.
///
/// Canonical form: pos() = [a0, a1, ...] and neg() = [a-1, a-2, ...] carry
/// no trailing zeros; the zero series is two empty lists.
class LaurentSeries {
public:
    LaurentSeries() = default;

    LaurentSeries(std::vector<mpz_class> pos, std::vector<mpz_class> neg)
        : pos_(std::move(pos)), neg_(std::move(neg)) {
        trim();
    }

    LaurentSeries(std::initializer_list<long> pos, std::initializer_list<long> neg) {
        for (long c : pos) pos_.emplace_back(c);
        for (long c : neg) neg_.emplace_back(c);
        trim();
    }

    /// Single term c * x^n; a zero coefficient gives the zero series.
    static LaurentSeries monomial(long n, mpz_class c) {
        LaurentSeries f;
        if (c == 0) return f;
        if (n >= 0) {
            f.pos_.assign(static_cast<std::size_t>(n) + 1, mpz_class(0));
            f.pos_.back() = std::move(c);
        } else {
            f.neg_.assign(static_cast<std::size_t>(-n), mpz_class(0));
            f.neg_.back() = std::move(c);
        }
        return f;
    }

    const std::vector<mpz_class>& pos() const { return pos_; }
    const std::vector<mpz_class>& neg() const { return neg_; }

    bool is_zero() const { return pos_.empty() && neg_.empty(); }

    mpz_class coeff(long e) const {
        if (e >= 0)
            return e < static_cast<long>(pos_.size()) ? pos_[static_cast<std::size_t>(e)] : 0;
        const long i = -e - 1;
        return i < static_cast<long>(neg_.size()) ? neg_[static_cast<std::size_t>(i)] : 0;
    }

    /// Smallest exponent with nonzero coefficient; empty for the zero series.
    std::optional<long> lowest_exponent() const {
        if (is_zero()) return std::nullopt;
        if (!neg_.empty()) return -static_cast<long>(neg_.size());
        for (std::size_t i = 0; i < pos_.size(); ++i)
            if (pos_[i] != 0) return static_cast<long>(i);
        return std::nullopt;  // unreachable in canonical form
    }

    /// Largest exponent with nonzero coefficient; empty for the zero series.
    std::optional<long> highest_exponent() const {
        if (is_zero()) return std::nullopt;
        if (!pos_.empty()) return static_cast<long>(pos_.size()) - 1;
        for (std::size_t i = 0; i < neg_.size(); ++i)
            if (neg_[i] != 0) return -static_cast<long>(i) - 1;
        return std::nullopt;  // unreachable in canonical form
    }

    /// Floating-point evaluation sum a_n x^n (Horner in x and in 1/x).
    double eval(double x) const {
        if (!neg_.empty() && x == 0.0)
            throw std::domain_error("LaurentSeries: evaluation at 0 with negative powers");
        double p = 0.0;
        for (std::size_t i = pos_.size(); i-- > 0;) p = p * x + pos_[i].get_d();
        double q = 0.0;
        if (!neg_.empty()) {
            const double u = 1.0 / x;
            for (std::size_t i = neg_.size(); i-- > 0;) q = q * u + neg_[i].get_d();
            q *= u;
        }
        return p + q;
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.pos_) c = -c;
        for (auto& c : r.neg_) c = -c;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r;
        r.pos_.resize(std::max(a.pos_.size(), b.pos_.size()), mpz_class(0));
        r.neg_.resize(std::max(a.neg_.size(), b.neg_.size()), mpz_class(0));
        for (std::size_t i = 0; i < a.pos_.size(); ++i) r.pos_[i] += a.pos_[i];
        for (std::size_t i = 0; i < b.pos_.size(); ++i) r.pos_[i] += b.pos_[i];
        for (std::size_t i = 0; i < a.neg_.size(); ++i) r.neg_[i] += a.neg_[i];
        for (std::size_t i = 0; i < b.neg_.size(); ++i) r.neg_[i] += b.neg_[i];
        r.trim();
        return r;
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const long alo = *a.lowest_exponent(), ahi = *a.highest_exponent();
        const long blo = *b.lowest_exponent(), bhi = *b.highest_exponent();
        const long lo = alo + blo, hi = ahi + bhi;
        std::vector<mpz_class> acc(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
        for (long i = alo; i <= ahi; ++i) {
            const mpz_class ca = a.coeff(i);
            if (ca == 0) continue;
            for (long j = blo; j <= bhi; ++j) {
                const mpz_class cb = b.coeff(j);
                if (cb == 0) continue;
                acc[static_cast<std::size_t>(i + j - lo)] += ca * cb;
            }
        }
        return from_span(lo, std::move(acc));
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.pos_ == b.pos_ && a.neg_ == b.neg_;
    }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

private:
    static LaurentSeries from_span(long lo, std::vector<mpz_class> acc) {
        LaurentSeries r;
        for (long e = lo; e < lo + static_cast<long>(acc.size()); ++e) {
            auto& c = acc[static_cast<std::size_t>(e - lo)];
            if (c == 0) continue;
            if (e >= 0) {
                if (static_cast<long>(r.pos_.size()) <= e)
                    r.pos_.resize(static_cast<std::size_t>(e) + 1, mpz_class(0));
                r.pos_[static_cast<std::size_t>(e)] = std::move(c);
            } else {
                if (static_cast<long>(r.neg_.size()) < -e)
                    r.neg_.resize(static_cast<std::size_t>(-e), mpz_class(0));
                r.neg_[static_cast<std::size_t>(-e - 1)] = std::move(c);
            }
        }
        r.trim();
        return r;
    }

    void trim() {
        while (!pos_.empty() && pos_.back() == 0) pos_.pop_back();
        while (!neg_.empty() && neg_.back() == 0) neg_.pop_back();
    }

    std::vector<mpz_class> pos_;
    std::vector<mpz_class> neg_;
};

inline LaurentSeries monomial(long n, long c) { return LaurentSeries::monomial(n, mpz_class(c)); }

inline LaurentSeries scale(const mpz_class& c, const LaurentSeries& f) {
    if (c == 0 || f.is_zero()) return {};
    std::vector<mpz_class> pos = f.pos(), neg = f.neg();
    for (auto& v : pos) v *= c;
    for (auto& v : neg) v *= c;
    return {std::move(pos), std::move(neg)};
}

/// Term-wise derivative: a_n x^n -> n a_n x^(n-1) for every n, so the
/// constant term vanishes and x^-1 maps to -x^-2.
inline LaurentSeries diff(const LaurentSeries& f) {
    LaurentSeries r;
    if (f.is_zero()) return r;
    const long lo = *f.lowest_exponent(), hi = *f.highest_exponent();
    for (long e = lo; e <= hi; ++e) {
        if (e == 0) continue;
        const mpz_class c = f.coeff(e) * e;
        if (c != 0) r = r + LaurentSeries::monomial(e - 1, c);
    }
    return r;
}

/// Divides every coefficient by the positive gcd of all coefficients.
/// Signs are preserved; the zero series maps to itself.
inline LaurentSeries gcd_normalize(const LaurentSeries& f) {
    if (f.is_zero()) return f;
    mpz_class g = 0;
    for (const auto& c : f.pos()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (const auto& c : f.neg()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return f;
    std::vector<mpz_class> pos = f.pos(), neg = f.neg();
    for (auto& v : pos) v /= g;
    for (auto& v : neg) v /= g;
    return {std::move(pos), std::move(neg)};
}

namespace detail {

inline std::string coeff_list(const std::vector<mpz_class>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

inline void append_term(std::string& out, const mpz_class& c, long e) {
    const bool first = out.empty();
    const bool negative = c < 0;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const mpz_class mag = abs(c);
    if (e == 0) {
        out += mag.get_str();
        return;
    }
    std::string power = (e == 1 || e == -1) ? "x" : "x^" + std::to_string(e > 0 ? e : -e);
    if (e > 0) {
        if (mag != 1) out += mag.get_str();
        out += power;
    } else {
        out += mag.get_str() + "/" + power;
    }
}

}  // namespace detail

/// "L [a0,a1,...] [a-1,a-2,...]" list form.
inline std::string to_list_string(const LaurentSeries& f) {
    return "L " + detail::coeff_list(f.pos()) + " " + detail::coeff_list(f.neg());
}

/// Human-readable form: nonnegative powers in ascending order followed by
/// negative powers as 1/x^k terms, e.g. "2x + 1/x" or "-6 - 12x^2 + 8x^4 - 3/x^2".
inline std::string annotate(const LaurentSeries& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.pos().size(); ++i)
        if (f.pos()[i] != 0) detail::append_term(out, f.pos()[i], static_cast<long>(i));
    for (std::size_t i = 0; i < f.neg().size(); ++i)
        if (f.neg()[i] != 0) detail::append_term(out, f.neg()[i], -static_cast<long>(i) - 1);
    return out;
}

/// LaTeX form of the same layout, with \frac for the negative powers.
inline std::string to_latex(const LaurentSeries& f) {
    if (f.is_zero()) return "0";
    std::string out;
    auto term = [&](const mpz_class& c, long e) {
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const mpz_class mag = abs(c);
        if (e == 0) {
            out += mag.get_str();
        } else if (e > 0) {
            if (mag != 1) out += mag.get_str();
            out += e == 1 ? "x" : "x^{" + std::to_string(e) + "}";
        } else {
            const std::string den = e == -1 ? "x" : "x^{" + std::to_string(-e) + "}";
            out += "\\frac{" + mag.get_str() + "}{" + den + "}";
        }
    };
    for (std::size_t i = 0; i < f.pos().size(); ++i)
        if (f.pos()[i] != 0) term(f.pos()[i], static_cast<long>(i));
    for (std::size_t i = 0; i < f.neg().size(); ++i)
        if (f.neg()[i] != 0) term(f.neg()[i], -static_cast<long>(i) - 1);
    return out;
}

}  // namespace spike
