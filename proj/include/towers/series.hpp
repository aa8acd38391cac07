#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "towers/bigint.hpp"
#include "towers/errors.hpp"
#include "towers/zpolynomial.hpp"

namespace towers {

namespace detail {

inline void divide_exact(BigInt& value, unsigned long divisor) {
    if (!mpz_divisible_ui_p(value.get_mpz_t(), divisor))
        throw ConsistencyError("inexact division of series coefficient");
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), divisor);
}

inline void divide_exact(ZPolynomial& value, unsigned long divisor) { value.divide_exact(divisor); }

inline bool is_unit(const BigInt& c) { return c == 1 || c == -1; }
inline bool is_unit(const ZPolynomial& c) { return c == ZPolynomial(1) || c == ZPolynomial(-1); }

}  // namespace detail

/// Power series in t truncated after t^order, with exact coefficients.
///
/// C is BigInt (plain counting) or ZPolynomial (weighted by piece markers).
/// Every operation keeps the order of its inputs; binary operations
/// require equal orders.
template <class C>
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, C(0)) {}
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, C(0)) {}
    TruncatedSeries(std::size_t order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, C(0));
    }

    static TruncatedSeries constant(std::size_t order, const C& c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * t^power (zero if power exceeds the order).
    static TruncatedSeries monomial(std::size_t order, std::size_t power, const C& c) {
        TruncatedSeries s(order);
        if (power <= order) s.coeffs_[power] = c;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<C>& coeffs() const noexcept { return coeffs_; }
    const C& operator[](std::size_t i) const { return coeffs_[i]; }
    C& operator[](std::size_t i) { return coeffs_[i]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return towers::is_zero(c); });
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        const std::size_t n = a.order();
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (towers::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (towers::is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    /// Multiplies by t^shift, dropping terms beyond the order.
    TruncatedSeries shifted(std::size_t shift) const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i + shift <= order(); ++i) r.coeffs_[i + shift] = coeffs_[i];
        return r;
    }

    /// Quotient a / b; b must have constant term +1 or -1, which keeps the
    /// result inside the coefficient ring.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        if (!detail::is_unit(b.coeffs_[0]))
            throw ConsistencyError("series division needs a unit constant term");
        const bool negate = b.coeffs_[0] == C(-1);
        const std::size_t n = a.order();
        TruncatedSeries q(n);
        for (std::size_t k = 0; k <= n; ++k) {
            C acc = a.coeffs_[k];
            for (std::size_t j = 1; j <= k; ++j) {
                if (towers::is_zero(b.coeffs_[j]) || towers::is_zero(q.coeffs_[k - j])) continue;
                acc -= b.coeffs_[j] * q.coeffs_[k - j];
            }
            q.coeffs_[k] = negate ? C(0) - acc : acc;
        }
        return q;
    }

    TruncatedSeries reciprocal() const { return constant(order(), C(1)) / *this; }

    /// this^exponent. Uses the power recurrence
    ///   m f0 g_m = sum_{j=1..m} ((e+1) j - m) f_j g_{m-j}
    /// when the constant term is 1, repeated squaring otherwise.
    TruncatedSeries pow(unsigned exponent) const {
        const std::size_t n = order();
        if (coeffs_[0] == C(1)) {
            TruncatedSeries g(n);
            g.coeffs_[0] = C(1);
            for (std::size_t m = 1; m <= n; ++m) {
                C acc(0);
                for (std::size_t j = 1; j <= m; ++j) {
                    if (towers::is_zero(coeffs_[j])) continue;
                    const long w = static_cast<long>((exponent + 1) * j) - static_cast<long>(m);
                    if (w == 0) continue;
                    acc += (coeffs_[j] * g.coeffs_[m - j]) * w;
                }
                detail::divide_exact(acc, m);
                g.coeffs_[m] = std::move(acc);
            }
            return g;
        }
        TruncatedSeries result = constant(n, C(1));
        TruncatedSeries base = *this;
        while (exponent) {
            if (exponent & 1u) result = result * base;
            exponent >>= 1;
            if (exponent) base = base * base;
        }
        return result;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check_order(const TruncatedSeries& o) const {
        if (o.order() != order()) throw ConsistencyError("series orders differ");
    }

    std::vector<C> coeffs_;
};

using IntegerSeries = TruncatedSeries<BigInt>;
using WeightedSeries = TruncatedSeries<ZPolynomial>;

/// Sets every marker to 1.
IntegerSeries evaluate_at_ones(const WeightedSeries& s);

}  // namespace towers
