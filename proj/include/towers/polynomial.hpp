#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "towers/bigint.hpp"
#include "towers/errors.hpp"

namespace towers {

namespace poly_detail {

template <class T>
bool zero(const T& x) {
    return is_zero(x);
}

}  // namespace poly_detail

/// Dense univariate polynomial over an integral domain R, coefficients in
/// ascending powers with trailing zeros trimmed (the zero polynomial has
/// no coefficients and degree -1).
///
/// R is BigInt, giving Z[t], or UPoly<BigInt>, giving Z[t][y].
template <class R>
class UPoly {
public:
    UPoly() = default;
    UPoly(R constant) { // NOLINT: constants convert implicitly
        coeffs_.push_back(std::move(constant));
        trim();
    }
    explicit UPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c * x^power
    static UPoly monomial(std::size_t power, R c) {
        std::vector<R> v(power + 1, R(0));
        v[power] = std::move(c);
        return UPoly(std::move(v));
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    const R& lc() const { return coeffs_.back(); }
    R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }

    UPoly& operator+=(const UPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(UPoly a) {
        for (auto& c : a.coeffs_) c = R(0) - c;
        return a;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<R> r(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (poly_detail::zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UPoly(std::move(r));
    }

    /// Multiplication by a coefficient-ring scalar.
    UPoly scaled(const R& s) const {
        std::vector<R> r = coeffs_;
        for (auto& c : r) c = c * s;
        return UPoly(std::move(r));
    }

    UPoly derivative() const {
        std::vector<R> r;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] * R(static_cast<long>(i)));
        return UPoly(std::move(r));
    }

    /// Horner evaluation at x.
    template <class X>
    X evaluate(const X& x) const {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && poly_detail::zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const UPoly<R>& p) {
    return p.is_zero();
}

using IntPoly = UPoly<BigInt>;

// ---- ring helpers on BigInt -------------------------------------------

inline bool try_exact_div(const BigInt& a, const BigInt& b, BigInt& out) {
    if (sgn(b) == 0) return false;
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
}

inline BigInt ring_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline int leading_sign(const BigInt& a) { return sgn(a); }

// ---- generic polynomial arithmetic -----------------------------------

template <class R>
int leading_sign(const UPoly<R>& p) {
    return p.is_zero() ? 0 : leading_sign(p.lc());
}

template <class R>
R ring_pow(const R& base, unsigned e) {
    R result(1);
    R b = base;
    while (e) {
        if (e & 1u) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

template <class R>
R exact_div(const R& a, const R& b) {
    R out;
    if (!try_exact_div(a, b, out)) throw ConsistencyError("inexact division in polynomial ring");
    return out;
}

/// Exact quotient a / b in R[x]; false if b does not divide a.
template <class R>
bool try_exact_div(const UPoly<R>& a, const UPoly<R>& b, UPoly<R>& out) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        out = UPoly<R>();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<R> rem = a.coeffs();
    std::vector<R> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, R(0));
    const auto& bc = b.coeffs();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        const std::size_t top = static_cast<std::size_t>(i + b.degree());
        if (is_zero(rem[top])) continue;
        R q;
        if (!try_exact_div(rem[top], b.lc(), q)) return false;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] -= q * bc[j];
        quot[static_cast<std::size_t>(i)] = std::move(q);
    }
    for (const auto& r : rem)
        if (!is_zero(r)) return false;
    out = UPoly<R>(std::move(quot));
    return true;
}

template <class R>
UPoly<R> divide_coefficients(const UPoly<R>& p, const R& d) {
    std::vector<R> r = p.coeffs();
    for (auto& c : r) c = exact_div(c, d);
    return UPoly<R>(std::move(r));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b.
template <class R>
UPoly<R> pseudo_remainder(const UPoly<R>& a, const UPoly<R>& b) {
    if (b.is_zero()) throw ConsistencyError("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<R> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const R& lb = b.lc();
    for (int top = a.degree(); top >= b.degree(); --top) {
        const R lead = rem[static_cast<std::size_t>(top)];
        for (auto& c : rem) c = c * lb;
        const std::size_t shift = static_cast<std::size_t>(top - b.degree());
        for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= lead * bc[j];
    }
    return UPoly<R>(std::move(rem));
}

/// Resultant by the subresultant pseudo-remainder sequence; every division
/// along the way is exact in R. Convention: Res(a, b) = lc(a)^deg(b) * prod b(roots of a).
template <class R>
R resultant(UPoly<R> a, UPoly<R> b) {
    if (a.is_zero() || b.is_zero()) return R(0);
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    }
    if (b.degree() == 0) {
        R r = ring_pow(b.lc(), static_cast<unsigned>(a.degree()));
        return sign > 0 ? r : R(0) - r;
    }
    R g(1);
    R h(1);
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        UPoly<R> r = pseudo_remainder(a, b);
        a = std::move(b);
        b = divide_coefficients(r, R(g * ring_pow(h, static_cast<unsigned>(delta))));
        g = a.lc();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_div(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
        }
        if (b.is_zero()) return R(0);
        if (b.degree() == 0) {
            const unsigned da = static_cast<unsigned>(a.degree());
            R last = da == 1 ? b.lc() : exact_div(ring_pow(b.lc(), da), ring_pow(h, da - 1));
            return sign > 0 ? last : R(0) - last;
        }
    }
}

/// Gcd of the coefficients, signed so that the primitive part has a
/// positive leading sign.
template <class R>
R content(const UPoly<R>& p) {
    R g(0);
    for (const auto& c : p.coeffs()) g = ring_gcd(g, c);
    if (leading_sign(p) * leading_sign(g) < 0) g = R(0) - g;
    return g;
}

template <class R>
UPoly<R> primitive_part(const UPoly<R>& p) {
    if (p.is_zero()) return p;
    return divide_coefficients(p, content(p));
}

/// Gcd in R[x] by the primitive remainder sequence, normalized to a
/// positive leading sign.
template <class R>
UPoly<R> ring_gcd(const UPoly<R>& x, const UPoly<R>& y) {
    if (x.is_zero() && y.is_zero()) return UPoly<R>();
    if (x.is_zero()) return leading_sign(y) < 0 ? -y : y;
    if (y.is_zero()) return leading_sign(x) < 0 ? -x : x;
    R c = ring_gcd(content(x), content(y));
    UPoly<R> a = primitive_part(x);
    UPoly<R> b = primitive_part(y);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UPoly<R> r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? r : primitive_part(r);
    }
    UPoly<R> g = primitive_part(a).scaled(c);
    return leading_sign(g) < 0 ? -g : g;
}

}  // namespace towers
