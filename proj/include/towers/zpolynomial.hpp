#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "towers/bigint.hpp"

namespace towers {

/// Sparse integer polynomial in the piece markers z_1..z_m.
///
/// Variables are positional: exponent slot j belongs to the j-th size of
/// the owning PieceSet. Exponent keys are stored with trailing zeros
/// trimmed, so constants have the empty key regardless of the variable
/// count and polynomials over different numbers of slots combine freely.
class ZPolynomial {
public:
    using Exponents = std::vector<std::uint32_t>;
    using Terms = std::map<Exponents, BigInt>;

    ZPolynomial() = default;
    ZPolynomial(long constant);  // NOLINT: integer literals act as constants
    explicit ZPolynomial(const BigInt& constant);

    static ZPolynomial variable(std::size_t slot);
    static ZPolynomial monomial(Exponents exponents, const BigInt& coefficient = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Coefficient of the monomial with the given exponents (zero if absent).
    BigInt coefficient(Exponents exponents) const;

    /// Value with every marker set to 1.
    BigInt evaluate_at_ones() const;

    /// Collapses all markers to one shared marker u; entry d is the
    /// coefficient of u^d.
    std::vector<BigInt> by_total_degree() const;

    void add_term(Exponents exponents, const BigInt& coefficient);

    ZPolynomial& operator+=(const ZPolynomial& other);
    ZPolynomial& operator-=(const ZPolynomial& other);
    ZPolynomial& operator*=(long scalar);
    /// Divides every coefficient by `divisor`; throws ConsistencyError if inexact.
    ZPolynomial& divide_exact(unsigned long divisor);

    friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
    friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
    friend ZPolynomial operator-(const ZPolynomial& a);
    friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
    friend ZPolynomial operator*(ZPolynomial a, long s) { return a *= s; }
    friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

    /// Human-readable form over the given size labels, e.g. "2*z1^2*z3 + z2".
    std::string to_string(const std::vector<int>& sizes) const;

    /// "e1,e2,...,em" padded to `slots` entries.
    static std::string exponent_key(const Exponents& exponents, std::size_t slots);

private:
    static void trim(Exponents& exponents);
    Terms terms_;
};

inline bool is_zero(const ZPolynomial& p) { return p.is_zero(); }

}  // namespace towers
