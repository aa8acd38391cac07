#include "towers/zpolynomial.hpp"

#include <sstream>

#include "towers/errors.hpp"

namespace towers {

void ZPolynomial::trim(Exponents& exponents) {
    while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
}

ZPolynomial::ZPolynomial(long constant) {
    if (constant != 0) terms_.emplace(Exponents{}, BigInt(constant));
}

ZPolynomial::ZPolynomial(const BigInt& constant) {
    if (sgn(constant) != 0) terms_.emplace(Exponents{}, constant);
}

ZPolynomial ZPolynomial::variable(std::size_t slot) {
    Exponents e(slot + 1, 0);
    e[slot] = 1;
    return monomial(std::move(e));
}

ZPolynomial ZPolynomial::monomial(Exponents exponents, const BigInt& coefficient) {
    ZPolynomial p;
    p.add_term(std::move(exponents), coefficient);
    return p;
}

BigInt ZPolynomial::coefficient(Exponents exponents) const {
    trim(exponents);
    auto it = terms_.find(exponents);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt ZPolynomial::evaluate_at_ones() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

std::vector<BigInt> ZPolynomial::by_total_degree() const {
    std::vector<BigInt> out;
    for (const auto& [e, c] : terms_) {
        std::size_t degree = 0;
        for (auto x : e) degree += x;
        if (out.size() <= degree) out.resize(degree + 1, BigInt(0));
        out[degree] += c;
    }
    return out;
}

void ZPolynomial::add_term(Exponents exponents, const BigInt& coefficient) {
    if (sgn(coefficient) == 0) return;
    trim(exponents);
    auto [it, inserted] = terms_.try_emplace(std::move(exponents), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

ZPolynomial& ZPolynomial::operator*=(long scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

ZPolynomial& ZPolynomial::divide_exact(unsigned long divisor) {
    for (auto& [e, c] : terms_) {
        if (!mpz_divisible_ui_p(c.get_mpz_t(), divisor))
            throw ConsistencyError("inexact division of z-polynomial coefficient");
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), divisor);
    }
    return *this;
}

ZPolynomial operator-(const ZPolynomial& a) {
    ZPolynomial r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
    ZPolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    ZPolynomial::Exponents e;
    BigInt product;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            e.assign(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            product = ca * cb;
            r.add_term(e, product);
        }
    }
    return r;
}

std::string ZPolynomial::to_string(const std::vector<int>& sizes) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt magnitude = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (magnitude != 1 || e.empty()) {
            out << magnitude.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) out << '*';
            out << 'z' << (i < sizes.size() ? sizes[i] : static_cast<int>(i + 1));
            if (e[i] > 1) out << '^' << e[i];
            wrote = true;
        }
    }
    return out.str();
}

std::string ZPolynomial::exponent_key(const Exponents& exponents, std::size_t slots) {
    std::string key;
    for (std::size_t i = 0; i < std::max(slots, exponents.size()); ++i) {
        if (i) key += ',';
        key += std::to_string(i < exponents.size() ? exponents[i] : 0u);
    }
    return key;
}

}  // namespace towers
