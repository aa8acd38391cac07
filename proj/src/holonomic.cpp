#include "towers/holonomic.hpp"

#include <deque>

#include "towers/errors.hpp"
#include "towers/linalg.hpp"

namespace towers {

BigInt Recurrence::evaluate(int j, long long n) const {
    const auto& p = coeffs.at(static_cast<std::size_t>(j));
    BigInt acc = 0;
    const BigInt x(static_cast<long>(n));
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Recurrence normalize(Recurrence rec) {
    BigInt g = 0;
    for (const auto& p : rec.coeffs)
        for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(g) == 0) return rec;
    const auto& top = rec.coeffs.back();
    for (auto it = top.rbegin(); it != top.rend(); ++it) {
        if (sgn(*it) != 0) {
            if (sgn(*it) < 0) g = -g;
            break;
        }
    }
    for (auto& p : rec.coeffs)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return rec;
}

namespace {

bool holds_at(const Recurrence& rec, const Sequence& s, std::size_t start) {
    BigInt sum = 0;
    const long long n = s.offset + static_cast<long long>(start);
    for (int j = 0; j <= rec.order; ++j) sum += rec.evaluate(j, n) * s.terms[start + static_cast<std::size_t>(j)];
    return sgn(sum) == 0;
}

/// Tries one (order, degree) shape; the system uses every window except
/// the final `guard` ones.
std::optional<Recurrence> try_shape(const Sequence& s, int order, int degree, int guard) {
    const std::size_t length = s.terms.size();
    const std::size_t unknowns = static_cast<std::size_t>((order + 1) * (degree + 1));
    if (length < static_cast<std::size_t>(order) + static_cast<std::size_t>(guard) + unknowns) return std::nullopt;
    const std::size_t windows = length - static_cast<std::size_t>(order);
    const std::size_t fit_rows = windows - static_cast<std::size_t>(guard);

    IntegerMatrix rows(fit_rows, std::vector<BigInt>(unknowns));
    for (std::size_t m = 0; m < fit_rows; ++m) {
        const BigInt n(static_cast<long>(s.offset + static_cast<long long>(m)));
        for (int j = 0; j <= order; ++j) {
            BigInt power = s.terms[m + static_cast<std::size_t>(j)];
            for (int e = 0; e <= degree; ++e) {
                rows[m][static_cast<std::size_t>(j * (degree + 1) + e)] = power;
                power *= n;
            }
        }
    }
    if (rank_mod_prime(rows, unknowns) == unknowns) return std::nullopt;

    for (const auto& v : rational_nullspace(rows, unknowns)) {
        Recurrence rec;
        rec.order = order;
        rec.degree = degree;
        for (int j = 0; j <= order; ++j)
            rec.coeffs.emplace_back(v.begin() + j * (degree + 1), v.begin() + (j + 1) * (degree + 1));
        bool top_nonzero = false;
        for (const auto& c : rec.coeffs.back()) top_nonzero = top_nonzero || sgn(c) != 0;
        if (!top_nonzero) continue;
        bool held_out_ok = true;
        for (std::size_t m = fit_rows; m < windows && held_out_ok; ++m) held_out_ok = holds_at(rec, s, m);
        if (held_out_ok) return normalize(std::move(rec));
    }
    return std::nullopt;
}

}  // namespace

std::optional<Recurrence> guess_recurrence(const Sequence& s, int max_order, int max_degree, int guard) {
    if (max_order < 1 || max_degree < 0 || guard < 0) throw InputError("invalid guessing bounds");
    const std::size_t needed =
        static_cast<std::size_t>((max_order + 1) * (max_degree + 1) + max_order + guard);
    if (s.terms.size() < needed)
        throw InputError("guessing with these bounds needs " + std::to_string(needed) + " terms, got " +
                         std::to_string(s.terms.size()));
    for (int total = 1; total <= max_order + max_degree; ++total) {
        for (int order = 1; order <= std::min(total, max_order); ++order) {
            const int degree = total - order;
            if (degree > max_degree) continue;
            if (auto rec = try_shape(s, order, degree, guard)) return rec;
        }
    }
    return std::nullopt;
}

std::optional<Recurrence> guess_recurrence_auto(const Sequence& s, int guard, int max_total) {
    if (guard < 0) throw InputError("invalid guard");
    for (int total = 1; total <= max_total; ++total) {
        for (int order = 1; order <= total; ++order) {
            if (auto rec = try_shape(s, order, total - order, guard)) return rec;
        }
    }
    return std::nullopt;
}

bool verify_recurrence(const Recurrence& rec, const Sequence& s) {
    if (s.terms.size() <= static_cast<std::size_t>(rec.order)) return true;
    for (std::size_t m = 0; m + static_cast<std::size_t>(rec.order) < s.terms.size(); ++m)
        if (!holds_at(rec, s, m)) return false;
    return true;
}

void for_each_extension(const Recurrence& rec, const Sequence& initial, std::size_t target_length,
                        const std::function<void(long long, const BigInt&)>& visit) {
    const std::size_t r = static_cast<std::size_t>(rec.order);
    if (initial.terms.size() < r)
        throw InputError("extension needs at least " + std::to_string(r) + " initial terms");
    if (r == 0) throw InputError("recurrence order must be positive");

    std::deque<BigInt> window(initial.terms.end() - static_cast<std::ptrdiff_t>(r), initial.terms.end());
    BigInt sum;
    BigInt quotient;
    BigInt remainder;
    for (std::size_t len = initial.terms.size(); len < target_length; ++len) {
        const long long next = initial.offset + static_cast<long long>(len);
        const long long n = next - static_cast<long long>(r);
        const BigInt lead = rec.evaluate(rec.order, n);
        if (sgn(lead) == 0)
            throw SingularityError("leading coefficient vanishes at n = " + std::to_string(n), n);
        sum = 0;
        for (std::size_t j = 0; j < r; ++j) sum += rec.evaluate(static_cast<int>(j), n) * window[j];
        mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), sum.get_mpz_t(), lead.get_mpz_t());
        if (sgn(remainder) != 0)
            throw ConsistencyError("inexact division at index " + std::to_string(next) +
                                   ": the recurrence does not govern this sequence");
        quotient = -quotient;
        visit(next, quotient);
        window.pop_front();
        window.push_back(quotient);
    }
}

Sequence extend_sequence(const Recurrence& rec, const Sequence& initial, std::size_t target_length) {
    Sequence out = initial;
    out.terms.reserve(std::max(target_length, initial.terms.size()));
    for_each_extension(rec, initial, target_length, [&](long long, const BigInt& v) { out.terms.push_back(v); });
    return out;
}

}  // namespace towers
