#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "towers/bigint.hpp"

namespace towers {

/// Terms a(offset), a(offset+1), ...
struct Sequence {
    long long offset = 0;
    std::vector<BigInt> terms;
    std::string label;

    long long last_index() const { return offset + static_cast<long long>(terms.size()) - 1; }
    const BigInt& at(long long n) const { return terms.at(static_cast<std::size_t>(n - offset)); }
};

/// sum_{j=0..order} p_j(n) a(n+j) = 0, with coeffs[j][e] the coefficient
/// of n^e in p_j.
///
/// Normalized form: integer content 1 across all coefficients and a
/// positive top coefficient in p_order.
struct Recurrence {
    int order = 0;
    int degree = 0;
    std::vector<std::vector<BigInt>> coeffs;

    BigInt evaluate(int j, long long n) const;
    friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

Recurrence normalize(Recurrence rec);

/// Searches (order, degree) pairs by increasing order + degree, then
/// order, for a recurrence valid on the prefix with the last `guard`
/// windows held out, and returns the first candidate that also holds on
/// the held-out windows. Throws InputError if the sequence has fewer than
/// (max_order+1)(max_degree+1) + max_order + guard terms.
std::optional<Recurrence> guess_recurrence(const Sequence& s, int max_order, int max_degree, int guard = 10);

/// Same search over every (order, degree) the sequence length can
/// support with the given guard, up to order + degree <= max_total.
std::optional<Recurrence> guess_recurrence_auto(const Sequence& s, int guard = 10, int max_total = 24);

/// True iff the recurrence holds on every complete window of s.
bool verify_recurrence(const Recurrence& rec, const Sequence& s);

/// Streams the terms beyond `initial` (indices last_index()+1 onwards)
/// until the sequence holds `target_length` terms, keeping only `order`
/// terms in memory. Throws SingularityError if p_order vanishes at a
/// needed index and ConsistencyError if a division is inexact.
void for_each_extension(const Recurrence& rec, const Sequence& initial, std::size_t target_length,
                        const std::function<void(long long, const BigInt&)>& visit);

Sequence extend_sequence(const Recurrence& rec, const Sequence& initial, std::size_t target_length);

}  // namespace towers
