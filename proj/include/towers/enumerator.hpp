#pragma once

#include <functional>
#include <map>
#include <vector>

#include "towers/bigint.hpp"
#include "towers/core_model.hpp"
#include "towers/zpolynomial.hpp"

namespace towers {

enum class BoundKind { ByArea, ByPieceCount };

struct EnumerationQuery {
    PieceSet pieces;
    ShapeClass shape = ShapeClass::Tower;
    BoundKind bound_kind = BoundKind::ByPieceCount;
    int bound = 1;
    bool weighted = false;
};

using TowerVisitor = std::function<void(const Tower&)>;

/// Streams every canonical legal tower of the query's shape whose area
/// (or piece count) is at most the bound, each exactly once, in
/// lexicographic order of the floor lists. Throws InputError if bound < 1.
void enumerate_towers(const EnumerationQuery& query, const TowerVisitor& visit);

std::vector<Tower> collect_towers(const EnumerationQuery& query);

/// Tower counts grouped by area or piece count, for every value 1..bound
/// (zero entries included). `threads` > 1 splits the search by bottom
/// floor; the result does not depend on it.
std::map<int, BigInt> count_towers(const EnumerationQuery& query, unsigned threads = 0);

/// Sum of z-monomials of all towers of each area 1..bound. Requires ByArea.
std::map<int, ZPolynomial> weight_polynomial(const EnumerationQuery& query);

}  // namespace towers
