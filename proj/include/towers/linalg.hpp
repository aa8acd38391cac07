#pragma once

#include <cstddef>
#include <vector>

#include "towers/bigint.hpp"

namespace towers {

using IntegerMatrix = std::vector<std::vector<BigInt>>;

/// Rank of the matrix reduced modulo the Mersenne prime 2^61 - 1. A lower
/// bound for the rank over the rationals, so full rank here rules out a
/// rational kernel.
std::size_t rank_mod_prime(const IntegerMatrix& rows, std::size_t cols);

/// Basis of the rational kernel, read off the reduced row echelon form
/// (one vector per free column, in column order) and scaled to primitive
/// integer vectors whose last non-zero entry is positive. The basis depends
/// only on the kernel, not on which rows were used to cut it out.
IntegerMatrix rational_nullspace(const IntegerMatrix& rows, std::size_t cols);

}  // namespace towers
