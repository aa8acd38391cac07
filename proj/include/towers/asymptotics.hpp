#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "towers/bigint.hpp"
#include "towers/holonomic.hpp"

namespace towers {

/// Empirical fit a(n) ~ C mu^n n^theta at the tail of a sequence.
///
/// mu and theta are exact rationals obtained by Richardson extrapolation of
/// exact term ratios; they are reported as decimals of `digits`
/// significant figures. Stability is the absolute difference between the
/// extrapolants at the last two positions.
struct AsymptoticEstimate {
    BigRational mu;
    BigRational theta;
    BigRational mu_stability;
    BigRational theta_stability;
    std::optional<double> amplitude;
    int depth = 4;
    std::size_t digits = 70;
    long long index = 0;  ///< position the extrapolation was anchored at
};

/// Requires at least 4*depth + 8 terms and non-zero terms over the ratio
/// window at the tail; throws InputError otherwise (naming the index of a
/// zero term).
AsymptoticEstimate estimate_asymptotics(const Sequence& s, int depth = 4);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const BigRational& value, std::size_t significant_digits);

}  // namespace towers
