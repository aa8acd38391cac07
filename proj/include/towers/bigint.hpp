#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace towers {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses an optionally signed decimal integer; throws InputError otherwise.
BigInt parse_bigint(std::string_view text);

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

inline bool is_zero(const BigInt& value) { return sgn(value) == 0; }

}  // namespace towers
