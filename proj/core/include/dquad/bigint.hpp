#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dquad {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

/// Parses a base-10 integer; throws std::invalid_argument on malformed text.
BigInt parse_bigint(std::string_view text);

inline BigInt big(long value) { return BigInt(value); }

/// Value as uint64_t; throws std::overflow_error when out of range.
std::uint64_t to_u64(const BigInt& value);

}  // namespace dquad
