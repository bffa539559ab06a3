#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyoracle {

using BigInt = mpz_class;

/// Parses an optionally signed decimal string. Throws Error(MalformedInput).
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);

BigInt pow(const BigInt& base, unsigned long exponent);

/// Number of bits in |value|; 0 for zero.
std::size_t bit_length(const BigInt& value);

}  // namespace polyoracle
