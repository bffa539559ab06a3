#pragma once

// Shell enumeration of r-tuples over {1, 2, ...}: tuples are ordered by
// their maximum component M first, so the tuples with all components <= n
// receive exactly the codes 1..n^r, and a tuple's code never depends on n.

#include <cstdint>
#include <span>
#include <vector>

#include "polyoracle/lsframe/ls_problem.hpp"

namespace polyoracle::problems {

using ls::Code;

/// Components must be >= 1. Throws ValueOutOfRange on a zero component or
/// when the code does not fit 64 bits.
Code encode_tuple(std::span<const std::uint64_t> components);
Code encode_tuple(std::initializer_list<std::uint64_t> components);

/// Inverse of encode_tuple for codes >= 1; `out.size()` is the arity.
/// Returns false for code 0.
bool decode_tuple(Code code, std::span<std::uint64_t> out);
std::vector<std::uint64_t> decode_tuple(Code code, std::uint32_t r);

}  // namespace polyoracle::problems
