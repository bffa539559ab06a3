#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyoracle::harness {

struct BenchRow {
  std::uint64_t s = 0;
  std::uint64_t variables = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  double slope = 0.0;  // least-squares slope of log(variables) against log(s)
};

/// Variable counts of the formulation over a size grid. Throws
/// PreconditionViolated unless the sizes ascend strictly and number >= 4.
BenchResult bench_vars(std::uint32_t r, std::uint32_t theta, const std::vector<std::uint64_t>& sizes);

/// "s,variables\n" followed by one row per size.
std::string to_csv(const BenchResult& result);

/// Fixed six-decimal rendering used in all outputs.
std::string format_slope(double slope);

/// Comma-separated sizes. "a,b,...,z" continues the progression a, b with
/// ratio b/a (or step b-a when b/a is not integral) up to z.
std::vector<std::uint64_t> parse_sizes(std::string_view text);

}  // namespace polyoracle::harness
