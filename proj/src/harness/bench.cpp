#include "polyoracle/harness/bench.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "polyoracle/common/error.hpp"
#include "polyoracle/lsframe/comparison.hpp"

namespace polyoracle::harness {

BenchResult bench_vars(std::uint32_t r, std::uint32_t theta, const std::vector<std::uint64_t>& sizes) {
  if (sizes.size() < 4) throw Error(ErrorKind::PreconditionViolated, "need at least four sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw Error(ErrorKind::PreconditionViolated, "sizes must ascend");
  }
  BenchResult out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto s : sizes) {
    const auto v = ls::variable_count(s, r, theta);
    out.rows.push_back({s, v});
    const double x = std::log(static_cast<double>(s));
    const double y = std::log(static_cast<double>(v));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(sizes.size());
  out.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return out;
}

std::string to_csv(const BenchResult& result) {
  std::string out = "s,variables\n";
  for (const auto& row : result.rows) out += std::to_string(row.s) + "," + std::to_string(row.variables) + "\n";
  return out;
}

std::string format_slope(double slope) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", slope);
  return buf;
}

std::vector<std::uint64_t> parse_sizes(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = text.find(',');
    parts.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  const auto number = [](std::string_view p) {
    while (!p.empty() && p.front() == ' ') p.remove_prefix(1);
    while (!p.empty() && p.back() == ' ') p.remove_suffix(1);
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (ec != std::errc() || end != p.data() + p.size() || p.empty()) {
      throw Error(ErrorKind::MalformedInput, "bad size '" + std::string(p) + "'");
    }
    return v;
  };
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] != "...") {
      out.push_back(number(parts[i]));
      continue;
    }
    if (out.size() < 2 || i + 1 != parts.size() - 1) {
      throw Error(ErrorKind::MalformedInput, "'...' needs two leading sizes and one final size");
    }
    const auto a = out[out.size() - 2], b = out.back();
    const auto last = number(parts[i + 1]);
    if (b <= a || a == 0) throw Error(ErrorKind::MalformedInput, "progression must increase");
    const bool geometric = b % a == 0;
    for (auto v = b; out.size() < 100000;) {
      v = geometric ? v * (b / a) : v + (b - a);
      if (v > last) break;
      out.push_back(v);
    }
    if (out.back() != last) throw Error(ErrorKind::MalformedInput, "progression does not reach the final size");
    break;
  }
  return out;
}

}  // namespace polyoracle::harness
