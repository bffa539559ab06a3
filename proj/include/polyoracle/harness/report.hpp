#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polyoracle/harness/oracle_log.hpp"

namespace polyoracle::harness {

struct RunReport {
  std::string command;
  std::string problem;
  std::string instance_digest;  // FNV-1a of the canonical input, 16 hex digits
  std::string answer;
  std::uint64_t total_oracle_cost = 0;
  std::vector<OracleCallRecord> calls;
  double wall_time_seconds = 0.0;
  nlohmann::json details = nlohmann::json::object();

  /// total_oracle_cost equals the sum of call sizes and each call is
  /// charged its size.
  bool reconciles() const;

  bool operator==(const RunReport&) const = default;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
/// fnv1a of j.dump() (object keys are sorted), as 16 lowercase hex digits.
std::string digest(const nlohmann::json& j);

RunReport make_report(std::string command, std::string problem, const nlohmann::json& input,
                      std::string answer, const OracleLog& log, double wall_time_seconds);

nlohmann::json to_json(const RunReport& r);
/// Throws MalformedInput.
RunReport report_from_json(const nlohmann::json& j);

}  // namespace polyoracle::harness
