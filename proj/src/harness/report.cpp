#include "polyoracle/harness/report.hpp"

#include <cstdio>

#include "polyoracle/common/error.hpp"

namespace polyoracle::harness {

using nlohmann::json;

bool RunReport::reconciles() const {
  std::uint64_t total = 0;
  for (const auto& c : calls) {
    if (c.charged_cost != c.size) return false;
    total += c.size;
  }
  return total == total_oracle_cost;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(const json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(j.dump())));
  return buf;
}

RunReport make_report(std::string command, std::string problem, const json& input, std::string answer,
                      const OracleLog& log, double wall_time_seconds) {
  RunReport r;
  r.command = std::move(command);
  r.problem = std::move(problem);
  r.instance_digest = digest(input);
  r.answer = std::move(answer);
  r.calls = log.calls();
  r.total_oracle_cost = log.total_cost();
  r.wall_time_seconds = wall_time_seconds;
  return r;
}

json to_json(const RunReport& r) {
  json calls = json::array();
  for (const auto& c : r.calls) {
    calls.push_back({{"size", c.size},
                     {"charged_cost", c.charged_cost},
                     {"max_arg_magnitude", to_decimal(c.max_arg_magnitude)},
                     {"result_nonzero", c.result_nonzero},
                     {"magnitude_flagged", c.magnitude_flagged}});
  }
  return {{"command", r.command},
          {"problem", r.problem},
          {"instance_digest", r.instance_digest},
          {"answer", r.answer},
          {"total_oracle_cost", r.total_oracle_cost},
          {"calls", std::move(calls)},
          {"wall_time_seconds", r.wall_time_seconds},
          {"details", r.details}};
}

RunReport report_from_json(const json& j) {
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.problem = j.at("problem").get<std::string>();
    r.instance_digest = j.at("instance_digest").get<std::string>();
    r.answer = j.at("answer").get<std::string>();
    r.total_oracle_cost = j.at("total_oracle_cost").get<std::uint64_t>();
    for (const auto& c : j.at("calls")) {
      OracleCallRecord rec;
      rec.size = c.at("size").get<std::uint64_t>();
      rec.charged_cost = c.at("charged_cost").get<std::uint64_t>();
      rec.max_arg_magnitude = parse_bigint(c.at("max_arg_magnitude").get<std::string>());
      rec.result_nonzero = c.at("result_nonzero").get<bool>();
      rec.magnitude_flagged = c.at("magnitude_flagged").get<bool>();
      r.calls.push_back(std::move(rec));
    }
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    r.details = j.value("details", json::object());
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("bad report: ") + e.what());
  }
}

}  // namespace polyoracle::harness
