#include "polyoracle/harness/oracle_log.hpp"

#include <cmath>

namespace polyoracle::harness {

BigInt default_magnitude_bound(std::uint64_t s) {
  const auto exponent = static_cast<unsigned long>(std::ceil(std::pow(static_cast<double>(s), 0.9)));
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

void OracleLog::record(OracleCallRecord rec) {
  std::lock_guard lock(mu_);
  calls_.push_back(std::move(rec));
}

std::vector<OracleCallRecord> OracleLog::calls() const {
  std::lock_guard lock(mu_);
  return calls_;
}

std::uint64_t OracleLog::total_cost() const {
  std::lock_guard lock(mu_);
  std::uint64_t total = 0;
  for (const auto& c : calls_) total += c.charged_cost;
  return total;
}

std::size_t OracleLog::call_count() const {
  std::lock_guard lock(mu_);
  return calls_.size();
}

void OracleLog::clear() {
  std::lock_guard lock(mu_);
  calls_.clear();
}

ls::Oracle logging_oracle(ls::Oracle inner, OracleLog& log, MagnitudeBound bound) {
  return [inner = std::move(inner), &log, bound = std::move(bound)](const ls::BlockAssignment& point) {
    const BigInt value = inner(point);
    OracleCallRecord rec;
    rec.size = point.size();
    rec.charged_cost = rec.size;
    rec.max_arg_magnitude = point.max_magnitude();
    rec.result_nonzero = sgn(value) != 0;
    rec.magnitude_flagged = bound && rec.max_arg_magnitude > bound(rec.size);
    log.record(std::move(rec));
    return value;
  };
}

}  // namespace polyoracle::harness
