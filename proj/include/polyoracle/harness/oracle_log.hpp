#pragma once

// Cost accounting for polynomial-oracle computations: a call of size s is
// charged s. The charge is bookkeeping only; wall time is measured apart.

#include <cstdint>
#include <functional>
#include <mutex>
#include <vector>

#include "polyoracle/common/bigint.hpp"
#include "polyoracle/lsframe/solve.hpp"

namespace polyoracle::harness {

struct OracleCallRecord {
  std::uint64_t size = 0;
  std::uint64_t charged_cost = 0;  // always equal to size
  BigInt max_arg_magnitude = 0;
  bool result_nonzero = false;
  bool magnitude_flagged = false;  // argument above the bound for this size

  bool operator==(const OracleCallRecord&) const = default;
};

/// Largest argument magnitude allowed for a call of size s.
using MagnitudeBound = std::function<BigInt(std::uint64_t)>;

/// 2^ceil(s^0.9): a finite stand-in for the 2^(s^o(1)) discipline.
BigInt default_magnitude_bound(std::uint64_t s);

class OracleLog {
 public:
  void record(OracleCallRecord rec);
  std::vector<OracleCallRecord> calls() const;
  std::uint64_t total_cost() const;
  std::size_t call_count() const;
  void clear();

 private:
  mutable std::mutex mu_;
  std::vector<OracleCallRecord> calls_;
};

/// Forwards each query to `inner` and records it in `log`. Oversized
/// arguments are flagged, never rejected; inner failures propagate and
/// leave no record.
ls::Oracle logging_oracle(ls::Oracle inner, OracleLog& log,
                          MagnitudeBound bound = default_magnitude_bound);

}  // namespace polyoracle::harness
