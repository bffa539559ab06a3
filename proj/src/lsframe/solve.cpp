#include "polyoracle/lsframe/solve.hpp"

#include <string>
#include <vector>

#include "polyoracle/common/error.hpp"
#include "polyoracle/lsframe/formulation.hpp"

namespace polyoracle::ls {

bool brute_solve(const LSProblemSpec& spec, const LSInstance& inst) {
  if (inst.r() != spec.r) throw Error(ErrorKind::ArityMismatch, "instance and problem disagree on r");
  const std::uint64_t top = inst.universe();
  if (top > kBruteUniverseCap) {
    throw Error(ErrorKind::UniverseTooLarge, "n^r = " + std::to_string(top) + " above 10^6");
  }
  std::vector<Code> outside;
  if (spec.beta > 0) {
    outside.reserve(top - inst.m());
    for (Code c = 1; c <= top; ++c) {
      if (!inst.contains(c)) outside.push_back(c);
    }
  }
  bool found = false;
  enumerate_witnesses(spec, inst.elements(), outside, [&](std::span<const Code>) {
    found = true;
    return false;
  });
  return found;
}

Oracle formulation_oracle(const LSProblemSpec& spec) {
  return [spec](const BlockAssignment& point) { return evaluate_at_point(spec, point); };
}

bool solve_via_oracle(const LSProblemSpec& spec, const LSInstance& inst, std::uint32_t theta,
                      const Oracle& oracle) {
  if (inst.r() != spec.r) throw Error(ErrorKind::ArityMismatch, "instance and problem disagree on r");
  const BlockAssignment point = compute_assignment(inst, theta);
  return sgn(oracle(point)) != 0;
}

}  // namespace polyoracle::ls
