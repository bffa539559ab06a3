#include "polyoracle/lsframe/ls_problem.hpp"

#include <algorithm>
#include <string>

#include "polyoracle/common/error.hpp"

namespace polyoracle::ls {

std::uint64_t universe_size(std::uint64_t n, std::uint32_t r) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    if (__builtin_mul_overflow(out, n, &out)) {
      throw Error(ErrorKind::TooLarge, "universe n^r overflows 64 bits");
    }
  }
  return out;
}

LSInstance::LSInstance(std::uint64_t n, std::uint32_t r, std::vector<Code> elements)
    : n_(n), r_(r), elements_(std::move(elements)) {
  if (n_ == 0 || r_ == 0) throw Error(ErrorKind::MalformedInput, "instance needs n >= 1 and r >= 1");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw Error(ErrorKind::MalformedInput, "instance elements must be distinct");
  }
  const auto top = universe_size(n_, r_);
  if (!elements_.empty() && (elements_.front() < 1 || elements_.back() > top)) {
    throw Error(ErrorKind::ValueOutOfRange,
                "element outside [1, " + std::to_string(top) + "]");
  }
}

bool LSInstance::contains(Code c) const {
  return std::binary_search(elements_.begin(), elements_.end(), c);
}

namespace {

struct Walker {
  const LSProblemSpec& spec;
  std::span<const Code> in_set;
  std::span<const Code> out_set;
  const std::function<bool(std::span<const Code>)>& visit;
  std::vector<Code> tuple;

  bool run(std::size_t pos) {
    const std::size_t k = spec.arity();
    if (pos == k) {
      if (spec.verifier(tuple)) return visit(tuple);
      return true;
    }
    const auto pool = pos < spec.alpha ? in_set : out_set;
    for (Code c : pool) {
      tuple[pos] = c;
      if (pos + 1 < k && !spec.prefix_ok(std::span<const Code>(tuple.data(), pos + 1))) continue;
      if (!run(pos + 1)) return false;
    }
    return true;
  }
};

}  // namespace

bool enumerate_witnesses(const LSProblemSpec& spec, std::span<const Code> in_set,
                         std::span<const Code> out_set,
                         const std::function<bool(std::span<const Code>)>& visit) {
  Walker w{spec, in_set, out_set, visit, std::vector<Code>(spec.arity())};
  return w.run(0);
}

}  // namespace polyoracle::ls
