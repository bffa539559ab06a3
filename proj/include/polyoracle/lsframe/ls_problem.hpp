#pragma once

// Local Subset problems: find alpha elements of S and beta elements of
// U_n \ S (U_n = [1, n^r]) that a fixed local verifier accepts.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace polyoracle::ls {

using Code = std::uint64_t;

/// Sees the alpha in-set codes followed by the beta out-of-set codes.
using Verifier = std::function<bool(std::span<const Code>)>;

/// Optional pruning hook called on proper prefixes of a candidate tuple.
/// Returning false promises that the verifier rejects every completion.
using PrefixFilter = std::function<bool(std::span<const Code>)>;

struct LSProblemSpec {
  std::string name;
  std::uint32_t alpha = 1;
  std::uint32_t beta = 0;
  std::uint32_t r = 1;
  Verifier verifier;
  PrefixFilter feasible_prefix;

  std::uint32_t arity() const { return alpha + beta; }
  bool prefix_ok(std::span<const Code> prefix) const {
    return !feasible_prefix || feasible_prefix(prefix);
  }
};

/// n^r; throws TooLarge when it does not fit 64 bits.
std::uint64_t universe_size(std::uint64_t n, std::uint32_t r);

class LSInstance {
 public:
  LSInstance() = default;
  /// Sorts and checks the elements: distinct and inside [1, n^r].
  /// Throws MalformedInput / ValueOutOfRange.
  LSInstance(std::uint64_t n, std::uint32_t r, std::vector<Code> elements);

  std::uint64_t n() const { return n_; }
  std::uint32_t r() const { return r_; }
  std::uint64_t m() const { return elements_.size(); }
  std::uint64_t size() const { return n_ + elements_.size(); }
  std::uint64_t universe() const { return universe_size(n_, r_); }
  const std::vector<Code>& elements() const { return elements_; }
  bool contains(Code c) const;

 private:
  std::uint64_t n_ = 1;
  std::uint32_t r_ = 1;
  std::vector<Code> elements_;
};

/// Depth-first enumeration of tuples accepted by spec.verifier where
/// position l < alpha draws from `in_set` and the rest from `out_set`.
/// `visit` returns false to stop early. Returns false iff stopped.
bool enumerate_witnesses(const LSProblemSpec& spec, std::span<const Code> in_set,
                         std::span<const Code> out_set,
                         const std::function<bool(std::span<const Code>)>& visit);

}  // namespace polyoracle::ls
