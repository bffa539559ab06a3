#include "polyoracle/lsframe/comparison.hpp"

#include <bit>
#include <string>

#include "polyoracle/common/error.hpp"

namespace polyoracle::ls {

char to_char(Cmp c) {
  switch (c) {
    case Cmp::Less: return '<';
    case Cmp::Equal: return '=';
    case Cmp::Greater: return '>';
  }
  return '?';
}

const std::vector<CmpTuple>& ComparisonSets::of(Cmp c) const {
  switch (c) {
    case Cmp::Less: return less;
    case Cmp::Equal: return equal;
    case Cmp::Greater: return greater;
  }
  return equal;
}

namespace {

void all_tuples(std::uint32_t len, CmpTuple& cur, std::vector<CmpTuple>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (Cmp c : {Cmp::Less, Cmp::Equal, Cmp::Greater}) {
    cur.push_back(c);
    all_tuples(len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ComparisonSets comparison_tuple_sets(std::uint32_t theta) {
  if (theta == 0) throw Error(ErrorKind::PreconditionViolated, "theta must be positive");
  ComparisonSets out;
  out.equal.push_back(CmpTuple(theta, Cmp::Equal));

  for (std::uint32_t q = 1; q <= theta; ++q) {
    std::vector<CmpTuple> tails;
    CmpTuple cur;
    all_tuples(theta - q, cur, tails);
    for (const auto& tail : tails) {
      CmpTuple t(q - 1, Cmp::Equal);
      t.push_back(Cmp::Less);
      t.insert(t.end(), tail.begin(), tail.end());
      out.less.push_back(std::move(t));
    }
  }

  std::vector<CmpTuple> everything;
  CmpTuple cur;
  all_tuples(theta, cur, everything);
  for (auto& t : everything) {
    bool in_eq = t == out.equal.front();
    bool in_lt = false;
    for (const auto& l : out.less) in_lt = in_lt || l == t;
    if (!in_eq && !in_lt) out.greater.push_back(std::move(t));
  }
  return out;
}

Cmp combine(const CmpTuple& blocks) {
  for (Cmp c : blocks) {
    if (c != Cmp::Equal) return c;
  }
  return Cmp::Equal;
}

Cmp compare(std::uint64_t x, std::uint64_t y) {
  if (x < y) return Cmp::Less;
  if (x > y) return Cmp::Greater;
  return Cmp::Equal;
}

std::uint32_t ceil_log2(std::uint64_t s) {
  if (s <= 1) return 0;
  return static_cast<std::uint32_t>(std::bit_width(s - 1));
}

std::uint32_t block_length(std::uint64_t s, std::uint32_t r, std::uint32_t theta) {
  if (theta == 0) throw Error(ErrorKind::PreconditionViolated, "theta must be positive");
  const std::uint64_t bits = std::uint64_t{r} * ceil_log2(s);
  const std::uint64_t L = (bits + theta - 1) / theta;
  return static_cast<std::uint32_t>(L == 0 ? 1 : L);
}

std::uint64_t block_of(std::uint64_t value, std::uint32_t q, std::uint32_t theta, std::uint32_t L) {
  const std::uint64_t shift = std::uint64_t{L} * (theta - q);
  if (shift >= 64) return 0;
  const std::uint64_t mask = L >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << L) - 1;
  return (value >> shift) & mask;
}

Layout Layout::make(std::uint64_t s, std::uint32_t r, std::uint32_t theta) {
  if (s < 2) throw Error(ErrorKind::PreconditionViolated, "instance size must be at least 2");
  if (r == 0) throw Error(ErrorKind::PreconditionViolated, "r must be positive");
  Layout out{s, r, theta, block_length(s, r, theta)};
  (void)out.variable_count();
  return out;
}

std::uint64_t Layout::variable_count() const {
  if (block_len >= 62) throw Error(ErrorKind::TooLarge, "block length too large");
  std::uint64_t out = 3;
  if (__builtin_mul_overflow(out, s + 1, &out) || __builtin_mul_overflow(out, theta, &out) ||
      __builtin_mul_overflow(out, block_values(), &out)) {
    throw Error(ErrorKind::TooLarge, "variable count overflows 64 bits");
  }
  return out;
}

std::uint64_t Layout::line(Cmp c, std::uint64_t row, std::uint32_t q) const {
  return (static_cast<std::uint64_t>(c) * rows() + row) * theta + (q - 1);
}

std::uint64_t Layout::index(Cmp c, std::uint64_t row, std::uint32_t q, std::uint64_t a) const {
  return line(c, row, q) * block_values() + a;
}

std::uint64_t variable_count(std::uint64_t s, std::uint32_t r, std::uint32_t theta) {
  return Layout::make(s, r, theta).variable_count();
}

}  // namespace polyoracle::ls
