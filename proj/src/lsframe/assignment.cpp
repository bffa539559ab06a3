#include "polyoracle/lsframe/assignment.hpp"

#include <algorithm>
#include <string>

#include "polyoracle/common/error.hpp"

namespace polyoracle::ls {

BlockAssignment::BlockAssignment(const Layout& layout)
    : layout_(layout), lines_(3 * layout.rows() * layout.theta) {}

const std::vector<Run>& BlockAssignment::line(Cmp c, std::uint64_t row, std::uint32_t q) const {
  if (row >= layout_.rows() || q < 1 || q > layout_.theta) {
    throw Error(ErrorKind::ValueOutOfRange, "no such line");
  }
  return lines_[layout_.line(c, row, q)];
}

void BlockAssignment::set_line(Cmp c, std::uint64_t row, std::uint32_t q, std::vector<Run> runs) {
  if (row >= layout_.rows() || q < 1 || q > layout_.theta) {
    throw Error(ErrorKind::ValueOutOfRange, "no such line");
  }
  std::erase_if(runs, [](const Run& r) { return sgn(r.value) == 0 || r.begin == r.end; });
  std::uint64_t prev_end = 0;
  for (const auto& r : runs) {
    if (r.begin > r.end || r.begin < prev_end || r.end > layout_.block_values()) {
      throw Error(ErrorKind::MalformedInput, "runs must be sorted, disjoint and in range");
    }
    prev_end = r.end;
  }
  lines_[layout_.line(c, row, q)] = std::move(runs);
}

const BigInt* BlockAssignment::find(Cmp c, std::uint64_t row, std::uint32_t q,
                                    std::uint64_t a) const {
  const auto& runs = line(c, row, q);
  auto it = std::upper_bound(runs.begin(), runs.end(), a,
                             [](std::uint64_t x, const Run& r) { return x < r.end; });
  if (it != runs.end() && it->begin <= a) return &it->value;
  return nullptr;
}

BigInt BlockAssignment::at(Cmp c, std::uint64_t row, std::uint32_t q, std::uint64_t a) const {
  const BigInt* v = find(c, row, q, a);
  return v ? *v : BigInt(0);
}

bool BlockAssignment::row_active(std::uint64_t row) const {
  for (Cmp c : {Cmp::Less, Cmp::Equal, Cmp::Greater}) {
    for (std::uint32_t q = 1; q <= layout_.theta; ++q) {
      if (!line(c, row, q).empty()) return true;
    }
  }
  return false;
}

BigInt BlockAssignment::at(std::uint64_t index) const {
  if (index >= size()) throw Error(ErrorKind::ValueOutOfRange, "variable index out of range");
  const std::uint64_t a = index % layout_.block_values();
  std::uint64_t rest = index / layout_.block_values();
  const auto q = static_cast<std::uint32_t>(rest % layout_.theta) + 1;
  rest /= layout_.theta;
  const std::uint64_t row = rest % layout_.rows();
  const auto c = static_cast<Cmp>(rest / layout_.rows());
  return at(c, row, q, a);
}

BigInt BlockAssignment::max_magnitude() const {
  BigInt best = 0;
  for (const auto& runs : lines_) {
    for (const auto& r : runs) {
      BigInt mag = abs(r.value);
      if (mag > best) best = mag;
    }
  }
  return best;
}

std::vector<BigInt> BlockAssignment::to_dense(std::uint64_t cap) const {
  if (size() > cap) {
    throw Error(ErrorKind::CapExceeded, "dense point of " + std::to_string(size()) + " entries");
  }
  std::vector<BigInt> out(size());
  const std::uint64_t width = layout_.block_values();
  for (std::uint64_t l = 0; l < lines_.size(); ++l) {
    for (const auto& r : lines_[l]) {
      for (std::uint64_t a = r.begin; a < r.end; ++a) out[l * width + a] = r.value;
    }
  }
  return out;
}

BlockAssignment BlockAssignment::from_dense(const Layout& layout, const std::vector<BigInt>& values) {
  BlockAssignment out(layout);
  if (values.size() != out.size()) {
    throw Error(ErrorKind::ArityMismatch, "dense point has " + std::to_string(values.size()) +
                                              " entries, expected " + std::to_string(out.size()));
  }
  const std::uint64_t width = layout.block_values();
  for (std::uint64_t l = 0; l < out.lines_.size(); ++l) {
    auto& runs = out.lines_[l];
    for (std::uint64_t a = 0; a < width; ++a) {
      const BigInt& v = values[l * width + a];
      if (sgn(v) == 0) continue;
      if (!runs.empty() && runs.back().end == a && runs.back().value == v) {
        ++runs.back().end;
      } else {
        runs.push_back(Run{a, a + 1, v});
      }
    }
  }
  return out;
}

std::vector<RowKey> row_keys(const LSInstance& inst) {
  std::vector<RowKey> keys;
  keys.reserve(inst.m() + 2);
  keys.push_back(RowKey{0, Cmp::Less});
  for (Code c : inst.elements()) keys.push_back(RowKey{c - 1, Cmp::Equal});
  keys.push_back(RowKey{inst.universe() - 1, Cmp::Greater});
  return keys;
}

BlockAssignment compute_assignment(const LSInstance& inst, std::uint32_t theta) {
  const Layout layout = Layout::make(inst.size(), inst.r(), theta);
  BlockAssignment out(layout);
  const std::uint64_t width = layout.block_values();
  const auto keys = row_keys(inst);
  for (std::uint64_t i = 0; i < keys.size(); ++i) {
    for (std::uint32_t q = 1; q <= theta; ++q) {
      const std::uint64_t b = block_of(keys[i].value, q, theta, layout.block_len);
      // Block b compared with a: '>' for a < b, '=' at a == b, '<' for a > b.
      std::vector<Run> less{Run{b + 1, width, 1}};
      std::vector<Run> equal{Run{b, b + 1, 1}};
      std::vector<Run> greater{Run{0, b, 1}};
      if (q == theta && keys[i].tie == Cmp::Less) {
        less.front().begin = b;
        equal.clear();
      } else if (q == theta && keys[i].tie == Cmp::Greater) {
        greater.front().end = b + 1;
        equal.clear();
      }
      out.set_line(Cmp::Less, i, q, std::move(less));
      out.set_line(Cmp::Equal, i, q, std::move(equal));
      out.set_line(Cmp::Greater, i, q, std::move(greater));
    }
  }
  return out;
}

}  // namespace polyoracle::ls
