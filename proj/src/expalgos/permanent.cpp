#include "polyoracle/expalgos/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <tuple>

#include "polyoracle/common/error.hpp"

namespace polyoracle::exp {

namespace {

Mask bit(std::uint32_t i) { return Mask{1} << i; }

std::vector<std::uint32_t> members(Mask m) {
  std::vector<std::uint32_t> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
  return out;
}

// Rows (p_lo, p_hi] in 1-based prefix terms, i.e. 0-based rows lo..hi-1.
Mask row_range(std::uint32_t lo, std::uint32_t hi) {
  Mask m = 0;
  for (std::uint32_t u = lo; u < hi; ++u) m |= bit(u);
  return m;
}

void require_disjoint(Mask a, Mask b, Mask c = 0) {
  if ((a & b) || (a & c) || (b & c)) throw Error(ErrorKind::PreconditionViolated, "F constraints overlap");
}

}  // namespace

BigInt permanent_brute(const BinaryMatrix& a) {
  if (a.n() > 10) throw Error(ErrorKind::TooLarge, "brute permanent limited to n <= 10");
  auto rec = [&](auto&& self, std::uint32_t row, Mask used) -> BigInt {
    if (row == a.n()) return 1;
    BigInt total = 0;
    for (std::uint32_t v = 0; v < a.n(); ++v) {
      if (a.at(row, v) && !(used & bit(v))) total += self(self, row + 1, used | bit(v));
    }
    return total;
  };
  return rec(rec, 0, 0);
}

BigInt f_count_brute(const BinaryMatrix& a, const FSpec& spec) {
  if (a.n() > 6) throw Error(ErrorKind::TooLarge, "brute F count limited to n <= 6");
  require_disjoint(spec.eq1, spec.eq0, spec.ge1);
  const std::uint32_t n = a.n();
  std::vector<std::uint32_t> target(n, 0);
  BigInt total = 0;
  for (;;) {
    bool edges = true;
    std::vector<std::uint32_t> hits(n, 0);
    for (std::uint32_t u = 0; u < n; ++u) {
      edges = edges && a.at(u, target[u]);
      ++hits[target[u]];
    }
    bool ok = edges;
    for (std::uint32_t v = 0; v < n && ok; ++v) {
      if (spec.eq1 & bit(v)) ok = hits[v] == 1;
      if (spec.eq0 & bit(v)) ok = hits[v] == 0;
      if (spec.ge1 & bit(v)) ok = hits[v] >= 1;
    }
    if (ok) total += 1;
    std::uint32_t u = 0;
    while (u < n && target[u] == n - 1) target[u++] = 0;
    if (u == n) break;
    ++target[u];
  }
  return total;
}

std::uint32_t eq1_size(std::uint32_t n, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::PreconditionViolated, "alpha must lie in [0, 1]");
  const auto k = static_cast<std::uint32_t>(std::ceil(alpha * n - 1e-9));
  return std::min(k, n);
}

std::vector<SignedFSpec> f_expand(const BinaryMatrix& a, Mask eq1, double alpha) {
  if (eq1 & ~a.all()) throw Error(ErrorKind::PreconditionViolated, "S1 outside R");
  if (static_cast<std::uint32_t>(std::popcount(eq1)) != eq1_size(a.n(), alpha)) {
    throw Error(ErrorKind::PreconditionViolated, "|S1| must equal ceil(alpha n)");
  }
  std::vector<SignedFSpec> terms{{1, {eq1, 0, a.all() & ~eq1}}};
  for (std::uint32_t v : members(a.all() & ~eq1)) {
    std::vector<SignedFSpec> next;
    next.reserve(terms.size() * 2);
    for (const auto& t : terms) {
      FSpec dropped = t.spec;
      dropped.ge1 &= ~bit(v);
      FSpec avoided = dropped;
      avoided.eq0 |= bit(v);
      next.push_back({t.sign, dropped});
      next.push_back({-t.sign, avoided});
    }
    terms = std::move(next);
  }
  return terms;
}

BigInt g_count_dp(const BinaryMatrix& a, Mask k, Mask eq1, Mask eq0, bool f) {
  require_disjoint(eq1, eq0);
  const auto targets = members(eq1);
  if (targets.size() > 20) throw Error(ErrorKind::TooLarge, "G variable limited to |S1| <= 20");
  const std::size_t states = std::size_t{1} << targets.size();
  // dp[T] over subsets of S1 in compressed coordinates; dp1 is the f = 1
  // layer for the vertex just added.
  std::vector<BigInt> dp(states, 0), next(states), dp1(states, 0);
  dp[0] = 1;
  bool any = false;
  for (std::uint32_t u : members(k)) {
    any = true;
    const Mask nb = a.neighbors(u);
    const auto free_targets = static_cast<long>(std::popcount(nb & a.all() & ~eq1 & ~eq0));
    for (std::size_t t = 0; t < states; ++t) {
      BigInt hit = 0;
      for (std::size_t j = 0; j < targets.size(); ++j) {
        if (((t >> j) & 1u) && (nb & bit(targets[j]))) hit += dp[t & ~(std::size_t{1} << j)];
      }
      dp1[t] = hit;
      next[t] = hit + free_targets * dp[t];
    }
    std::swap(dp, next);
  }
  if (f) return any ? dp1[states - 1] : BigInt(0);
  return dp[states - 1];
}

TraceShape trace_shape(std::uint32_t eq1_count, std::uint32_t theta) {
  if (theta == 0) throw Error(ErrorKind::PreconditionViolated, "theta must be positive");
  TraceShape shape;
  if (eq1_count == 0) return shape;
  shape.quota = (eq1_count + theta - 1) / theta;
  shape.cuts = std::min(theta - 1, eq1_count / shape.quota);
  shape.last = eq1_count - shape.cuts * shape.quota;
  return shape;
}

Trace trace_of(const BinaryMatrix& a, Mask eq1, std::uint32_t theta, const std::vector<std::uint32_t>& target) {
  const auto shape = trace_shape(static_cast<std::uint32_t>(std::popcount(eq1)), theta);
  const auto elems = members(eq1);
  Trace trace;
  trace.block_of.assign(elems.size(), 0);
  std::uint32_t block = 0, seen = 0;
  for (std::uint32_t u = 0; u < a.n(); ++u) {
    if (!(eq1 & bit(target[u]))) continue;
    const auto pos = std::lower_bound(elems.begin(), elems.end(), target[u]) - elems.begin();
    trace.block_of[pos] = block;
    if (++seen == shape.quota && block < shape.cuts) {
      trace.breakpoints.push_back(u + 1);
      ++block;
      seen = 0;
    }
  }
  return trace;
}

void for_each_trace(const BinaryMatrix& a, Mask eq1, Mask eq0, std::uint32_t theta,
                    const std::function<void(const Trace&, const BigInt&)>& visit, TraceStats* stats) {
  require_disjoint(eq1, eq0);
  const auto elems = members(eq1);
  const auto shape = trace_shape(static_cast<std::uint32_t>(elems.size()), theta);
  if (shape.quota > 12) throw Error(ErrorKind::TooLarge, "trace quota limited to 12");
  const std::uint32_t blocks = shape.cuts + 1;
  std::map<std::tuple<Mask, Mask, bool>, BigInt> memo;
  const auto g = [&](Mask k, Mask w, bool f) -> const BigInt& {
    const auto key = std::make_tuple(k, w, f);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, g_count_dp(a, k, w, eq0 | (eq1 & ~w), f)).first;
    return it->second;
  };

  Trace trace;
  trace.block_of.assign(elems.size(), 0);
  std::vector<std::uint32_t> room(blocks, shape.quota);
  room[blocks - 1] = shape.last;

  const auto emit = [&] {
    std::vector<Mask> w(blocks, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) w[trace.block_of[i]] |= bit(elems[i]);
    BigInt value = 1;
    std::uint32_t lo = 0;
    for (std::uint32_t b = 0; b < blocks && value != 0; ++b) {
      const std::uint32_t hi = b < shape.cuts ? trace.breakpoints[b] : a.n();
      value *= g(row_range(lo, hi), w[b], b < shape.cuts);
      lo = hi;
    }
    if (stats) ++stats->traces;
    visit(trace, value);
  };
  const auto assign = [&](auto&& self, std::size_t i) -> void {
    if (i == elems.size()) return emit();
    for (std::uint32_t b = 0; b < blocks; ++b) {
      if (room[b] == 0) continue;
      --room[b];
      trace.block_of[i] = b;
      self(self, i + 1);
      ++room[b];
    }
  };
  const auto cut = [&](auto&& self, std::uint32_t from) -> void {
    if (trace.breakpoints.size() == shape.cuts) return assign(assign, 0);
    for (std::uint32_t p = from; p <= a.n(); ++p) {
      trace.breakpoints.push_back(p);
      self(self, p + 1);
      trace.breakpoints.pop_back();
    }
  };
  cut(cut, 1);
  if (stats) {
    stats->variables += memo.size();
    stats->max_factors = std::max<std::uint64_t>(stats->max_factors, blocks);
  }
}

BigInt f_count_traces(const BinaryMatrix& a, Mask eq1, Mask eq0, std::uint32_t theta, TraceStats* stats) {
  BigInt total = 0;
  for_each_trace(a, eq1, eq0, theta, [&](const Trace&, const BigInt& v) { total += v; }, stats);
  return total;
}

BigInt permanent_via_formulation(const BinaryMatrix& a, double alpha, std::uint32_t theta, TraceStats* stats) {
  if (a.n() > 10) throw Error(ErrorKind::TooLarge, "formulation permanent limited to n <= 10");
  const Mask eq1 = row_range(0, eq1_size(a.n(), alpha));
  BigInt total = 0;
  for (const auto& t : f_expand(a, eq1, alpha)) {
    const BigInt part = f_count_traces(a, eq1, t.spec.eq0, theta, stats);
    total += t.sign * part;
  }
  return total;
}

BigInt permanent_via_fsets(const BinaryMatrix& a, double alpha) {
  const Mask eq1 = row_range(0, eq1_size(a.n(), alpha));
  BigInt total = 0;
  for (const auto& t : f_expand(a, eq1, alpha)) {
    const BigInt part = g_count_dp(a, a.all(), eq1, t.spec.eq0, false);
    total += t.sign * part;
  }
  return total;
}

}  // namespace polyoracle::exp
