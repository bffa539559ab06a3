#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "polyoracle/common/error.hpp"
#include "polyoracle/expalgos/binary_matrix.hpp"
#include "polyoracle/expalgos/permanent.hpp"
#include "polyoracle/expalgos/set_cover.hpp"
#include "polyoracle/expalgos/set_family.hpp"
#include "polyoracle/expalgos/set_partition.hpp"
#include "support/expalgos_oracles.hpp"
#include "support/random.hpp"

using namespace polyoracle;
using namespace polyoracle::exp;
using namespace testsupport;

namespace {

// Every mapping from the rows in `rows` to R, with a callback on the
// target vector (entries for other rows are unspecified).
template <class Visit>
void for_each_mapping(const BinaryMatrix& a, const std::vector<std::uint32_t>& rows, Visit&& visit) {
  std::vector<std::uint32_t> target(a.n(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == rows.size()) return visit(target);
    for (std::uint32_t v = 0; v < a.n(); ++v) {
      if (!a.at(rows[i], v)) continue;
      target[rows[i]] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

long g_oracle(const BinaryMatrix& a, Mask k, Mask eq1, Mask eq0, bool f) {
  const auto rows = bits(k);
  if (f && rows.empty()) return 0;
  long total = 0;
  for_each_mapping(a, rows, [&](const std::vector<std::uint32_t>& t) {
    std::vector<int> hits(a.n(), 0);
    for (auto u : rows) ++hits[t[u]];
    for (std::uint32_t v = 0; v < a.n(); ++v) {
      if (((eq1 >> v) & 1u) && hits[v] != 1) return;
      if (((eq0 >> v) & 1u) && hits[v] != 0) return;
    }
    if (f && !((eq1 >> t[rows.back()]) & 1u)) return;
    ++total;
  });
  return total;
}

// Random disjoint (eq1, eq0, ge1) over n columns.
FSpec random_spec(std::uint32_t n) {
  FSpec s;
  for (std::uint32_t v = 0; v < n; ++v) {
    switch (uniform(0, 3)) {
      case 0: s.eq1 |= Mask{1} << v; break;
      case 1: s.eq0 |= Mask{1} << v; break;
      case 2: s.ge1 |= Mask{1} << v; break;
      default: break;
    }
  }
  return s;
}

SetFamily fam(std::uint32_t n, std::initializer_list<std::initializer_list<std::uint32_t>> sets) {
  SetFamily f{n, {}};
  for (const auto& s : sets) {
    Mask m = 0;
    for (auto e : s) m |= Mask{1} << (e - 1);
    f.sets.push_back(m);
  }
  return f;
}

}  // namespace

TEST_CASE("matrix text format") {
  const auto a = BinaryMatrix::parse("110\n011\n101\n");
  CHECK(a.n() == 3);
  CHECK(a.at(0, 1));
  CHECK_FALSE(a.at(0, 2));
  CHECK(BinaryMatrix::parse(a.to_text()) == a);
  CHECK_THROWS_AS(BinaryMatrix::parse("10\n1\n"), Error);
  CHECK_THROWS_AS(BinaryMatrix::parse("12\n01\n"), Error);
}

TEST_CASE("brute permanent examples") {
  CHECK(permanent_brute(BinaryMatrix::identity(3)) == 1);
  CHECK(permanent_brute(BinaryMatrix::all_ones(3)) == 6);
  CHECK(permanent_brute(BinaryMatrix::parse("110\n011\n101\n")) == 2);
  CHECK_THROWS_AS(permanent_brute(BinaryMatrix(11)), Error);
  for (int it = 0; it < 100; ++it) {
    const auto a = random_matrix(static_cast<std::uint32_t>(uniform(1, 7)), 0.6);
    REQUIRE(permanent_brute(a) == permanent_oracle(a));
  }
}

TEST_CASE("F counts") {
  const auto a = random_matrix(4, 0.7);
  long degrees = 1;
  for (std::uint32_t u = 0; u < 4; ++u) degrees *= std::popcount(a.neighbors(u));
  CHECK(f_count_brute(a, {}) == degrees);
  CHECK(f_count_brute(BinaryMatrix::all_ones(2), {0, 3, 0}) == 0);
  CHECK_THROWS_AS(f_count_brute(a, {1, 1, 0}), Error);
  CHECK_THROWS_AS(f_count_brute(BinaryMatrix(7), {}), Error);
}

TEST_CASE("F identity holds exhaustively for n <= 5") {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (int it = 0; it < 6; ++it) {
      const auto a = random_matrix(n, 0.6);
      // Every disjoint triple via a ternary digit per column (3 = free).
      std::uint32_t combos = 1;
      for (std::uint32_t i = 0; i < n; ++i) combos *= 4;
      for (std::uint32_t c = 0; c < combos; ++c) {
        FSpec s;
        for (std::uint32_t v = 0, x = c; v < n; ++v, x /= 4) {
          const Mask b = Mask{1} << v;
          if (x % 4 == 0) s.eq1 |= b;
          if (x % 4 == 1) s.eq0 |= b;
          if (x % 4 == 2) s.ge1 |= b;
        }
        for (auto v : bits(s.ge1)) {
          const Mask b = Mask{1} << v;
          const BigInt lhs = f_count_brute(a, s);
          const BigInt rhs = f_count_brute(a, {s.eq1, s.eq0, s.ge1 & ~b}) -
                             f_count_brute(a, {s.eq1, s.eq0 | b, s.ge1 & ~b});
          REQUIRE(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("f_expand") {
  const auto a = BinaryMatrix::all_ones(3);
  const auto whole = f_expand(a, 0b111, 1.0);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].sign == 1);
  CHECK(whole[0].spec == FSpec{0b111, 0, 0});
  const auto two = f_expand(a, 0b011, 0.6);
  REQUIRE(two.size() == 2);
  CHECK(two[0].sign == 1);
  CHECK(two[1].sign == -1);
  CHECK(two[1].spec.eq0 == 0b100);
  CHECK_THROWS_AS(f_expand(a, 0b001, 0.6), Error);
  for (int it = 0; it < 60; ++it) {
    const auto n = static_cast<std::uint32_t>(uniform(1, 6));
    const auto a2 = random_matrix(n, 0.6);
    const double alpha = uniform(0, 4) / 4.0;
    const Mask eq1 = (Mask{1} << eq1_size(n, alpha)) - 1;
    const auto terms = f_expand(a2, eq1, alpha);
    REQUIRE(terms.size() == (std::size_t{1} << (n - std::popcount(eq1))));
    BigInt total = 0;
    for (const auto& t : terms) {
      REQUIRE(t.spec.ge1 == 0);
      total += t.sign * f_count_brute(a2, t.spec);
    }
    REQUIRE(total == permanent_oracle(a2));
  }
}

TEST_CASE("G dynamic programme") {
  const auto a = random_matrix(4, 0.6);
  CHECK(g_count_dp(a, 0, 0, 0, false) == 1);
  CHECK(g_count_dp(a, 0, 0, 0, true) == 0);
  for (int it = 0; it < 300; ++it) {
    const auto n = static_cast<std::uint32_t>(uniform(1, 6));
    const auto b = random_matrix(n, 0.6);
    const auto s = random_spec(n);
    const Mask k = static_cast<Mask>(uniform(0, (1 << n) - 1));
    const bool f = coin();
    REQUIRE(g_count_dp(b, k, s.eq1, s.eq0, f) == g_oracle(b, k, s.eq1, s.eq0, f));
  }
}

TEST_CASE("trace shape") {
  CHECK(trace_shape(0, 3).cuts == 0);
  const auto s = trace_shape(5, 2);
  CHECK(s.quota == 3);
  CHECK(s.cuts == 1);
  CHECK(s.last == 2);
  const auto t = trace_shape(1, 3);  // one preimage cannot fill two blocks
  CHECK(t.cuts == 1);
  CHECK(t.last == 0);
  const auto u = trace_shape(6, 3);
  CHECK(u.cuts == 2);
  CHECK(u.last == 2);
}

TEST_CASE("trace sums equal F counts") {
  const auto a = random_matrix(4, 0.6);
  CHECK(f_count_traces(a, 0, 0b0100, 1) == g_count_dp(a, a.all(), 0, 0b0100, false));
  for (int it = 0; it < 200; ++it) {
    const auto n = static_cast<std::uint32_t>(uniform(1, 6));
    const auto b = random_matrix(n, 0.6);
    auto s = random_spec(n);
    const auto theta = static_cast<std::uint32_t>(uniform(1, 3));
    TraceStats stats;
    REQUIRE(f_count_traces(b, s.eq1, s.eq0, theta, &stats) == f_count_brute(b, {s.eq1, s.eq0, 0}));
    const auto shape = trace_shape(static_cast<std::uint32_t>(std::popcount(s.eq1)), theta);
    REQUIRE(stats.max_factors == shape.cuts + 1);
    if (shape.cuts == theta - 1) REQUIRE(stats.max_factors == theta);
  }
}

TEST_CASE("each mapping lies under exactly one trace") {
  for (int it = 0; it < 40; ++it) {
    const auto n = static_cast<std::uint32_t>(uniform(2, 5));
    const auto a = random_matrix(n, 0.7);
    const auto s = random_spec(n);
    const auto theta = static_cast<std::uint32_t>(uniform(1, 3));
    std::map<Trace, long> audit;
    std::vector<std::uint32_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0u);
    for_each_mapping(a, rows, [&](const std::vector<std::uint32_t>& t) {
      std::vector<int> hits(n, 0);
      for (auto v : t) ++hits[v];
      for (std::uint32_t v = 0; v < n; ++v) {
        if (((s.eq1 >> v) & 1u) && hits[v] != 1) return;
        if (((s.eq0 >> v) & 1u) && hits[v] != 0) return;
      }
      ++audit[trace_of(a, s.eq1, theta, t)];
    });
    std::map<Trace, long> listed;
    for_each_trace(a, s.eq1, s.eq0, theta, [&](const Trace& tr, const BigInt& v) {
      REQUIRE(listed.count(tr) == 0);  // traces are enumerated once
      if (v != 0) listed[tr] = v.get_si();
    });
    REQUIRE(audit == listed);
  }
}

TEST_CASE("permanent through the formulation") {
  CHECK(permanent_via_formulation(BinaryMatrix::identity(4), 0.5, 2) == 1);
  CHECK(permanent_via_formulation(BinaryMatrix::all_ones(4), 0.5, 2) == 24);
  CHECK(permanent_via_fsets(BinaryMatrix::all_ones(4), 0.5) == 24);
  CHECK(permanent_via_formulation(BinaryMatrix(0), 0.5, 2) == 1);
  CHECK_THROWS_AS(permanent_via_formulation(BinaryMatrix(11), 0.5, 2), Error);
  for (int it = 0; it < 60; ++it) {
    const auto a = random_matrix(static_cast<std::uint32_t>(uniform(1, 7)), 0.6);
    const auto theta = static_cast<std::uint32_t>(uniform(1, 3));
    const double alpha = uniform(1, 4) / 4.0;
    const long expected = permanent_oracle(a);
    REQUIRE(permanent_via_formulation(a, alpha, theta) == expected);
    REQUIRE(permanent_via_fsets(a, alpha) == expected);
  }
}

TEST_CASE("set family JSON") {
  const auto f = fam(3, {{1, 2}, {}, {3}});
  const auto back = family_from_json(nlohmann::json::parse(to_json(f).dump()));
  CHECK(back == f);
  CHECK_THROWS_AS(family_from_json(nlohmann::json{{"n", 2}, {"sets", {{3}}}}), Error);
  CHECK_THROWS_AS(family_from_json(nlohmann::json{{"sets", {{1}}}}), Error);
}

TEST_CASE("brute set partition") {
  CHECK(setpartition_brute(fam(2, {{1}, {2}}), 2) == 1);
  CHECK(setpartition_brute(fam(2, {{1, 2}}), 1) == 1);
  CHECK(setpartition_brute(fam(2, {{1}, {1}, {2}}), 2) == 2);
  for (int it = 0; it < 200; ++it) {
    const auto f = random_family(static_cast<std::uint32_t>(uniform(0, 6)), static_cast<std::uint32_t>(uniform(0, 8)), 3);
    const auto k = static_cast<std::uint32_t>(uniform(0, 4));
    REQUIRE(setpartition_brute(f, k) == partition_oracle(f, k));
  }
}

TEST_CASE("z variables") {
  const auto f = fam(4, {{1}, {2}, {1, 2}, {3}});
  CHECK(z_var_dp(f, 0, 0b1000, 0) == 1);
  CHECK(z_var_dp(f, 0, 0b1000, 1) == 0);
  CHECK_THROWS_AS(z_var_dp(f, 0b11, 0, 1), Error);
  for (int it = 0; it < 300; ++it) {
    const auto n = static_cast<std::uint32_t>(uniform(2, 7));
    const auto g = random_family(n, static_cast<std::uint32_t>(uniform(0, 8)), 3, 0.0);
    const Mask a = static_cast<Mask>(uniform(0, (1 << n) - 1));
    const Mask b = static_cast<Mask>(uniform(1, (1 << n) - 1)) & ~a;
    if (b == 0) continue;
    const auto k = static_cast<std::uint32_t>(uniform(0, 4));
    const auto bmin = static_cast<std::uint32_t>(std::countr_zero(b));
    const long expected = count_subsets(g, k, [&](const std::vector<std::uint32_t>& pick) {
      Mask u = 0;
      for (auto i : pick) {
        const Mask s = g.sets[i];
        if (s == 0 || (u & s) || static_cast<std::uint32_t>(std::countr_zero(s)) >= bmin) return false;
        u |= s;
      }
      return u == a;
    });
    REQUIRE(z_var_dp(g, a, b, k) == expected);
  }
}

TEST_CASE("set partition through traces") {
  CHECK(setpartition_via_traces(fam(2, {{1}, {2}}), 2, 1) == 1);
  SetFamily empties{0, {0, 0, 0, 0}};
  CHECK(setpartition_via_traces(empties, 2, 1) == 6);
  CHECK(setpartition_via_traces(empties, 0, 3) == 1);
  CHECK_THROWS_AS(setpartition_via_traces(fam(4, {{1, 2, 3}}), 1, 1), Error);
  CHECK_THROWS_AS(setpartition_via_traces(fam(4, {{1}}), 1, 4), Error);
  for (int it = 0; it < 300; ++it) {
    const auto theta = static_cast<std::uint32_t>(uniform(1, 3));
    const auto n = static_cast<std::uint32_t>(uniform(2 * theta, 9));
    const auto f = random_family(n, static_cast<std::uint32_t>(uniform(1, 12)), n / (2 * theta));
    const auto k = static_cast<std::uint32_t>(uniform(0, 6));
    REQUIRE(setpartition_via_traces(f, k, theta) == partition_oracle(f, k));
  }
}

TEST_CASE("each set partition lies under exactly one term") {
  for (int it = 0; it < 60; ++it) {
    const auto theta = static_cast<std::uint32_t>(uniform(1, 3));
    const auto n = static_cast<std::uint32_t>(uniform(2 * theta, 6));
    const auto f = random_family(n, static_cast<std::uint32_t>(uniform(1, 10)), n / (2 * theta));
    const auto k = static_cast<std::uint32_t>(uniform(1, 5));
    std::map<PartitionTerm, long> audit;
    count_subsets(f, k, [&](const std::vector<std::uint32_t>& pick) {
      std::vector<int> hits(n, 0);
      for (auto i : pick)
        for (auto e : bits(f.sets[i])) ++hits[e];
      if (!std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return false;
      ++audit[partition_term_of(f, pick, theta)];
      return true;
    });
    std::map<PartitionTerm, long> listed;
    PartitionStats stats;
    for_each_partition_term(f, k, theta, [&](const PartitionTerm& t, const BigInt& v) {
      REQUIRE(listed.count(t) == 0);
      listed[t] = v.get_si();
    }, &stats);
    REQUIRE(audit == listed);
    REQUIRE(stats.max_degree <= 1 + 4 * theta);
  }
}

TEST_CASE("#HCV expansion and branching") {
  const auto e = hcv_expand_setcover(fam(2, {{1, 2}}), 1);
  CHECK(e.sets == std::vector<Mask>{0b11, 0b10});
  const auto g = fam(3, {{1, 2}, {3}});
  CHECK(hcv_expand_setcover(g, 0) == g);
  const auto one = hcv_branch(g, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].sign == 1);
  CHECK(one[0].family == g);
  const auto two = hcv_branch(g, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].sign == 1);
  CHECK(two[1].sign == -1);
  CHECK(hcv_brute(fam(1, {{1}}), 1, 1) == 1);
  CHECK(hcv_brute(fam(1, {{1}, {1}}), 1, 2) == 0);

  for (int it = 0; it < 200; ++it) {
    const auto n = static_cast<std::uint32_t>(uniform(1, 8));
    const auto m = static_cast<std::uint32_t>(uniform(0, n));
    const auto f = random_family(n, static_cast<std::uint32_t>(uniform(1, 9)), 3);
    const auto k = static_cast<std::uint32_t>(uniform(1, 4));
    const BigInt brute = hcv_brute(f, m, k);
    REQUIRE(brute == hcv_oracle(f, m, k));
    const auto terms = hcv_branch(f, m);
    REQUIRE(terms.size() == (std::size_t{1} << (n - m)));
    BigInt total = 0;
    for (const auto& t : terms) total += t.sign * setpartition_brute(t.family, k);
    REQUIRE(total == brute);
    // A k-cover makes the expanded count positive; a positive count gives a
    // cover by at most k original sets (two expansions of one set may both
    // be chosen).
    const auto cover = [&](std::uint32_t j) {
      return count_subsets(f, j, [&](const std::vector<std::uint32_t>& pick) {
        Mask c = 0;
        for (auto i : pick) c |= f.sets[i];
        return c == f.universe();
      }) > 0;
    };
    const auto expanded = hcv_expand_setcover(f, m);
    if (expanded.sets.size() <= 18) {
      const bool positive = hcv_brute(expanded, m, k) > 0;
      if (cover(k)) REQUIRE(positive);
      if (positive) {
        bool some = false;
        for (std::uint32_t j = 0; j <= k; ++j) some = some || cover(j);
        REQUIRE(some);
      }
    }
  }
  CHECK(hcv_brute(fam(3, {{1, 2}, {3}, {1, 3}}), 3, 2) == partition_oracle(fam(3, {{1, 2}, {3}, {1, 3}}), 2));
}

TEST_CASE("set cover minimum") {
  CHECK(setcover_min(fam(3, {{1, 2, 3}}), CoverMethod::Brute) == 1u);
  CHECK(setcover_min(fam(3, {{1, 2, 3}}), CoverMethod::Reduction) == 1u);
  CHECK(setcover_min(fam(3, {{1}, {2}, {3}}), CoverMethod::Brute) == 3u);
  CHECK(setcover_min(fam(3, {{1}, {2}, {3}}), CoverMethod::Reduction) == 3u);
  CHECK_FALSE(setcover_min(fam(3, {{1}, {2}}), CoverMethod::Reduction).has_value());
  CHECK(reduction_split(fam(5, {{1, 4, 5}}), 1) == 4);
  CHECK(reduction_split(fam(4, {{1, 2, 3}}), 1) == 0);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::uint32_t>(uniform(1, 8));
    const auto f = random_family(n, static_cast<std::uint32_t>(uniform(1, 8)), 3, 0.05);
    const auto expected = cover_oracle(f);
    REQUIRE(setcover_min(f, CoverMethod::Brute) == expected);
    REQUIRE(setcover_min(f, CoverMethod::Reduction) == expected);
  }
}
