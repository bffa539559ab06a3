#include <doctest.h>

#include <map>
#include <set>

#include "polyoracle/common/error.hpp"
#include "polyoracle/lsframe/comparison.hpp"
#include "polyoracle/lsframe/formulation.hpp"
#include "polyoracle/lsframe/solve.hpp"
#include "polyoracle/problems/codec.hpp"
#include "polyoracle/problems/encoders.hpp"
#include "polyoracle/problems/problem_io.hpp"
#include "support/direct_solvers.hpp"
#include "support/random.hpp"

using namespace polyoracle;
using namespace polyoracle::problems;
using testsupport::PlainGraph;
using testsupport::uniform;

namespace {

struct RandomGraph {
  GraphInput input;
  PlainGraph plain{0};
};

RandomGraph random_graph(int n, double p, long wmax) {
  RandomGraph g{{}, PlainGraph(n)};
  g.input.n = static_cast<std::uint32_t>(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!testsupport::coin(p)) continue;
      const long w = uniform(-wmax, wmax);
      g.input.edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), w});
      g.plain.add(u, v, w);
    }
  }
  for (int v = 0; v < n; ++v) {
    const long w = uniform(-wmax, wmax);
    g.input.vertex_weights.push_back(w);
    g.plain.vertex_weight.push_back(w);
  }
  return g;
}

PlainGraph plain(const Graph& h) {
  PlainGraph out(static_cast<int>(h.n()));
  for (const auto& [u, v] : h.edges()) out.add(static_cast<int>(u), static_cast<int>(v));
  return out;
}

GraphInput complete(std::uint32_t n, std::int64_t w = 0) {
  GraphInput in;
  in.n = n;
  for (std::uint32_t u = 1; u <= n; ++u)
    for (std::uint32_t v = u + 1; v <= n; ++v) in.edges.push_back({u, v, w});
  return in;
}

bool brute(const Encoded& e) { return ls::brute_solve(e.spec, e.instance); }

bool via_oracle(const Encoded& e, std::uint32_t theta) {
  return ls::solve_via_oracle(e.spec, e.instance, theta, ls::formulation_oracle(e.spec));
}

}  // namespace

TEST_CASE("codec is a bijection onto 1..n^r and stable in n") {
  for (std::uint32_t r : {1u, 2u, 3u, 4u}) {
    const std::uint64_t nmax = r == 1 ? 64 : r == 2 ? 64 : r == 3 ? 16 : 8;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < r; ++i) total *= nmax;
    std::vector<bool> seen(total + 1);
    std::vector<std::uint64_t> t(r, 1);
    for (;;) {
      const auto code = encode_tuple(t);
      const std::uint64_t mx = *std::max_element(t.begin(), t.end());
      std::uint64_t lower = 1;  // (mx-1)^r
      for (std::uint32_t i = 0; i < r; ++i) lower *= mx - 1;
      // Stable: the code lies in shell mx, independent of the ambient n.
      REQUIRE(code > lower);
      REQUIRE(code <= total);
      std::uint64_t upper = 1;
      for (std::uint32_t i = 0; i < r; ++i) upper *= mx;
      REQUIRE(code <= upper);
      REQUIRE_FALSE(seen[code]);
      seen[code] = true;
      REQUIRE(decode_tuple(code, r) == t);
      std::uint32_t i = 0;
      while (i < r && t[i] == nmax) t[i++] = 1;
      if (i == r) break;
      ++t[i];
    }
    CHECK(std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; }));
  }
  CHECK(encode_tuple({1, 1}) == 1);
  CHECK(encode_tuple({2, 1}) == 2);
  CHECK(encode_tuple({2, 2}) == 3);
  CHECK(encode_tuple({1, 2}) == 4);
  CHECK_THROWS_AS(encode_tuple({0, 1}), Error);
  std::uint64_t out[2];
  CHECK_FALSE(decode_tuple(0, out));
}

TEST_CASE("graph basics and presets") {
  const Graph c4 = preset("c4");
  CHECK(c4.n() == 4);
  CHECK(c4.edges().size() == 4);
  CHECK(c4.nonedges().size() == 2);
  CHECK_FALSE(c4.has_isolated_vertex());
  CHECK(Graph(3, {{1, 2}}).has_isolated_vertex());
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(preset("petersen"), Error);
  for (const auto& name : preset_names()) CHECK(preset(name).n() >= 2);
}

TEST_CASE("k-SUM examples") {
  KSumInput zeros{3, {{0}, {0}, {0}}, {}};
  CHECK(brute(encode_ksum(zeros)));
  KSumInput ones{3, {{1}, {1}, {1}}, {}};
  CHECK_FALSE(brute(encode_ksum(ones)));
  KSumInput mixed{3, {{5, -2}, {7, 1}, {-3, 9}}, 10};
  CHECK(brute(encode_ksum(mixed)) == testsupport::ksum_direct({{5, -2}, {7, 1}, {-3, 9}}));
  KSumInput out_of_range{3, {{0}, {0}, {30}}, 20};
  CHECK_THROWS_AS(encode_ksum(out_of_range), Error);
  KSumInput wrong_count{3, {{0}, {0}}, {}};
  CHECK_THROWS_AS(encode_ksum(wrong_count), Error);
  const auto e = encode_ksum(KSumInput{3, {{-4, 0}, {2}, {3}}, {}});
  for (auto code : e.instance.elements()) {
    for (auto c : decode_tuple(code, 2)) CHECK(c >= 1);
  }
}

TEST_CASE("k-SUM k=2 at s=3, theta=1 has the hand-enumerated monomials") {
  // With W = 1, slot l holds (l+1, v+2). Codes up to 9 cover components
  // <= 3, so the accepted pairs are (1,1)(2,3), (1,2)(2,2), (1,3)(2,1).
  const auto spec = ksum_spec(2, 1);
  const std::vector<std::pair<Code, Code>> pairs = {
      {encode_tuple({1, 1}), encode_tuple({2, 3})},
      {encode_tuple({1, 2}), encode_tuple({2, 2})},
      {encode_tuple({1, 3}), encode_tuple({2, 1})}};
  const auto layout = ls::Layout::make(3, 2, 1);
  std::map<std::vector<std::pair<std::uint64_t, std::uint32_t>>, int> expected;
  for (const auto& [a1, a2] : pairs) {
    for (std::uint64_t i1 = 1; i1 <= 3; ++i1)
      for (std::uint64_t i2 = 1; i2 <= 3; ++i2) {
        auto x = layout.index(ls::Cmp::Equal, i1, 1, a1 - 1);
        auto y = layout.index(ls::Cmp::Equal, i2, 1, a2 - 1);
        std::vector<std::pair<std::uint64_t, std::uint32_t>> powers;
        if (x == y) {
          powers.emplace_back(x, 2);
        } else {
          powers.emplace_back(std::min(x, y), 1);
          powers.emplace_back(std::max(x, y), 1);
        }
        ++expected[powers];
      }
  }
  std::map<std::vector<std::pair<std::uint64_t, std::uint32_t>>, int> got;
  const auto stats = ls::formulation_monomials(spec, 3, 1, [&](const poly::Monomial& m) {
    CHECK(m.coeff == 1);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> key;
    for (const auto& pw : m.powers) key.emplace_back(pw.var, pw.exp);
    ++got[key];
  });
  CHECK(stats.accepted_tuples == 3);
  CHECK(stats.monomials == 27);
  CHECK(got == expected);
}

TEST_CASE("collinearity examples") {
  CHECK(brute(encode_collinearity({{{0, 0}, {1, 1}, {2, 2}}, {}})));
  CHECK_FALSE(brute(encode_collinearity({{{0, 0}, {1, 0}, {0, 1}}, {}})));
  CHECK_FALSE(brute(encode_collinearity({{{0, 0}, {0, 0}, {1, 1}}, {}})));  // duplicates collapse
  CHECK_THROWS_AS(encode_collinearity({{{0, 5}}, 3}), Error);
}

TEST_CASE("H-induced examples") {
  CHECK(brute(encode_h_induced(complete(3), preset("triangle"))));
  CHECK_FALSE(brute(encode_h_induced(complete(4), preset("c4"))));
  GraphInput c4;
  c4.n = 4;
  c4.edges = {{1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {1, 4, 0}};
  CHECK(brute(encode_h_induced(c4, preset("c4"))));
  CHECK_FALSE(brute(encode_h_induced(c4, preset("triangle"))));
}

TEST_CASE("family-induced examples") {
  GraphInput single;
  single.n = 2;
  single.edges = {{1, 2, 0}};
  CHECK_FALSE(brute(encode_family_induced(single, {preset("triangle"), preset("path3")})));
  CHECK(brute(encode_family_induced(single, {preset("triangle"), preset("edge")})));

  // Every witness for K3 avoids the reserved vertex.
  const auto e = encode_family_induced(complete(3), {preset("triangle")});
  CHECK(e.instance.n() == 4);
  CHECK(e.instance.contains(encode_tuple({4, 4})));
  std::uint64_t witnesses = 0;
  const auto& elems = e.instance.elements();
  ls::enumerate_witnesses(e.spec, elems, {}, [&](std::span<const Code> t) {
    ++witnesses;
    for (Code c : t) {
      for (auto x : decode_tuple(c, 2)) CHECK(x <= 3);
    }
    return false;
  });
  CHECK(witnesses == 1);
  CHECK_THROWS_AS(family_induced_spec({Graph(3, {{1, 2}})}), Error);
}

TEST_CASE("min-weight clique examples") {
  CHECK(brute(encode_min_weight_kclique(complete(3, 0), 3, 0)));
  CHECK_FALSE(brute(encode_min_weight_kclique(complete(3, 1), 3, 2)));
  CHECK(brute(encode_min_weight_kclique(complete(3, 1), 3, 3)));
  CHECK_THROWS_AS(encode_min_weight_kclique(complete(3, 1), 1, 3), Error);
  GraphInput bad = complete(3, 9);
  bad.bound = 4;
  CHECK_THROWS_AS(encode_min_weight_kclique(bad, 3, 0), Error);
}

TEST_CASE("MAX H-subgraph examples") {
  GraphInput one;
  one.n = 2;
  one.edges = {{1, 2, 5}};
  one.vertex_weights = {2, 3};
  CHECK(brute(encode_max_h_subgraph(one, preset("edge"), 5, WeightMode::Edges)));
  CHECK_FALSE(brute(encode_max_h_subgraph(one, preset("edge"), 6, WeightMode::Edges)));
  CHECK(brute(encode_max_h_subgraph(one, preset("edge"), 5, WeightMode::Vertices)));
  CHECK_FALSE(brute(encode_max_h_subgraph(one, preset("edge"), 6, WeightMode::Vertices)));
  one.vertex_weights.clear();
  CHECK_THROWS_AS(encode_max_h_subgraph(one, preset("edge"), 0, WeightMode::Vertices), Error);
  CHECK_THROWS_AS(max_h_edge_spec(Graph(3, {{1, 2}}), 1), Error);
}

TEST_CASE("3-SUM encoder agrees with the triple loop") {
  for (int it = 0; it < 500; ++it) {
    const long W = uniform(1, 20);
    KSumInput in;
    in.k = 3;
    in.bound = W;
    std::vector<std::vector<long>> sets(3);
    for (auto& set : sets) {
      std::set<long> vals;
      const int size = static_cast<int>(uniform(1, std::min(6L, 2 * W + 1)));
      while (static_cast<int>(vals.size()) < size) vals.insert(uniform(-W, W));
      set.assign(vals.begin(), vals.end());
      in.sets.emplace_back(set.begin(), set.end());
    }
    REQUIRE(brute(encode_ksum(in)) == testsupport::ksum_direct(sets));
  }
}

TEST_CASE("collinearity encoder agrees with the triple loop") {
  for (int it = 0; it < 500; ++it) {
    const long W = uniform(1, 4);
    std::set<std::pair<long, long>> pts;
    const int n = static_cast<int>(uniform(1, 8));
    while (static_cast<int>(pts.size()) < n) pts.insert({uniform(-W, W), uniform(-W, W)});
    PointSetInput in;
    in.bound = W;
    in.points.assign(pts.begin(), pts.end());
    const std::vector<std::pair<long, long>> plain_pts(pts.begin(), pts.end());
    REQUIRE(brute(encode_collinearity(in)) == testsupport::collinear_direct(plain_pts));
  }
}

TEST_CASE("H-induced encoder agrees with direct enumeration") {
  const std::vector<std::string> names = {"path3", "c4", "triangle"};
  for (int it = 0; it < 300; ++it) {
    const auto g = random_graph(static_cast<int>(uniform(1, 8)), 0.5, 0);
    const auto h = preset(names[it % 3]);
    REQUIRE(brute(encode_h_induced(g.input, h)) == testsupport::has_induced(g.plain, plain(h)));
  }
}

TEST_CASE("family-induced encoder agrees with the OR of members") {
  const std::vector<std::vector<std::string>> families = {
      {"triangle", "path3"}, {"c4"}, {"k4", "c4"}, {"edge", "triangle"}};
  for (int it = 0; it < 300; ++it) {
    const auto g = random_graph(static_cast<int>(uniform(1, 7)), 0.4, 0);
    std::vector<Graph> family;
    bool expected = false;
    for (const auto& name : families[it % families.size()]) {
      family.push_back(preset(name));
      expected = expected || testsupport::has_induced(g.plain, plain(family.back()));
    }
    REQUIRE(brute(encode_family_induced(g.input, family)) == expected);
  }
}

TEST_CASE("min-weight clique encoder agrees with clique enumeration") {
  for (int it = 0; it < 300; ++it) {
    const auto g = random_graph(static_cast<int>(uniform(2, 7)), 0.6, 5);
    const long t = uniform(-8, 8);
    REQUIRE(brute(encode_min_weight_kclique(g.input, 3, t)) ==
            testsupport::min_weight_clique_direct(g.plain, 3, t));
  }
}

TEST_CASE("MAX H-subgraph encoders agree with direct enumeration") {
  for (int it = 0; it < 300; ++it) {
    const auto g = random_graph(static_cast<int>(uniform(2, 7)), 0.5, 4);
    const auto h = preset(it % 2 ? "edge" : "triangle");
    const long t = uniform(-6, 10);
    for (auto mode : {WeightMode::Edges, WeightMode::Vertices}) {
      const bool vertex = mode == WeightMode::Vertices;
      REQUIRE(brute(encode_max_h_subgraph(g.input, h, t, mode)) ==
              testsupport::max_h_direct(g.plain, plain(h), t, vertex));
    }
  }
}

TEST_CASE("encoders solve through the oracle") {
  for (int it = 0; it < 40; ++it) {
    const auto theta = static_cast<std::uint32_t>(1 + it % 3);
    const auto g = random_graph(static_cast<int>(uniform(2, 6)), 0.5, 3);
    const std::vector<Encoded> encodings = {
        encode_h_induced(g.input, preset("path3")),
        encode_family_induced(g.input, {preset("triangle"), preset("c4")}),
        encode_min_weight_kclique(g.input, 3, uniform(-4, 4)),
        encode_max_h_subgraph(g.input, preset("edge"), uniform(-3, 5), WeightMode::Vertices),
        encode_ksum(KSumInput{3, {{uniform(-3, 3), uniform(-3, 3)}, {uniform(-3, 3)}, {uniform(-3, 3)}}, 3}),
        encode_collinearity(PointSetInput{{{0, 0}, {uniform(-3, 3), uniform(-3, 3)}, {1, uniform(-3, 3)}}, 3})};
    for (const auto& e : encodings) REQUIRE(via_oracle(e, theta) == brute(e));
  }
}

TEST_CASE("triangle formulation is explicit at s=6, theta=2") {
  const auto spec = h_induced_spec(preset("triangle"));
  CHECK(ls::formulation_degree(spec, 2) == 6);
  const auto p = ls::formulation_polynomial(spec, 6, 2);
  CHECK(poly::total_degree(p) == 6);
  CHECK(poly::check_explicit(p, {6, 1}, 6));
  for (const auto& m : p.monomials()) CHECK(m.total_degree() == 6);
}

TEST_CASE("problem JSON round trips") {
  using nlohmann::json;
  const json k3 = {{"n", 3}, {"edges", {{1, 2}, {2, 3}, {1, 3}}}};
  const auto enc = encode_problem("triangle", k3);
  CHECK(brute(enc.encoded));
  const json inst = instance_to_json("triangle", enc.encoded.instance, enc.params);
  const auto back = instance_from_json(json::parse(inst.dump()));
  CHECK(back.instance.elements() == enc.encoded.instance.elements());
  CHECK(brute(back));

  const json clique = {{"n", 3}, {"edges", {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}}, {"k", 3}, {"threshold", 2}};
  const auto c = encode_problem("min-weight-clique", clique);
  CHECK(c.params.at("W") == 2);
  const auto c_back = instance_from_json(instance_to_json("min-weight-clique", c.encoded.instance, c.params));
  CHECK_FALSE(brute(c_back));
  CHECK(load_problem_input("min-weight-clique", instance_to_json("min-weight-clique", c.encoded.instance, c.params))
            .instance.m() == c.encoded.instance.m());

  const json ks = {{"sets", {{1, -1}, {0}, {0, 1}}}};
  CHECK(brute(encode_problem("3sum", ks).encoded));
  const json pts = {{"points", {{0, 0}, {1, 2}, {2, 4}}}};
  CHECK(brute(encode_problem("collinearity", pts).encoded));
  const json fam = {{"n", 3}, {"edges", {{1, 2}, {2, 3}}}, {"family", {"triangle", "path3"}}};
  CHECK(brute(encode_problem("family-induced", fam).encoded));
  const json mh = {{"n", 2}, {"edges", {{1, 2, 5}}}, {"H", "edge"}, {"threshold", 5}};
  CHECK(brute(encode_problem("max-h-edge", mh).encoded));
  const json hv = {{"n", 3}, {"edges", {{1, 2}}}, {"H", {{"n", 2}, {"edges", {{1, 2}}}}}};
  CHECK(brute(encode_problem("h-induced", hv).encoded));

  CHECK_THROWS_AS(encode_problem("nope", k3), Error);
  CHECK_THROWS_AS(encode_problem("triangle", json{{"n", 3}}), Error);
  CHECK_THROWS_AS(instance_from_json(json{{"problem", "triangle"}, {"n", 3}}), Error);
  CHECK_THROWS_AS(instance_from_json(json{{"problem", "triangle"}, {"n", 3}, {"elements", {99}}}), Error);
  for (const auto& name : problem_names()) CHECK(problem_spec(name).alpha >= 1);
}
