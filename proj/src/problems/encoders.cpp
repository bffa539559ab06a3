#include "polyoracle/problems/encoders.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "polyoracle/common/error.hpp"
#include "polyoracle/problems/codec.hpp"

namespace polyoracle::problems {

using ls::LSInstance;
using ls::LSProblemSpec;

namespace {

using Codes = std::span<const Code>;
using Tuple4 = std::array<std::uint64_t, 4>;

Tuple4 decode(Code code, std::uint32_t r) {
  Tuple4 out{0, 0, 0, 0};
  decode_tuple(code, std::span<std::uint64_t>(out.data(), r));
  return out;
}

Pair pair_of(Code code) {
  const auto d = decode(code, 2);
  return {d[0], d[1]};
}

bool increasing(Codes codes) {
  for (std::size_t i = 1; i < codes.size(); ++i) {
    if (codes[i - 1] >= codes[i]) return false;
  }
  return true;
}

std::uint64_t shifted(std::int64_t v, std::int64_t W) { return static_cast<std::uint64_t>(v + W + 1); }

bool in_range(std::uint64_t x, std::int64_t W) {
  return x >= 1 && x <= static_cast<std::uint64_t>(2 * W + 1);
}

std::int64_t unshift(std::uint64_t x, std::int64_t W) { return static_cast<std::int64_t>(x) - W - 1; }

std::int64_t range_of(const std::optional<std::int64_t>& bound, std::int64_t observed) {
  if (bound && *bound < 0) throw Error(ErrorKind::ValueOutOfRange, "bound must be nonnegative");
  const std::int64_t W = bound ? *bound : observed;
  if (W > (std::int64_t{1} << 30)) throw Error(ErrorKind::ValueOutOfRange, "value range too large");
  return W;
}

void check_value(std::int64_t v, std::int64_t W) {
  if (v < -W || v > W) {
    throw Error(ErrorKind::ValueOutOfRange,
                std::to_string(v) + " outside [-" + std::to_string(W) + ", " + std::to_string(W) + "]");
  }
}

std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

std::size_t pair_count(std::size_t k) { return k * (k - 1) / 2; }

void require_pattern(const Graph& h, bool allow_isolated) {
  if (h.n() > kMaxPatternVertices) throw Error(ErrorKind::TooLarge, "pattern graph too large");
  if (h.edges().empty()) throw Error(ErrorKind::PreconditionViolated, "pattern needs an edge");
  if (!allow_isolated && h.has_isolated_vertex()) {
    throw Error(ErrorKind::PreconditionViolated, "pattern must not have isolated vertices");
  }
}

std::vector<Pair> pairs_of(Codes codes) {
  std::vector<Pair> out;
  out.reserve(codes.size());
  for (Code c : codes) out.push_back(pair_of(c));
  return out;
}

}  // namespace

Graph GraphInput::graph() const {
  std::vector<Pair> pairs;
  for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
  return Graph(n, std::move(pairs));
}

LSProblemSpec ksum_spec(std::uint32_t k, std::int64_t W) {
  if (k == 0) throw Error(ErrorKind::PreconditionViolated, "k must be positive");
  LSProblemSpec spec;
  spec.name = "ksum";
  spec.alpha = k;
  spec.r = 2;
  // Slot l holds (l+1, value + W + 1); the prefix sum must stay repairable.
  const auto scan = [k, W](Codes t, bool full) {
    std::int64_t sum = 0;
    for (std::size_t l = 0; l < t.size(); ++l) {
      const auto d = decode(t[l], 2);
      if (d[0] != l + 1 || !in_range(d[1], W)) return false;
      sum += unshift(d[1], W);
    }
    if (full) return sum == 0;
    return magnitude(sum) <= static_cast<std::int64_t>(k - t.size()) * W;
  };
  spec.verifier = [scan](Codes t) { return scan(t, true); };
  spec.feasible_prefix = [scan](Codes t) { return scan(t, false); };
  return spec;
}

LSProblemSpec collinearity_spec(std::int64_t W) {
  LSProblemSpec spec;
  spec.name = "collinearity";
  spec.alpha = 3;
  spec.r = 2;
  spec.verifier = [W](Codes t) {
    if (!increasing(t)) return false;
    std::array<std::pair<__int128, __int128>, 3> p;
    for (int i = 0; i < 3; ++i) {
      const auto d = decode(t[i], 2);
      p[i] = {unshift(d[0], W), unshift(d[1], W)};
    }
    const __int128 cross = (p[1].first - p[0].first) * (p[2].second - p[0].second) -
                           (p[2].first - p[0].first) * (p[1].second - p[0].second);
    return cross == 0;
  };
  spec.feasible_prefix = [](Codes t) { return increasing(t); };
  return spec;
}

LSProblemSpec h_induced_spec(const Graph& h) {
  require_pattern(h, true);
  LSProblemSpec spec;
  spec.name = "h-induced";
  spec.alpha = static_cast<std::uint32_t>(h.edges().size());
  spec.beta = static_cast<std::uint32_t>(pair_count(h.n()) - h.edges().size());
  spec.r = 2;
  const std::uint32_t alpha = spec.alpha;
  const auto split = [alpha](Codes t) {
    const std::size_t e = std::min<std::size_t>(t.size(), alpha);
    return std::pair{t.subspan(0, e), t.subspan(e)};
  };
  spec.verifier = [h, split](Codes t) {
    auto [a, b] = split(t);
    return increasing(a) && increasing(b) && realizes_induced(h, pairs_of(a), pairs_of(b));
  };
  spec.feasible_prefix = [h, split](Codes t) {
    auto [a, b] = split(t);
    return increasing(a) && increasing(b) && could_realize(h, pairs_of(a), pairs_of(b));
  };
  return spec;
}

LSProblemSpec family_induced_spec(const std::vector<Graph>& family) {
  if (family.empty()) throw Error(ErrorKind::PreconditionViolated, "empty pattern family");
  LSProblemSpec spec;
  spec.name = "family-induced";
  spec.r = 2;
  spec.alpha = 0;
  for (const auto& h : family) {
    require_pattern(h, false);
    spec.alpha = std::max<std::uint32_t>(spec.alpha, static_cast<std::uint32_t>(h.edges().size()));
    spec.beta = std::max<std::uint32_t>(spec.beta,
                                        static_cast<std::uint32_t>(pair_count(h.n()) - h.edges().size()));
  }
  const std::uint32_t alpha = spec.alpha;
  // Member h uses the leading |E(h)| in-set slots and leading |nonedges(h)|
  // out-of-set slots. Spare in-set slots must hold a loop (only the
  // reserved vertex has one) and spare out-of-set slots the pair (1, 1).
  const auto fits = [alpha](const Graph& h, Codes t, bool full) {
    const std::size_t e = h.edges().size();
    const std::size_t f = pair_count(h.n()) - e;
    const auto a = t.subspan(0, std::min<std::size_t>(t.size(), alpha));
    const auto b = t.size() > alpha ? t.subspan(alpha) : Codes{};
    const auto lead_a = a.subspan(0, std::min(a.size(), e));
    const auto lead_b = b.subspan(0, std::min(b.size(), f));
    for (std::size_t i = lead_a.size(); i < a.size(); ++i) {
      const auto p = pair_of(a[i]);
      if (p.first != p.second) return false;
    }
    for (std::size_t i = lead_b.size(); i < b.size(); ++i) {
      if (b[i] != 1) return false;
    }
    if (!increasing(lead_a) || !increasing(lead_b)) return false;
    return full ? realizes_induced(h, pairs_of(lead_a), pairs_of(lead_b))
                : could_realize(h, pairs_of(lead_a), pairs_of(lead_b));
  };
  spec.verifier = [family, fits](Codes t) {
    return std::any_of(family.begin(), family.end(), [&](const Graph& h) { return fits(h, t, true); });
  };
  spec.feasible_prefix = [family, fits](Codes t) {
    return std::any_of(family.begin(), family.end(), [&](const Graph& h) { return fits(h, t, false); });
  };
  return spec;
}

LSProblemSpec min_weight_clique_spec(std::uint32_t k, std::int64_t W) {
  if (k < 2) throw Error(ErrorKind::PreconditionViolated, "clique size must be at least 2");
  if (k > kMaxPatternVertices) throw Error(ErrorKind::TooLarge, "clique size too large");
  LSProblemSpec spec;
  spec.name = "min-weight-clique";
  const std::size_t e = pair_count(k);
  spec.alpha = static_cast<std::uint32_t>(e + 1);
  spec.r = 4;
  // Slots 0..e-1: edge records (1, u, v, w) in increasing order spanning a
  // k-clique; slot e: the threshold record (2, 1, 1, threshold).
  const auto scan = [k, e, W](Codes t, bool full) {
    const auto edges = t.subspan(0, std::min(t.size(), e));
    if (!increasing(edges)) return false;
    std::vector<Pair> pairs;
    std::int64_t total = 0;
    for (Code c : edges) {
      const auto d = decode(c, 4);
      if (d[0] != 1 || !in_range(d[3], W)) return false;
      pairs.emplace_back(d[1], d[2]);
      total += unshift(d[3], W);
    }
    std::vector<std::uint64_t> vertices;
    for (const auto& [u, v] : pairs) {
      if (u >= v) return false;
      vertices.push_back(u);
      vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (vertices.size() > k) return false;
    if (!full) return true;
    const auto d = decode(t[e], 4);
    if (d[0] != 2 || d[1] != 1 || d[2] != 1 || !in_range(d[3], W)) return false;
    return vertices.size() == k && total <= unshift(d[3], W);
  };
  spec.verifier = [scan](Codes t) { return scan(t, true); };
  spec.feasible_prefix = [scan](Codes t) { return scan(t, false); };
  return spec;
}

LSProblemSpec max_h_edge_spec(const Graph& h, std::int64_t W) {
  require_pattern(h, false);
  LSProblemSpec spec;
  spec.name = "max-h-edge";
  const std::size_t e = h.edges().size();
  spec.alpha = static_cast<std::uint32_t>(e + 1);
  spec.beta = static_cast<std::uint32_t>(pair_count(h.n()) - e);
  spec.r = 4;
  const std::size_t alpha = spec.alpha;
  // Slots: e weighted edges (1, u, v, w), the threshold (3, 1, 1, t), then
  // the non-edges as absent adjacency records (2, s, t, 1).
  const auto scan = [h, e, alpha, W](Codes t, bool full) {
    const auto edges = t.subspan(0, std::min(t.size(), e));
    const auto non = t.size() > alpha ? t.subspan(alpha) : Codes{};
    if (!increasing(edges) || !increasing(non)) return false;
    std::vector<Pair> ep, np;
    std::int64_t total = 0;
    for (Code c : edges) {
      const auto d = decode(c, 4);
      if (d[0] != 1 || !in_range(d[3], W)) return false;
      ep.emplace_back(d[1], d[2]);
      total += unshift(d[3], W);
    }
    for (Code c : non) {
      const auto d = decode(c, 4);
      if (d[0] != 2 || d[3] != 1) return false;
      np.emplace_back(d[1], d[2]);
    }
    std::int64_t threshold = 0;
    if (t.size() > e) {
      const auto d = decode(t[e], 4);
      if (d[0] != 3 || d[1] != 1 || d[2] != 1 || !in_range(d[3], W)) return false;
      threshold = unshift(d[3], W);
    }
    if (!full) return could_realize(h, ep, np);
    return realizes_induced(h, ep, np) && total >= threshold;
  };
  spec.verifier = [scan](Codes t) { return scan(t, true); };
  spec.feasible_prefix = [scan](Codes t) { return scan(t, false); };
  return spec;
}

LSProblemSpec max_h_vertex_spec(const Graph& h, std::int64_t W) {
  if (h.n() > kMaxPatternVertices) throw Error(ErrorKind::TooLarge, "pattern graph too large");
  if (h.n() == 0) throw Error(ErrorKind::PreconditionViolated, "pattern needs a vertex");
  LSProblemSpec spec;
  spec.name = "max-h-vertex";
  const std::size_t e = h.edges().size();
  const std::size_t k = h.n();
  spec.alpha = static_cast<std::uint32_t>(e + k + 1);
  spec.beta = static_cast<std::uint32_t>(pair_count(k) - e);
  spec.r = 3;
  const std::size_t alpha = spec.alpha;
  // Slots: e edges (1, u, v), k weighted vertices (2, v, w), the threshold
  // (3, t, 1), then the non-edges as absent edge records (1, s, t).
  const auto scan = [h, e, k, alpha, W](Codes t, bool full) {
    const auto edges = t.subspan(0, std::min(t.size(), e));
    const auto verts = t.size() > e ? t.subspan(e, std::min(t.size() - e, k)) : Codes{};
    const auto non = t.size() > alpha ? t.subspan(alpha) : Codes{};
    if (!increasing(edges) || !increasing(verts) || !increasing(non)) return false;
    std::vector<Pair> ep, np;
    for (Code c : edges) {
      const auto d = decode(c, 3);
      if (d[0] != 1) return false;
      ep.emplace_back(d[1], d[2]);
    }
    for (Code c : non) {
      const auto d = decode(c, 3);
      if (d[0] != 1) return false;
      np.emplace_back(d[1], d[2]);
    }
    std::vector<std::uint64_t> labels;
    std::int64_t total = 0;
    for (Code c : verts) {
      const auto d = decode(c, 3);
      if (d[0] != 2 || !in_range(d[2], W)) return false;
      labels.push_back(d[1]);
      total += unshift(d[2], W);
    }
    auto sorted_labels = labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    if (std::adjacent_find(sorted_labels.begin(), sorted_labels.end()) != sorted_labels.end()) return false;

    std::vector<Pair> all = ep;
    all.insert(all.end(), np.begin(), np.end());
    for (const auto& [u, v] : all) {
      if (u >= v) return false;
    }
    auto sorted_pairs = all;
    std::sort(sorted_pairs.begin(), sorted_pairs.end());
    if (std::adjacent_find(sorted_pairs.begin(), sorted_pairs.end()) != sorted_pairs.end()) return false;
    if (verts.size() == k) {
      for (const auto& [u, v] : all) {
        if (!std::binary_search(sorted_labels.begin(), sorted_labels.end(), u) ||
            !std::binary_search(sorted_labels.begin(), sorted_labels.end(), v)) {
          return false;
        }
      }
    }
    if (!full) return ep.size() <= e && np.size() <= pair_count(k) - e;
    const auto d = decode(t[e + k], 3);
    if (d[0] != 3 || d[2] != 1 || !in_range(d[1], W)) return false;
    return all.size() == pair_count(k) && isomorphic_to(h, sorted_labels, ep) &&
           total >= unshift(d[1], W);
  };
  spec.verifier = [scan](Codes t) { return scan(t, true); };
  spec.feasible_prefix = [scan](Codes t) { return scan(t, false); };
  return spec;
}

Encoded encode_ksum(const KSumInput& input) {
  if (input.k == 0 || input.sets.size() != input.k) {
    throw Error(ErrorKind::MalformedInput, "k-SUM needs exactly k sets");
  }
  std::int64_t observed = 0;
  for (const auto& set : input.sets) {
    for (auto v : set) observed = std::max(observed, magnitude(v));
  }
  const std::int64_t W = range_of(input.bound, observed);
  std::set<Code> codes;
  for (std::uint32_t i = 0; i < input.k; ++i) {
    for (auto v : input.sets[i]) {
      check_value(v, W);
      codes.insert(encode_tuple({i + 1ull, shifted(v, W)}));
    }
  }
  const auto n = std::max<std::uint64_t>({2, input.k, static_cast<std::uint64_t>(2 * W + 1)});
  return {ksum_spec(input.k, W), LSInstance(n, 2, {codes.begin(), codes.end()}), W};
}

Encoded encode_collinearity(const PointSetInput& input) {
  std::int64_t observed = 0;
  for (const auto& [x, y] : input.points) observed = std::max({observed, magnitude(x), magnitude(y)});
  const std::int64_t W = range_of(input.bound, observed);
  std::set<Code> codes;
  for (const auto& [x, y] : input.points) {
    check_value(x, W);
    check_value(y, W);
    codes.insert(encode_tuple({shifted(x, W), shifted(y, W)}));
  }
  const auto n = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(2 * W + 1));
  return {collinearity_spec(W), LSInstance(n, 2, {codes.begin(), codes.end()}), W};
}

Encoded encode_h_induced(const GraphInput& input, const Graph& h) {
  const Graph g = input.graph();
  std::vector<Code> codes;
  for (const auto& [u, v] : g.edges()) codes.push_back(encode_tuple({u, v}));
  const auto n = std::max<std::uint64_t>(2, g.n());
  return {h_induced_spec(h), LSInstance(n, 2, std::move(codes))};
}

Encoded encode_family_induced(const GraphInput& input, const std::vector<Graph>& family) {
  const Graph g = input.graph();
  if (g.n() == 0) throw Error(ErrorKind::MalformedInput, "graph needs a vertex");
  std::vector<Code> codes;
  for (const auto& [u, v] : g.edges()) codes.push_back(encode_tuple({u, v}));
  const std::uint64_t extra = g.n() + 1ull;
  codes.push_back(encode_tuple({extra, extra}));
  return {family_induced_spec(family), LSInstance(extra, 2, std::move(codes))};
}

Encoded encode_min_weight_kclique(const GraphInput& input, std::uint32_t k, std::int64_t threshold) {
  const Graph g = input.graph();
  std::int64_t observed = 0;
  for (const auto& e : input.edges) observed = std::max(observed, magnitude(e.w));
  const std::int64_t W = range_of(input.bound, observed);
  for (const auto& e : input.edges) check_value(e.w, W);
  const std::int64_t Wr = range_of(std::nullopt, std::max(W, magnitude(threshold)));
  std::vector<Code> codes;
  for (const auto& e : input.edges) {
    codes.push_back(encode_tuple({1, std::min(e.u, e.v), std::max(e.u, e.v), shifted(e.w, Wr)}));
  }
  codes.push_back(encode_tuple({2, 1, 1, shifted(threshold, Wr)}));
  const auto n = std::max<std::uint64_t>({2, g.n(), static_cast<std::uint64_t>(2 * Wr + 1)});
  return {min_weight_clique_spec(k, Wr), LSInstance(n, 4, std::move(codes)), Wr};
}

Encoded encode_max_h_subgraph(const GraphInput& input, const Graph& h, std::int64_t threshold,
                              WeightMode mode) {
  const Graph g = input.graph();
  std::int64_t observed = 0;
  if (mode == WeightMode::Edges) {
    for (const auto& e : input.edges) observed = std::max(observed, magnitude(e.w));
  } else {
    if (input.vertex_weights.size() != g.n()) {
      throw Error(ErrorKind::MalformedInput, "vertex mode needs one weight per vertex");
    }
    for (auto w : input.vertex_weights) observed = std::max(observed, magnitude(w));
  }
  const std::int64_t W = range_of(input.bound, observed);
  const std::int64_t Wr = range_of(std::nullopt, std::max(W, magnitude(threshold)));
  const auto n = std::max<std::uint64_t>({3, g.n(), static_cast<std::uint64_t>(2 * Wr + 1)});
  std::vector<Code> codes;
  if (mode == WeightMode::Edges) {
    for (const auto& e : input.edges) {
      check_value(e.w, W);
      const std::uint64_t u = std::min(e.u, e.v), v = std::max(e.u, e.v);
      codes.push_back(encode_tuple({1, u, v, shifted(e.w, Wr)}));
      codes.push_back(encode_tuple({2, u, v, 1}));
    }
    codes.push_back(encode_tuple({3, 1, 1, shifted(threshold, Wr)}));
    return {max_h_edge_spec(h, Wr), LSInstance(n, 4, std::move(codes)), Wr};
  }
  for (const auto& [u, v] : g.edges()) codes.push_back(encode_tuple({1, u, v}));
  for (std::uint32_t v = 1; v <= g.n(); ++v) {
    check_value(input.vertex_weights[v - 1], W);
    codes.push_back(encode_tuple({2, v, shifted(input.vertex_weights[v - 1], Wr)}));
  }
  codes.push_back(encode_tuple({3, shifted(threshold, Wr), 1}));
  return {max_h_vertex_spec(h, Wr), LSInstance(n, 3, std::move(codes)), Wr};
}

}  // namespace polyoracle::problems
