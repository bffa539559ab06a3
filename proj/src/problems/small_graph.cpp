#include "polyoracle/problems/small_graph.hpp"

#include <algorithm>
#include <numeric>

#include "polyoracle/common/error.hpp"

namespace polyoracle::problems {

Graph::Graph(std::uint32_t n, std::vector<Pair> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw Error(ErrorKind::MalformedInput, "self-loop in simple graph");
    if (u < 1 || v < 1 || u > n_ || v > n_) {
      throw Error(ErrorKind::MalformedInput, "edge endpoint outside [1, n]");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorKind::MalformedInput, "repeated edge");
  }
}

bool Graph::has_edge(std::uint64_t u, std::uint64_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Pair{u, v});
}

std::vector<Pair> Graph::nonedges() const {
  std::vector<Pair> out;
  for (std::uint64_t u = 1; u <= n_; ++u) {
    for (std::uint64_t v = u + 1; v <= n_; ++v) {
      if (!has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  std::vector<bool> touched(n_ + 1, false);
  for (const auto& [u, v] : edges_) touched[u] = touched[v] = true;
  for (std::uint32_t v = 1; v <= n_; ++v) {
    if (!touched[v]) return true;
  }
  return false;
}

Graph preset(std::string_view name) {
  if (name == "edge") return Graph(2, {{1, 2}});
  if (name == "path3") return Graph(3, {{1, 2}, {2, 3}});
  if (name == "triangle") return Graph(3, {{1, 2}, {2, 3}, {1, 3}});
  if (name == "c4") return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  if (name == "k4") return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  throw Error(ErrorKind::MalformedInput, "unknown pattern graph '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() { return {"edge", "path3", "triangle", "c4", "k4"}; }

bool isomorphic_to(const Graph& h, std::span<const std::uint64_t> vertices,
                   std::span<const Pair> edges) {
  const std::size_t k = h.n();
  if (vertices.size() != k || edges.size() != h.edges().size()) return false;
  if (k > kMaxPatternVertices) throw Error(ErrorKind::TooLarge, "pattern graph too large");
  const auto local = [&](std::uint64_t label) -> std::size_t {
    return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), label) - vertices.begin());
  };
  std::vector<std::uint32_t> adj(k, 0), hadj(k, 0);
  for (const auto& [u, v] : edges) {
    const auto a = local(u), b = local(v);
    if (a >= k || b >= k || a == b) return false;
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  for (const auto& [u, v] : h.edges()) {
    hadj[u - 1] |= 1u << (v - 1);
    hadj[v - 1] |= 1u << (u - 1);
  }
  std::vector<int> deg(k), hdeg(k);
  for (std::size_t i = 0; i < k; ++i) {
    deg[i] = __builtin_popcount(adj[i]);
    hdeg[i] = __builtin_popcount(hadj[i]);
  }
  auto sd = deg, shd = hdeg;
  std::sort(sd.begin(), sd.end());
  std::sort(shd.begin(), shd.end());
  if (sd != shd) return false;

  // perm[i] = local vertex playing H's vertex i.
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (deg[perm[i]] != hdeg[i]) ok = false;
      for (std::size_t j = i + 1; j < k && ok; ++j) {
        ok = (((hadj[i] >> j) & 1u) != 0) == (((adj[perm[i]] >> perm[j]) & 1u) != 0);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

// Canonical, pairwise distinct pairs; collects the spanned vertices.
bool collect(std::span<const Pair> edges, std::span<const Pair> nonedges,
             std::vector<std::uint64_t>& vertices) {
  std::vector<Pair> all;
  all.reserve(edges.size() + nonedges.size());
  for (const auto& p : edges) all.push_back(p);
  for (const auto& p : nonedges) all.push_back(p);
  for (const auto& [u, v] : all) {
    if (u >= v) return false;
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return true;
}

}  // namespace

bool realizes_induced(const Graph& h, std::span<const Pair> edges, std::span<const Pair> nonedges) {
  if (edges.size() != h.edges().size()) return false;
  const std::size_t k = h.n();
  if (nonedges.size() != k * (k - 1) / 2 - h.edges().size()) return false;
  std::vector<std::uint64_t> vertices;
  if (!collect(edges, nonedges, vertices) || vertices.size() != k) return false;
  return isomorphic_to(h, vertices, edges);
}

bool could_realize(const Graph& h, std::span<const Pair> edges, std::span<const Pair> nonedges) {
  const std::size_t k = h.n();
  if (edges.size() > h.edges().size()) return false;
  if (nonedges.size() > k * (k - 1) / 2 - h.edges().size()) return false;
  std::vector<std::uint64_t> vertices;
  return collect(edges, nonedges, vertices) && vertices.size() <= k;
}

}  // namespace polyoracle::problems
