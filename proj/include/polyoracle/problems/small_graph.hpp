#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyoracle::problems {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

/// Simple undirected graph on vertices 1..n with edges stored as sorted
/// pairs u < v.
class Graph {
 public:
  Graph() = default;
  /// Normalizes edge orientation; throws MalformedInput on loops, repeated
  /// edges or endpoints outside [1, n].
  Graph(std::uint32_t n, std::vector<Pair> edges);

  std::uint32_t n() const { return n_; }
  const std::vector<Pair>& edges() const { return edges_; }
  bool has_edge(std::uint64_t u, std::uint64_t v) const;
  /// All pairs u < v that are not edges.
  std::vector<Pair> nonedges() const;
  bool has_isolated_vertex() const;

  bool operator==(const Graph&) const = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Pair> edges_;
};

/// edge, path3, triangle, c4, k4. Throws MalformedInput for other names.
Graph preset(std::string_view name);
std::vector<std::string> preset_names();

/// Pattern graphs are matched by trying every vertex permutation.
inline constexpr std::uint32_t kMaxPatternVertices = 8;

/// Does the graph with vertex set `vertices` (distinct labels) and edge set
/// `edges` (pairs of those labels) equal a relabelling of H?
bool isomorphic_to(const Graph& h, std::span<const std::uint64_t> vertices,
                   std::span<const Pair> edges);

/// Induced-copy check shared by the graph verifiers: every pair is u < v,
/// all pairs are distinct, together they span exactly |V(H)| vertices and
/// the edge pairs form a copy of H on them. Sizes must match H exactly.
bool realizes_induced(const Graph& h, std::span<const Pair> edges, std::span<const Pair> nonedges);

/// Prefix version: each list no longer than H's, pairs u < v and distinct,
/// and at most |V(H)| vertices spanned so far.
bool could_realize(const Graph& h, std::span<const Pair> edges, std::span<const Pair> nonedges);

}  // namespace polyoracle::problems
