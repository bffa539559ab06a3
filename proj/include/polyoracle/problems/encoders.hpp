#pragma once

// Natural problem inputs and their Local Subset encodings. Every verifier
// takes witness codes in strictly increasing order within each group of
// interchangeable slots, so each solution has one witness tuple per
// relabelling-free choice.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyoracle/lsframe/ls_problem.hpp"
#include "polyoracle/problems/small_graph.hpp"

namespace polyoracle::problems {

struct KSumInput {
  std::uint32_t k = 3;
  std::vector<std::vector<std::int64_t>> sets;
  /// W of the value range [-W, W]; defaults to the largest |value|.
  std::optional<std::int64_t> bound;
};

struct PointSetInput {
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  std::optional<std::int64_t> bound;
};

struct WeightedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::int64_t w = 0;
};

struct GraphInput {
  std::uint32_t n = 0;
  std::vector<WeightedEdge> edges;
  std::vector<std::int64_t> vertex_weights;  // empty or one per vertex
  std::optional<std::int64_t> bound;

  Graph graph() const;
};

struct Encoded {
  ls::LSProblemSpec spec;
  ls::LSInstance instance;
  std::int64_t W = 0;  // value range the encoding shifts by; 0 if unweighted
};

// Problem families; parameters are fixed per problem, never per instance size.
ls::LSProblemSpec ksum_spec(std::uint32_t k, std::int64_t W);
ls::LSProblemSpec collinearity_spec(std::int64_t W);
ls::LSProblemSpec h_induced_spec(const Graph& h);
/// Members must have at least one edge and no isolated vertex.
ls::LSProblemSpec family_induced_spec(const std::vector<Graph>& family);
ls::LSProblemSpec min_weight_clique_spec(std::uint32_t k, std::int64_t W);
/// H must have at least one edge and no isolated vertex.
ls::LSProblemSpec max_h_edge_spec(const Graph& h, std::int64_t W);
ls::LSProblemSpec max_h_vertex_spec(const Graph& h, std::int64_t W);

/// Universe [k] x [2W+1] (values shifted by W+1), alpha = k, beta = 0.
Encoded encode_ksum(const KSumInput& input);
/// Universe [2W+1]^2, alpha = 3, beta = 0; duplicate points collapse.
Encoded encode_collinearity(const PointSetInput& input);
/// Universe [n]^2, S = edges, alpha = |E(H)|, beta = |nonedges(H)|.
Encoded encode_h_induced(const GraphInput& input, const Graph& h);
/// Universe [n+1]^2, S = edges plus the loop (n+1, n+1).
Encoded encode_family_induced(const GraphInput& input, const std::vector<Graph>& family);
/// Records (1, u, v, w) and (2, 1, 1, threshold), weights shifted by W+1
/// where W = max(bound, |threshold|).
Encoded encode_min_weight_kclique(const GraphInput& input, std::uint32_t k, std::int64_t threshold);

enum class WeightMode { Edges, Vertices };

/// Edge mode: (1, u, v, w), (2, u, v, 1) per edge and (3, 1, 1, threshold).
/// Vertex mode: (1, u, v) per edge, (2, v, w) per vertex and (3, threshold, 1).
Encoded encode_max_h_subgraph(const GraphInput& input, const Graph& h, std::int64_t threshold,
                              WeightMode mode);

}  // namespace polyoracle::problems
