#pragma once

// Named problems, their natural JSON inputs and the LS instance file format
// {"problem": name, "n": N, "elements": [codes...], "params": {...}}.
// "params" carries the fixed problem parameters (k, W, H, family) needed to
// rebuild the verifier; it may be omitted for problems without any.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "polyoracle/problems/encoders.hpp"

namespace polyoracle::problems {

/// ksum, 3sum, collinearity, h-induced, triangle, induced-c4, induced-path3,
/// family-induced, min-weight-clique, max-h-edge, max-h-vertex.
std::vector<std::string> problem_names();

struct ProblemEncoding {
  Encoded encoded;
  nlohmann::json params;
};

/// Spec for a named problem. Missing params fall back to small defaults
/// (k = 3, W = 1, H = triangle) so `formulate` works without an input.
ls::LSProblemSpec problem_spec(std::string_view name, const nlohmann::json& params = {});

/// Encodes a natural input:
///   ksum/3sum          {"k", "sets", "bound"?}
///   collinearity       {"points": [[x, y], ...], "bound"?}
///   h-induced          {"n", "edges", "H"}; triangle etc. fix H
///   family-induced     {"n", "edges", "family": [H, ...]}
///   min-weight-clique  {"n", "edges": [[u, v, w], ...], "k", "threshold", "bound"?}
///   max-h-edge         {"n", "edges": [[u, v, w], ...], "H", "threshold", "bound"?}
///   max-h-vertex       {"n", "edges", "vertex_weights", "H", "threshold", "bound"?}
/// H is a preset name or {"n", "edges"}.
ProblemEncoding encode_problem(std::string_view name, const nlohmann::json& input);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
GraphInput graph_input_from_json(const nlohmann::json& j);
KSumInput ksum_input_from_json(const nlohmann::json& j);
PointSetInput points_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(std::string_view problem, const ls::LSInstance& instance,
                                const nlohmann::json& params = nlohmann::json::object());
/// Rebuilds spec and instance; throws MalformedInput on bad structure.
Encoded instance_from_json(const nlohmann::json& j);

/// Input files may hold either a natural input or an LS instance (detected
/// by the "elements" key).
Encoded load_problem_input(std::string_view name, const nlohmann::json& j);

}  // namespace polyoracle::problems
