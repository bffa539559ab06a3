#include "polyoracle/problems/problem_io.hpp"

#include <algorithm>

#include "polyoracle/common/error.hpp"

namespace polyoracle::problems {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

std::string fixed_pattern(std::string_view name) {
  if (name == "triangle") return "triangle";
  if (name == "induced-c4") return "c4";
  if (name == "induced-path3") return "path3";
  return {};
}

std::int64_t int_or(const json& j, const char* key, std::int64_t fallback) {
  return j.is_object() && j.contains(key) ? j.at(key).get<std::int64_t>() : fallback;
}

std::optional<std::int64_t> optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::int64_t>();
}

Graph pattern_or(const json& params, const char* key, std::string_view fallback) {
  return params.is_object() && params.contains(key) ? graph_from_json(params.at(key)) : preset(fallback);
}

std::vector<Graph> family_from_json(const json& j) {
  if (!j.is_array() || j.empty()) malformed("family must be a nonempty array");
  std::vector<Graph> out;
  for (const auto& h : j) out.push_back(graph_from_json(h));
  return out;
}

json family_to_json(const std::vector<Graph>& family) {
  json out = json::array();
  for (const auto& h : family) out.push_back(graph_to_json(h));
  return out;
}

ProblemEncoding encode_unchecked(std::string_view name, const json& in) {
  if (name == "ksum" || name == "3sum") {
    auto input = ksum_input_from_json(in);
    if (name == "3sum") input.k = 3;
    if (input.k != input.sets.size()) malformed("k-SUM needs exactly k sets");
    Encoded e = encode_ksum(input);
    json params{{"k", input.k}, {"W", e.W}};
    return {std::move(e), std::move(params)};
  }
  if (name == "collinearity") {
    Encoded e = encode_collinearity(points_from_json(in));
    json params{{"W", e.W}};
    return {std::move(e), std::move(params)};
  }
  if (name == "h-induced" || !fixed_pattern(name).empty()) {
    const auto h = name == "h-induced" ? graph_from_json(in.at("H")) : preset(fixed_pattern(name));
    json params = name == "h-induced" ? json{{"H", graph_to_json(h)}} : json::object();
    return {encode_h_induced(graph_input_from_json(in), h), std::move(params)};
  }
  if (name == "family-induced") {
    const auto family = family_from_json(in.at("family"));
    return {encode_family_induced(graph_input_from_json(in), family), {{"family", family_to_json(family)}}};
  }
  if (name == "min-weight-clique") {
    const auto k = in.at("k").get<std::uint32_t>();
    Encoded e = encode_min_weight_kclique(graph_input_from_json(in), k, in.at("threshold").get<std::int64_t>());
    json params{{"k", k}, {"W", e.W}};
    return {std::move(e), std::move(params)};
  }
  if (name == "max-h-edge" || name == "max-h-vertex") {
    const auto h = graph_from_json(in.at("H"));
    const auto mode = name == "max-h-edge" ? WeightMode::Edges : WeightMode::Vertices;
    Encoded e = encode_max_h_subgraph(graph_input_from_json(in), h, in.at("threshold").get<std::int64_t>(), mode);
    json params{{"H", graph_to_json(h)}, {"W", e.W}};
    return {std::move(e), std::move(params)};
  }
  malformed("unknown problem '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> problem_names() {
  return {"ksum",        "3sum",          "collinearity",   "h-induced",         "triangle",  "induced-c4",
          "induced-path3", "family-induced", "min-weight-clique", "max-h-edge", "max-h-vertex"};
}

ls::LSProblemSpec problem_spec(std::string_view name, const json& params) {
  try {
    const std::int64_t W = int_or(params, "W", 1);
    if (name == "ksum") return ksum_spec(static_cast<std::uint32_t>(int_or(params, "k", 3)), W);
    if (name == "3sum") return ksum_spec(3, W);
    if (name == "collinearity") return collinearity_spec(W);
    if (name == "h-induced") return h_induced_spec(pattern_or(params, "H", "triangle"));
    if (const auto p = fixed_pattern(name); !p.empty()) return h_induced_spec(preset(p));
    if (name == "family-induced") {
      if (params.is_object() && params.contains("family")) return family_induced_spec(family_from_json(params.at("family")));
      return family_induced_spec({preset("triangle"), preset("path3")});
    }
    if (name == "min-weight-clique") {
      return min_weight_clique_spec(static_cast<std::uint32_t>(int_or(params, "k", 3)), W);
    }
    if (name == "max-h-edge") return max_h_edge_spec(pattern_or(params, "H", "edge"), W);
    if (name == "max-h-vertex") return max_h_vertex_spec(pattern_or(params, "H", "edge"), W);
  } catch (const json::exception& e) {
    malformed(std::string("bad problem parameters: ") + e.what());
  }
  malformed("unknown problem '" + std::string(name) + "'");
}

ProblemEncoding encode_problem(std::string_view name, const json& input) {
  try {
    return encode_unchecked(name, input);
  } catch (const json::exception& e) {
    malformed(std::string("bad ") + std::string(name) + " input: " + e.what());
  }
}

Graph graph_from_json(const json& j) {
  try {
    if (j.is_string()) return preset(j.get<std::string>());
    std::vector<Pair> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2) malformed("edges must be [u, v] pairs");
      edges.emplace_back(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>());
    }
    return Graph(j.at("n").get<std::uint32_t>(), std::move(edges));
  } catch (const json::exception& e) {
    malformed(std::string("bad graph: ") + e.what());
  }
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

GraphInput graph_input_from_json(const json& j) {
  try {
    GraphInput in;
    in.n = j.at("n").get<std::uint32_t>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || (e.size() != 2 && e.size() != 3)) malformed("edges must be [u, v] or [u, v, w]");
      WeightedEdge we;
      we.u = e[0].get<std::uint32_t>();
      we.v = e[1].get<std::uint32_t>();
      we.w = e.size() == 3 ? e[2].get<std::int64_t>() : 0;
      in.edges.push_back(we);
    }
    if (j.contains("vertex_weights")) in.vertex_weights = j.at("vertex_weights").get<std::vector<std::int64_t>>();
    in.bound = optional_int(j, "bound");
    return in;
  } catch (const json::exception& e) {
    malformed(std::string("bad graph input: ") + e.what());
  }
}

KSumInput ksum_input_from_json(const json& j) {
  try {
    KSumInput in;
    in.sets = j.at("sets").get<std::vector<std::vector<std::int64_t>>>();
    in.k = j.contains("k") ? j.at("k").get<std::uint32_t>() : static_cast<std::uint32_t>(in.sets.size());
    in.bound = optional_int(j, "bound");
    return in;
  } catch (const json::exception& e) {
    malformed(std::string("bad k-SUM input: ") + e.what());
  }
}

PointSetInput points_from_json(const json& j) {
  try {
    PointSetInput in;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) malformed("points must be [x, y]");
      in.points.emplace_back(p[0].get<std::int64_t>(), p[1].get<std::int64_t>());
    }
    in.bound = optional_int(j, "bound");
    return in;
  } catch (const json::exception& e) {
    malformed(std::string("bad point input: ") + e.what());
  }
}

json instance_to_json(std::string_view problem, const ls::LSInstance& instance, const json& params) {
  return {{"problem", problem}, {"n", instance.n()}, {"elements", instance.elements()}, {"params", params}};
}

Encoded instance_from_json(const json& j) {
  try {
    const auto name = j.at("problem").get<std::string>();
    auto spec = problem_spec(name, j.value("params", json::object()));
    ls::LSInstance instance(j.at("n").get<std::uint64_t>(), spec.r, j.at("elements").get<std::vector<ls::Code>>());
    return {std::move(spec), std::move(instance)};
  } catch (const json::exception& e) {
    malformed(std::string("bad LS instance: ") + e.what());
  }
}

Encoded load_problem_input(std::string_view name, const json& j) {
  if (j.is_object() && j.contains("elements")) {
    json copy = j;
    if (!copy.contains("problem")) copy["problem"] = name;
    if (copy.at("problem") != name) malformed("instance is for problem " + copy.at("problem").dump());
    return instance_from_json(copy);
  }
  return encode_problem(name, j).encoded;
}

}  // namespace polyoracle::problems
