#include "polyoracle/harness/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "polyoracle/circuits/circuit_json.hpp"
#include "polyoracle/circuits/transform.hpp"
#include "polyoracle/common/caps.hpp"
#include "polyoracle/common/error.hpp"
#include "polyoracle/expalgos/permanent.hpp"
#include "polyoracle/expalgos/set_cover.hpp"
#include "polyoracle/harness/bench.hpp"
#include "polyoracle/harness/oracle_log.hpp"
#include "polyoracle/harness/report.hpp"
#include "polyoracle/lsframe/comparison.hpp"
#include "polyoracle/lsframe/formulation.hpp"
#include "polyoracle/lsframe/solve.hpp"
#include "polyoracle/polycore/polynomial_json.hpp"
#include "polyoracle/problems/problem_io.hpp"

namespace polyoracle::harness {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::MalformedInput, "cannot write " + path);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* reason_name(circuits::VerifyReason r) {
  switch (r) {
    case circuits::VerifyReason::Accepted: return "accepted";
    case circuits::VerifyReason::Mismatch: return "mismatch";
    case circuits::VerifyReason::DegreeExceeded: return "degree-exceeded";
    case circuits::VerifyReason::CapExceeded: return "cap-exceeded";
    case circuits::VerifyReason::ArityMismatch: return "arity-mismatch";
  }
  return "unknown";
}

void maybe_report(const std::string& path, const RunReport& report) {
  if (!path.empty()) write_file(path, to_json(report).dump(2) + "\n");
}

struct Options {
  std::string problem, input, method, out, report, circuit, poly, matrix, params, sizes;
  std::uint32_t theta = 1;
  std::uint64_t size = 0;
  std::uint32_t delta = 1;
  double alpha = 0.5;
  std::uint64_t seed = 1;
};

int cmd_solve(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const json input = read_json(o.input);
  const auto enc = problems::load_problem_input(o.problem, input);
  OracleLog log;
  bool yes = false;
  if (o.method == "brute") {
    yes = ls::brute_solve(enc.spec, enc.instance);
  } else {
    yes = ls::solve_via_oracle(enc.spec, enc.instance, o.theta,
                               logging_oracle(ls::formulation_oracle(enc.spec), log));
  }
  auto report = make_report("solve", o.problem, input, yes ? "yes" : "no", log, seconds_since(start));
  report.details = {{"method", o.method}, {"theta", o.theta}, {"n", enc.instance.n()}, {"m", enc.instance.m()}};
  if (o.method == "formulation") {
    report.details["variable_count"] = ls::Layout::make(enc.instance.size(), enc.spec.r, o.theta).variable_count();
  }
  maybe_report(o.report, report);
  out << (yes ? "yes" : "no") << "\n";
  if (log.call_count() > 0) out << "oracle calls: " << log.call_count() << ", cost " << log.total_cost() << "\n";
  return yes ? kExitOk : kExitNo;
}

int cmd_formulate(const Options& o, std::ostream& out) {
  const json params = o.params.empty() ? json::object() : json::parse(o.params);
  const auto spec = problems::problem_spec(o.problem, params);
  const auto p = ls::formulation_polynomial(spec, o.size, o.theta);
  write_file(o.out, poly::to_json(p).dump() + "\n");
  out << "monomials: " << p.monomials().size() << ", degree " << ls::formulation_degree(spec, o.theta)
      << ", variables " << ls::variable_count(o.size, spec.r, o.theta) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const json cj = read_json(o.circuit);
  const json pj = read_json(o.poly);
  const auto c = circuits::circuit_from_json(cj);
  const auto p = poly::polynomial_from_json(pj);
  const auto verdict = circuits::verify_circuit(c, p, o.delta);
  OracleLog none;
  auto report = make_report("verify-circuit", "", json{{"circuit", cj}, {"poly", pj}},
                            verdict.accepted ? "accepted" : "rejected", none, seconds_since(start));
  report.details = {{"reason", reason_name(verdict.reason)}, {"delta", o.delta}, {"gates", c.gate_count()}};
  maybe_report(o.report, report);
  out << (verdict.accepted ? "accepted" : "rejected") << " (" << reason_name(verdict.reason) << ")\n";
  return verdict.accepted ? kExitOk : kExitNo;
}

int cmd_permanent(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const std::string text = read_file(o.matrix);
  const auto a = exp::BinaryMatrix::parse(text);
  BigInt value;
  json details = {{"method", o.method}, {"n", a.n()}};
  if (o.method == "brute") {
    value = exp::permanent_brute(a);
  } else if (o.method == "fsets") {
    value = exp::permanent_via_fsets(a, o.alpha);
    details["alpha"] = o.alpha;
  } else {
    exp::TraceStats stats;
    value = exp::permanent_via_formulation(a, o.alpha, o.theta, &stats);
    details.update({{"alpha", o.alpha}, {"theta", o.theta}, {"traces", stats.traces},
                    {"g_variables", stats.variables}, {"max_factors", stats.max_factors}});
  }
  OracleLog none;
  auto report = make_report("permanent", "", json{{"matrix", a.to_text()}}, to_decimal(value), none,
                            seconds_since(start));
  report.details = details;
  maybe_report(o.report, report);
  out << to_decimal(value) << "\n";
  return kExitOk;
}

int cmd_setcover(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const json input = read_json(o.input);
  const auto f = exp::family_from_json(input);
  const auto method = o.method == "brute" ? exp::CoverMethod::Brute : exp::CoverMethod::Reduction;
  const auto best = exp::setcover_min(f, method, o.theta);
  const std::string answer = best ? std::to_string(*best) : "none";
  OracleLog none;
  auto report = make_report("setcover", "", input, answer, none, seconds_since(start));
  report.details = {{"method", o.method}};
  if (method == exp::CoverMethod::Reduction) report.details["m"] = exp::reduction_split(f, o.theta);
  maybe_report(o.report, report);
  out << answer << "\n";
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto spec = problems::problem_spec(o.problem, o.params.empty() ? json::object() : json::parse(o.params));
  const auto result = bench_vars(spec.r, o.theta, parse_sizes(o.sizes));
  if (!o.out.empty()) {
    write_file(o.out, to_csv(result));
  } else {
    out << to_csv(result);
  }
  out << "slope " << format_slope(result.slope) << "\n";
  return kExitOk;
}

// A quick randomized cross-check of every pipeline against its brute
// counterpart.
int cmd_selftest(const Options& o, std::ostream& out) {
  std::mt19937_64 gen(o.seed);
  const auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
  bool all = true;
  const auto line = [&](const char* name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
    all = all && ok;
  };

  bool ls_ok = true;
  for (int it = 0; it < 30 && ls_ok; ++it) {
    problems::GraphInput g;
    g.n = static_cast<std::uint32_t>(pick(3, 7));
    for (std::uint32_t u = 1; u <= g.n; ++u)
      for (std::uint32_t v = u + 1; v <= g.n; ++v)
        if (pick(0, 1)) g.edges.push_back({u, v, 0});
    const auto enc = problems::encode_h_induced(g, problems::preset("triangle"));
    const bool expected = ls::brute_solve(enc.spec, enc.instance);
    for (std::uint32_t theta = 1; theta <= 3; ++theta) {
      ls_ok = ls_ok && ls::solve_via_oracle(enc.spec, enc.instance, theta, ls::formulation_oracle(enc.spec)) == expected;
    }
  }
  line("local subset formulation", ls_ok);

  bool circuit_ok = true;
  for (int it = 0; it < 20 && circuit_ok; ++it) {
    std::vector<poly::Monomial> terms;
    for (int t = 0; t < 4; ++t) {
      poly::Monomial m;
      m.coeff = pick(-5, 5);
      if (m.coeff == 0) continue;
      if (pick(0, 1)) m.powers.push_back({0, static_cast<std::uint32_t>(pick(1, 2))});
      if (pick(0, 1)) m.powers.push_back({1, 1});
      terms.push_back(std::move(m));
    }
    const poly::SparsePolynomial p(2, std::move(terms));
    const auto c = circuits::build_circuit(p);
    circuit_ok = circuit_ok && circuits::verify_circuit(c, p, 3).accepted;
    const auto shifted = poly::add(p, poly::SparsePolynomial::constant(2, 1));
    circuit_ok = circuit_ok && !circuits::verify_circuit(c, shifted, 3).accepted;
  }
  line("circuit verification", circuit_ok);

  bool perm_ok = true;
  for (int it = 0; it < 10 && perm_ok; ++it) {
    exp::BinaryMatrix a(static_cast<std::uint32_t>(pick(1, 5)));
    for (std::uint32_t u = 0; u < a.n(); ++u)
      for (std::uint32_t v = 0; v < a.n(); ++v) a.set(u, v, pick(0, 2) > 0);
    perm_ok = exp::permanent_via_formulation(a, 0.5, 2) == exp::permanent_brute(a);
  }
  line("permanent chain", perm_ok);

  bool cover_ok = true;
  for (int it = 0; it < 10 && cover_ok; ++it) {
    exp::SetFamily f{static_cast<std::uint32_t>(pick(1, 6)), {}};
    const auto count = pick(1, 6);
    for (long i = 0; i < count; ++i) {
      exp::Mask s = 0;
      for (int j = 0; j < 3; ++j) s |= exp::Mask{1} << pick(0, f.n - 1);
      f.sets.push_back(s);
    }
    cover_ok = exp::setcover_min(f, exp::CoverMethod::Brute) == exp::setcover_min(f, exp::CoverMethod::Reduction);
  }
  line("set cover chain", cover_ok);
  return all ? kExitOk : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial formulations, oracle accounting and the exact algorithms built on them"};
  app.require_subcommand(1);
  Options o;
  const auto methods = [](std::initializer_list<std::string> names) { return CLI::IsMember(std::vector<std::string>(names)); };

  auto* solve = app.add_subcommand("solve", "Decide an LS problem instance");
  solve->add_option("--problem", o.problem, "Problem name")->required()->check(CLI::IsMember(problems::problem_names()));
  solve->add_option("--input", o.input, "Natural input or LS instance JSON")->required();
  solve->add_option("--method", o.method, "brute or formulation")->default_val("formulation")->check(methods({"brute", "formulation"}));
  solve->add_option("--theta", o.theta, "Block count")->default_val(1)->check(CLI::PositiveNumber);
  solve->add_option("--report", o.report, "Write a JSON report");

  auto* formulate = app.add_subcommand("formulate", "Write the literal polynomial at size s");
  formulate->add_option("--problem", o.problem, "Problem name")->required()->check(CLI::IsMember(problems::problem_names()));
  formulate->add_option("--size", o.size, "Instance size s")->required();
  formulate->add_option("--theta", o.theta, "Block count")->default_val(1)->check(CLI::PositiveNumber);
  formulate->add_option("--out", o.out, "Polynomial JSON output")->required();
  formulate->add_option("--params", o.params, "Problem parameters as JSON");

  auto* verify = app.add_subcommand("verify-circuit", "Check a circuit against a polynomial");
  verify->add_option("--circuit", o.circuit, "Circuit JSON")->required();
  verify->add_option("--poly", o.poly, "Polynomial JSON")->required();
  verify->add_option("--delta", o.delta, "Degree bound")->required();
  verify->add_option("--report", o.report, "Write a JSON report");

  auto* permanent = app.add_subcommand("permanent", "Permanent of a 0/1 matrix");
  permanent->add_option("--matrix", o.matrix, "n lines of n characters 0/1")->required();
  permanent->add_option("--method", o.method, "brute, fsets or formulation")->default_val("formulation")->check(methods({"brute", "fsets", "formulation"}));
  permanent->add_option("--alpha", o.alpha, "Fraction of columns covered exactly once")->default_val(0.5)->check(CLI::Range(0.0, 1.0));
  permanent->add_option("--theta", o.theta, "Trace blocks")->default_val(2)->check(CLI::PositiveNumber);
  permanent->add_option("--report", o.report, "Write a JSON report");

  auto* setcover = app.add_subcommand("setcover", "Minimum set cover");
  setcover->add_option("--input", o.input, "Set family JSON")->required();
  setcover->add_option("--method", o.method, "brute or reduction")->default_val("reduction")->check(methods({"brute", "reduction"}));
  setcover->add_option("--theta", o.theta, "Set partition blocks (1-3)")->default_val(1)->check(CLI::Range(1, 3));
  setcover->add_option("--report", o.report, "Write a JSON report");

  auto* bench = app.add_subcommand("bench-vars", "Variable counts over a size grid");
  bench->add_option("--problem", o.problem, "Problem name")->required()->check(CLI::IsMember(problems::problem_names()));
  bench->add_option("--theta", o.theta, "Block count")->required()->check(CLI::PositiveNumber);
  bench->add_option("--sizes", o.sizes, "Comma-separated sizes, e.g. 64,128,...,4096")->required();
  bench->add_option("--out", o.out, "CSV output (stdout when absent)");
  bench->add_option("--params", o.params, "Problem parameters as JSON");

  auto* selftest = app.add_subcommand("selftest", "Randomized cross-checks");
  selftest->add_option("--seed", o.seed, "Random seed")->default_val(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(o, out);
    if (*formulate) return cmd_formulate(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*permanent) return cmd_permanent(o, out);
    if (*setcover) return cmd_setcover(o, out);
    if (*bench) return cmd_bench(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const auto k = e.kind();
    return k == ErrorKind::MalformedInput || k == ErrorKind::ArityMismatch ? kExitUsage : kExitLimit;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  }
  return kExitUsage;
}

}  // namespace polyoracle::harness
