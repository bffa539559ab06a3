#include "polyoracle/circuits/transform.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "polyoracle/common/error.hpp"
#include "polyoracle/common/overloaded.hpp"

namespace polyoracle::circuits {

using poly::Monomial;
using poly::SparsePolynomial;

ArithmeticCircuit homogenize(const ArithmeticCircuit& c, std::uint32_t delta) {
  if (delta == 0) throw Error(ErrorKind::PreconditionViolated, "delta must be positive");
  using Components = std::vector<std::optional<GateId>>;  // nullopt == zero
  ArithmeticCircuit out(c.num_inputs());
  std::vector<Components> comp(c.gate_count(), Components(delta + 1));

  const auto sum = [&](std::optional<GateId> a, std::optional<GateId> b) -> std::optional<GateId> {
    if (!a) return b;
    if (!b) return a;
    return out.add(*a, *b);
  };

  for (std::size_t id = 0; id < c.gate_count(); ++id) {
    auto& mine = comp[id];
    std::visit(Overloaded{
                   [&](const InputGate& g) { mine[1] = out.input(g.index); },
                   [&](const ConstGate& g) {
                     if (sgn(g.value) != 0) mine[0] = out.constant(g.value);
                   },
                   [&](const AddGate& g) {
                     for (std::uint32_t d = 0; d <= delta; ++d) {
                       mine[d] = sum(comp[g.left][d], comp[g.right][d]);
                     }
                   },
                   [&](const MulGate& g) {
                     for (std::uint32_t d = 0; d <= delta; ++d) {
                       std::optional<GateId> acc;
                       for (std::uint32_t i = 0; i <= d; ++i) {
                         const auto& l = comp[g.left][i];
                         const auto& r = comp[g.right][d - i];
                         if (l && r) acc = sum(acc, out.mul(*l, *r));
                       }
                       mine[d] = acc;
                     }
                   },
               },
               c.gates()[id]);
  }

  std::optional<GateId> result;
  for (const auto& part : comp[c.output()]) result = sum(result, part);
  if (!result) result = out.constant(0);
  out.set_output(*result);
  return out;
}

SparsePolynomial expand_to_polynomial(const ArithmeticCircuit& c, std::size_t monomial_cap) {
  const std::size_t n = c.num_inputs();
  const GateId output = c.output();
  // Last reader of every gate, so intermediate polynomials can be released.
  std::vector<std::size_t> last_use(c.gate_count(), 0);
  for (std::size_t id = 0; id < c.gate_count(); ++id) {
    std::visit(Overloaded{
                   [](const InputGate&) {},
                   [](const ConstGate&) {},
                   [&](const AddGate& g) { last_use[g.left] = last_use[g.right] = id; },
                   [&](const MulGate& g) { last_use[g.left] = last_use[g.right] = id; },
               },
               c.gates()[id]);
  }

  std::vector<std::optional<SparsePolynomial>> value(c.gate_count());
  const auto release = [&](GateId g, std::size_t now) {
    if (g != output && last_use[g] == now) value[g].reset();
  };
  for (std::size_t id = 0; id <= output; ++id) {
    SparsePolynomial p = std::visit(
        Overloaded{
            [&](const InputGate& g) { return SparsePolynomial::variable(n, g.index); },
            [&](const ConstGate& g) { return SparsePolynomial::constant(n, g.value); },
            [&](const AddGate& g) { return poly::add(*value[g.left], *value[g.right]); },
            [&](const MulGate& g) { return poly::multiply(*value[g.left], *value[g.right]); },
        },
        c.gates()[id]);
    if (p.size() > monomial_cap) {
      throw Error(ErrorKind::CapExceeded, "gate " + std::to_string(id) + " expands to " +
                                              std::to_string(p.size()) + " monomials (cap " +
                                              std::to_string(monomial_cap) + ")");
    }
    value[id] = std::move(p);
    std::visit(Overloaded{
                   [](const InputGate&) {},
                   [](const ConstGate&) {},
                   [&](const AddGate& g) {
                     release(g.left, id);
                     release(g.right, id);
                   },
                   [&](const MulGate& g) {
                     release(g.left, id);
                     release(g.right, id);
                   },
               },
               c.gates()[id]);
  }
  return std::move(*value[output]);
}

Verdict verify_circuit(const ArithmeticCircuit& c, const SparsePolynomial& target,
                       std::uint32_t delta, std::size_t monomial_cap) {
  if (c.num_inputs() != target.num_vars()) return {false, VerifyReason::ArityMismatch};
  try {
    const auto homogeneous = expand_to_polynomial(homogenize(c, delta), monomial_cap);
    if (homogeneous != target) return {false, VerifyReason::Mismatch};
    if (syntactic_degrees(c)[c.output()] <= delta) return {true, VerifyReason::Accepted};
    if (expand_to_polynomial(c, monomial_cap) == target) return {true, VerifyReason::Accepted};
    return {false, VerifyReason::DegreeExceeded};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CapExceeded) return {false, VerifyReason::CapExceeded};
    throw;
  }
}

namespace {

GateId build_horner(ArithmeticCircuit& out, std::vector<Monomial> terms) {
  // terms: nonzero, distinct power vectors.
  std::optional<poly::VarIndex> lead;
  for (const auto& t : terms) {
    if (!t.powers.empty()) lead = lead ? std::min(*lead, t.powers.front().var) : t.powers.front().var;
  }
  if (!lead) {
    BigInt total = 0;
    for (const auto& t : terms) total += t.coeff;
    return out.constant(total);
  }
  std::map<std::uint32_t, std::vector<Monomial>> by_exponent;
  for (auto& t : terms) {
    std::uint32_t e = 0;
    if (!t.powers.empty() && t.powers.front().var == *lead) {
      e = t.powers.front().exp;
      t.powers.erase(t.powers.begin());
    }
    by_exponent[e].push_back(std::move(t));
  }
  const std::uint32_t top = by_exponent.rbegin()->first;
  const GateId x = out.input(*lead);
  GateId acc = build_horner(out, std::move(by_exponent[top]));
  for (std::uint32_t e = top; e-- > 0;) {
    acc = out.mul(acc, x);
    if (auto it = by_exponent.find(e); it != by_exponent.end()) {
      acc = out.add(acc, build_horner(out, std::move(it->second)));
    }
  }
  return acc;
}

}  // namespace

ArithmeticCircuit build_circuit(const SparsePolynomial& p) {
  ArithmeticCircuit out(p.num_vars());
  if (p.is_zero()) {
    out.set_output(out.constant(0));
    return out;
  }
  out.set_output(build_horner(out, p.monomials()));
  return out;
}

}  // namespace polyoracle::circuits
