#include "polyoracle/circuits/circuit.hpp"

#include <algorithm>
#include <string>

#include "polyoracle/common/error.hpp"
#include "polyoracle/common/overloaded.hpp"

namespace polyoracle::circuits {

ArithmeticCircuit::ArithmeticCircuit(std::size_t num_inputs, std::vector<Gate> gates,
                                     GateId output)
    : num_inputs_(num_inputs) {
  gates_.reserve(gates.size());
  for (auto& g : gates) push(std::move(g));
  set_output(output);
}

void ArithmeticCircuit::check_ref(GateId id) const {
  if (id >= gates_.size()) {
    throw Error(ErrorKind::MalformedInput,
                "gate " + std::to_string(gates_.size()) + " refers to gate " + std::to_string(id) +
                    " which is not strictly earlier");
  }
}

GateId ArithmeticCircuit::push(Gate gate) {
  std::visit(Overloaded{
                 [&](const InputGate& g) {
                   if (g.index >= num_inputs_) {
                     throw Error(ErrorKind::MalformedInput,
                                 "input index " + std::to_string(g.index) + " >= " +
                                     std::to_string(num_inputs_));
                   }
                 },
                 [](const ConstGate&) {},
                 [&](const AddGate& g) {
                   check_ref(g.left);
                   check_ref(g.right);
                 },
                 [&](const MulGate& g) {
                   check_ref(g.left);
                   check_ref(g.right);
                 },
             },
             gate);
  gates_.push_back(std::move(gate));
  return static_cast<GateId>(gates_.size() - 1);
}

GateId ArithmeticCircuit::input(std::uint32_t index) { return push(InputGate{index}); }
GateId ArithmeticCircuit::constant(const BigInt& value) { return push(ConstGate{value}); }
GateId ArithmeticCircuit::add(GateId left, GateId right) { return push(AddGate{left, right}); }
GateId ArithmeticCircuit::mul(GateId left, GateId right) { return push(MulGate{left, right}); }

void ArithmeticCircuit::set_output(GateId id) {
  check_ref(id);
  output_ = id;
}

GateId ArithmeticCircuit::output() const {
  if (output_) return *output_;
  if (gates_.empty()) throw Error(ErrorKind::MalformedInput, "circuit has no gates");
  return static_cast<GateId>(gates_.size() - 1);
}

std::size_t circuit_size(const ArithmeticCircuit& c) {
  return 2 * static_cast<std::size_t>(std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) {
           return std::holds_alternative<AddGate>(g) || std::holds_alternative<MulGate>(g);
         }));
}

BigInt evaluate_circuit(const ArithmeticCircuit& c, std::span<const BigInt> x,
                        const std::optional<BigInt>& modulus) {
  if (x.size() != c.num_inputs()) {
    throw Error(ErrorKind::ArityMismatch, "circuit expects " + std::to_string(c.num_inputs()) +
                                              " inputs, got " + std::to_string(x.size()));
  }
  if (modulus && *modulus < 2) {
    throw Error(ErrorKind::NotPrime, "modulus " + to_decimal(*modulus) + " is not prime");
  }
  const auto reduce = [&](BigInt& v) {
    if (modulus) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modulus->get_mpz_t());
  };
  std::vector<BigInt> value(c.gate_count());
  for (std::size_t id = 0; id < c.gate_count(); ++id) {
    std::visit(Overloaded{
                   [&](const InputGate& g) { value[id] = x[g.index]; },
                   [&](const ConstGate& g) { value[id] = g.value; },
                   [&](const AddGate& g) { value[id] = value[g.left] + value[g.right]; },
                   [&](const MulGate& g) { value[id] = value[g.left] * value[g.right]; },
               },
               c.gates()[id]);
    reduce(value[id]);
  }
  return value[c.output()];
}

std::vector<std::uint64_t> syntactic_degrees(const ArithmeticCircuit& c) {
  constexpr std::uint64_t kSaturate = UINT32_MAX;
  std::vector<std::uint64_t> deg(c.gate_count(), 0);
  for (std::size_t id = 0; id < c.gate_count(); ++id) {
    deg[id] = std::visit(Overloaded{
                             [](const InputGate&) -> std::uint64_t { return 1; },
                             [](const ConstGate&) -> std::uint64_t { return 0; },
                             [&](const AddGate& g) { return std::max(deg[g.left], deg[g.right]); },
                             [&](const MulGate& g) {
                               return std::min(kSaturate, deg[g.left] + deg[g.right]);
                             },
                         },
                         c.gates()[id]);
  }
  return deg;
}

}  // namespace polyoracle::circuits
