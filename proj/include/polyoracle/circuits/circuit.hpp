#pragma once

// Arithmetic circuits over Z (optionally evaluated in Z_p). Gates are kept
// in topological order: every Add/Mul refers to strictly earlier gates, so
// a single forward pass evaluates or validates the whole circuit.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "polyoracle/common/bigint.hpp"

namespace polyoracle::circuits {

using GateId = std::uint32_t;

struct InputGate {
  std::uint32_t index = 0;
};
struct ConstGate {
  BigInt value;
};
struct AddGate {
  GateId left = 0;
  GateId right = 0;
};
struct MulGate {
  GateId left = 0;
  GateId right = 0;
};

using Gate = std::variant<InputGate, ConstGate, AddGate, MulGate>;

class ArithmeticCircuit {
 public:
  explicit ArithmeticCircuit(std::size_t num_inputs = 0) : num_inputs_(num_inputs) {}

  /// Validates topological order, input indices and the output id.
  /// Throws Error(MalformedInput).
  ArithmeticCircuit(std::size_t num_inputs, std::vector<Gate> gates, GateId output);

  GateId input(std::uint32_t index);
  GateId constant(const BigInt& value);
  GateId add(GateId left, GateId right);
  GateId mul(GateId left, GateId right);
  void set_output(GateId id);

  std::size_t num_inputs() const { return num_inputs_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t gate_count() const { return gates_.size(); }
  /// Defaults to the last gate added when no output was set.
  GateId output() const;

 private:
  GateId push(Gate gate);
  void check_ref(GateId id) const;

  std::size_t num_inputs_ = 0;
  std::vector<Gate> gates_;
  std::optional<GateId> output_;
};

/// Number of edges: two per Add/Mul gate.
std::size_t circuit_size(const ArithmeticCircuit& c);

/// Gate-by-gate evaluation. With a modulus every intermediate value is
/// reduced into [0, p).
BigInt evaluate_circuit(const ArithmeticCircuit& c, std::span<const BigInt> x,
                        const std::optional<BigInt>& modulus = std::nullopt);

/// Formal degree of every gate (Input 1, Const 0, Add max, Mul sum),
/// saturating at UINT32_MAX.
std::vector<std::uint64_t> syntactic_degrees(const ArithmeticCircuit& c);

}  // namespace polyoracle::circuits
