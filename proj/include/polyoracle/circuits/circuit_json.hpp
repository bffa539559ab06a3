#pragma once

#include <json.hpp>

#include "polyoracle/circuits/circuit.hpp"

namespace polyoracle::circuits {

/// {"num_inputs": n, "gates": [{"op":"input","i":k} | {"op":"const","v":"<decimal>"} |
///  {"op":"add","l":i,"r":j} | {"op":"mul","l":i,"r":j}], "output": id}
nlohmann::json to_json(const ArithmeticCircuit& c);
ArithmeticCircuit circuit_from_json(const nlohmann::json& j);

}  // namespace polyoracle::circuits
