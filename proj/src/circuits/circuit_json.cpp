#include "polyoracle/circuits/circuit_json.hpp"

#include "polyoracle/common/error.hpp"
#include "polyoracle/common/overloaded.hpp"

namespace polyoracle::circuits {

nlohmann::json to_json(const ArithmeticCircuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates()) {
    gates.push_back(std::visit(
        Overloaded{
            [](const InputGate& x) -> nlohmann::json { return {{"op", "input"}, {"i", x.index}}; },
            [](const ConstGate& x) -> nlohmann::json {
              return {{"op", "const"}, {"v", to_decimal(x.value)}};
            },
            [](const AddGate& x) -> nlohmann::json {
              return {{"op", "add"}, {"l", x.left}, {"r", x.right}};
            },
            [](const MulGate& x) -> nlohmann::json {
              return {{"op", "mul"}, {"l", x.left}, {"r", x.right}};
            },
        },
        g));
  }
  return {{"num_inputs", c.num_inputs()}, {"gates", std::move(gates)}, {"output", c.output()}};
}

ArithmeticCircuit circuit_from_json(const nlohmann::json& j) {
  try {
    std::vector<Gate> gates;
    for (const auto& jg : j.at("gates")) {
      const auto op = jg.at("op").get<std::string>();
      if (op == "input") {
        gates.emplace_back(InputGate{jg.at("i").get<std::uint32_t>()});
      } else if (op == "const") {
        const auto& v = jg.at("v");
        gates.emplace_back(ConstGate{v.is_string() ? parse_bigint(v.get<std::string>())
                                                   : BigInt(v.get<long>())});
      } else if (op == "add") {
        gates.emplace_back(AddGate{jg.at("l").get<GateId>(), jg.at("r").get<GateId>()});
      } else if (op == "mul") {
        gates.emplace_back(MulGate{jg.at("l").get<GateId>(), jg.at("r").get<GateId>()});
      } else {
        throw Error(ErrorKind::MalformedInput, "unknown gate op '" + op + "'");
      }
    }
    return ArithmeticCircuit(j.at("num_inputs").get<std::size_t>(), std::move(gates),
                             j.at("output").get<GateId>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("circuit JSON: ") + e.what());
  }
}

}  // namespace polyoracle::circuits
