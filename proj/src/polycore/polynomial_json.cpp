#include "polyoracle/polycore/polynomial_json.hpp"

#include "polyoracle/common/error.hpp"

namespace polyoracle::poly {

nlohmann::json to_json(const SparsePolynomial& p) {
  nlohmann::json monomials = nlohmann::json::array();
  for (const auto& m : p.monomials()) {
    nlohmann::json powers = nlohmann::json::array();
    for (const auto& pw : m.powers) powers.push_back({pw.var, pw.exp});
    monomials.push_back({{"coeff", to_decimal(m.coeff)}, {"powers", std::move(powers)}});
  }
  return {{"num_vars", p.num_vars()}, {"monomials", std::move(monomials)}};
}

SparsePolynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    const auto num_vars = j.at("num_vars").get<std::size_t>();
    std::vector<Monomial> terms;
    for (const auto& jm : j.at("monomials")) {
      Monomial m;
      const auto& c = jm.at("coeff");
      m.coeff = c.is_string() ? parse_bigint(c.get<std::string>()) : BigInt(c.get<long>());
      for (const auto& jp : jm.at("powers")) {
        if (!jp.is_array() || jp.size() != 2) {
          throw Error(ErrorKind::MalformedInput, "power entries must be [idx, exp]");
        }
        const auto exp = jp[1].get<std::uint32_t>();
        if (exp == 0) throw Error(ErrorKind::MalformedInput, "exponent must be positive");
        m.powers.push_back(Power{jp[0].get<VarIndex>(), exp});
      }
      terms.push_back(std::move(m));
    }
    return SparsePolynomial(num_vars, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace polyoracle::poly
