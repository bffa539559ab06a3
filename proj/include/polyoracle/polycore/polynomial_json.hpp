#pragma once

#include <json.hpp>

#include "polyoracle/polycore/polynomial.hpp"

namespace polyoracle::poly {

/// {"num_vars": s, "monomials": [{"coeff": "<decimal>", "powers": [[idx, exp], ...]}, ...]}
nlohmann::json to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace polyoracle::poly
