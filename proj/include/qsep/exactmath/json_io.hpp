#pragma once

#include <json.hpp>

#include "qsep/exactmath/multipoly.hpp"
#include "qsep/exactmath/symbolic_real.hpp"

namespace qsep {

// Wire formats:
//   Rational      "num/den"
//   SymbolicReal  {"coeff": "p/q", "pi_pow": k, "sqrt": m}
//   MultiPoly     [{"exps": [..], "coeff": "p/q"}, ...] in graded-lex order
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json symbolic_to_json(const SymbolicReal& x);
SymbolicReal symbolic_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j, std::size_t arity);

}  // namespace qsep
