#include "qsep/exactmath/json_io.hpp"

namespace qsep {

nlohmann::json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  return parse_rational(j.get<std::string>());
}

nlohmann::json symbolic_to_json(const SymbolicReal& x) {
  return {{"coeff", to_string(x.coeff())}, {"pi_pow", x.pi_power()}, {"sqrt", x.radicand()}};
}

SymbolicReal symbolic_from_json(const nlohmann::json& j) {
  return SymbolicReal(rational_from_json(j.at("coeff")), j.at("pi_pow").get<unsigned>(),
                      j.at("sqrt").get<unsigned long>());
}

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", to_string(c)}});
  return terms;
}

MultiPoly poly_from_json(const nlohmann::json& j, std::size_t arity) {
  MultiPoly p(arity);
  for (const auto& term : j) p.add_term(term.at("exps").get<Exponents>(), rational_from_json(term.at("coeff")));
  return p;
}

}  // namespace qsep
