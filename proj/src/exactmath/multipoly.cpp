#include "qsep/exactmath/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsep {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw StructuralError("variable index out of range");
  Exponents e(arity, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::linear(const Rational& a0, std::span<const Rational> coeffs) {
  MultiPoly p = constant(coeffs.size(), a0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p += variable(coeffs.size(), i) * coeffs[i];
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  if (var >= arity_) throw StructuralError("variable index out of range");
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(arity_, 0)); }

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != arity_) throw StructuralError("exponent vector length differs from arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw StructuralError("evaluation point has wrong arity");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i)
      if (e[i]) term *= qsep::pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != arity_) throw StructuralError("evaluation point has wrong arity");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < arity_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

void MultiPoly::require_same_arity(const MultiPoly& other) const {
  if (arity_ != other.arity_) throw StructuralError("polynomial arity mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_arity(b);
  MultiPoly out(a.arity_);
  Exponents e(a.arity_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(arity_, Rational(1));
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::remap(std::size_t new_arity, std::span<const std::size_t> mapping) const {
  if (mapping.size() != arity_) throw StructuralError("remap: mapping length differs from arity");
  for (std::size_t target : mapping)
    if (target >= new_arity) throw StructuralError("remap: target index out of range");
  MultiPoly out(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_arity, 0);
    for (std::size_t i = 0; i < arity_; ++i) ne[mapping[i]] += e[i];
    out.add_term(ne, c);
  }
  return out;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::logic_error("unknown ArithOp");
}

MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value) {
  if (var >= p.arity()) throw StructuralError("substitute: variable index out of range");
  if (value.arity() != p.arity()) throw StructuralError("substitute: value arity mismatch");

  // Group terms by the power of `var`, then combine with cached powers.
  std::map<unsigned, MultiPoly> by_power;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[var] = 0;
    auto [it, inserted] = by_power.try_emplace(e[var], p.arity());
    it->second.add_term(rest, c);
  }
  MultiPoly out(p.arity());
  MultiPoly power = MultiPoly::constant(p.arity(), Rational(1));
  unsigned current = 0;
  for (const auto& [k, coeff_poly] : by_power) {
    while (current < k) {
      power *= value;
      ++current;
    }
    out += coeff_poly * power;
  }
  return out;
}

MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> values) {
  if (values.size() != p.arity()) throw StructuralError("compose: need one value per variable");
  if (values.empty()) return p;
  const std::size_t arity = values[0].arity();
  for (const auto& v : values)
    if (v.arity() != arity) throw StructuralError("compose: values must share one arity");

  std::vector<std::vector<MultiPoly>> powers(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    powers[i].push_back(MultiPoly::constant(arity, Rational(1)));
    const unsigned d = p.degree_in(i);
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * values[i]);
  }
  MultiPoly out(arity);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(arity, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= powers[i][e[i]];
    out += term;
  }
  return out;
}

MultiPoly derivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.arity()) throw StructuralError("derivative: variable index out of range");
  MultiPoly out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents ne = e;
    --ne[var];
    out.add_term(ne, c * e[var]);
  }
  return out;
}

MultiPoly antiderivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.arity()) throw StructuralError("antiderivative: variable index out of range");
  MultiPoly out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ++ne[var];
    Rational q = c / ne[var];
    out.add_term(ne, q);
  }
  return out;
}

MultiPoly integrate_once(const MultiPoly& p, std::size_t var, const MultiPoly& lower,
                         const MultiPoly& upper) {
  if (var >= p.arity()) throw StructuralError("integrate_once: variable index out of range");
  if (lower.arity() != p.arity() || upper.arity() != p.arity())
    throw StructuralError("integrate_once: bound arity mismatch");
  if (lower.depends_on(var) || upper.depends_on(var))
    throw StructuralError("integrate_once: bound depends on the integration variable");
  const MultiPoly anti = antiderivative(p, var);
  return substitute(anti, var, upper) - substitute(anti, var, lower);
}

MultiPoly iterated_integrate(const MultiPoly& p, std::span<const IntegrationBound> bounds) {
  std::vector<bool> integrated(p.arity(), false);
  MultiPoly acc = p;
  for (const auto& b : bounds) {
    if (b.var >= p.arity()) throw StructuralError("iterated_integrate: variable index out of range");
    if (integrated[b.var]) throw StructuralError("iterated_integrate: variable integrated twice");
    integrated[b.var] = true;
    for (std::size_t v = 0; v < p.arity(); ++v) {
      if (integrated[v] && (b.lower.depends_on(v) || b.upper.depends_on(v)))
        throw StructuralError("iterated_integrate: bound depends on an already-integrated variable");
    }
    acc = integrate_once(acc, b.var, b.lower, b.upper);
  }
  return acc;
}

std::string to_string(const MultiPoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (has_var) mono << "*";
      has_var = true;
      mono << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) mono << "^" << e[i];
    }
    if (!has_var) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << mag.get_str() << "*" << mono.str();
    }
  }
  return out.str();
}

}  // namespace qsep
