#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsep/exactmath/rational.hpp"

namespace qsep {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order on exponent vectors: total degree first, then
// lexicographic with variable 0 most significant.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial with exact rational coefficients. Variables are
// positional; names live in whatever symbol table the caller keeps. Zero
// coefficients are never stored, so equality is structural.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Rational& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly monomial(Exponents exps, const Rational& c);

  // a0 + sum_i coeffs[i] * x_i
  static MultiPoly linear(const Rational& a0, std::span<const Rational> coeffs);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  Rational coefficient(const Exponents& exps) const;
  // Constant term.
  Rational constant_term() const;

  void add_term(const Exponents& exps, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned exponent) const;

  // Re-index into a polynomial of arity `new_arity`: variable i of this
  // polynomial becomes variable mapping[i].
  MultiPoly remap(std::size_t new_arity, std::span<const std::size_t> mapping) const;

 private:
  void require_same_arity(const MultiPoly& other) const;

  std::size_t arity_;
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

// Replace variable `var` by `value` (same arity) and expand.
MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value);

// Simultaneous substitution x_i -> values[i]. All values share one arity,
// which becomes the arity of the result.
MultiPoly compose(const MultiPoly& p, std::span<const MultiPoly> values);

MultiPoly derivative(const MultiPoly& p, std::size_t var);
MultiPoly antiderivative(const MultiPoly& p, std::size_t var);

// Definite integral over var in [lower, upper]; bounds must not involve var.
MultiPoly integrate_once(const MultiPoly& p, std::size_t var, const MultiPoly& lower,
                         const MultiPoly& upper);

struct IntegrationBound {
  std::size_t var;
  MultiPoly lower;
  MultiPoly upper;
};

// Innermost bound first. Each bound may only involve variables that are still
// free once it is applied.
MultiPoly iterated_integrate(const MultiPoly& p, std::span<const IntegrationBound> bounds);

// Human-readable rendering, e.g. "1/64*r^2 + 1/32*r*s". Empty names fall back
// to x0, x1, ...
std::string to_string(const MultiPoly& p, std::span<const std::string> names = {});

}  // namespace qsep
