#pragma once

#include <span>
#include <vector>

#include "qsep/exactmath/multipoly.hpp"

namespace qsep {

// Truncated Laurent series sum_{k=min_degree}^{truncation_order} a_k z^k in a
// formal variable z, with coefficients polynomial in the outer variables.
class LaurentSeries {
 public:
  LaurentSeries(std::size_t outer_arity, int min_degree, int truncation_order);

  // exp(L z) for a polynomial L in the outer variables.
  static LaurentSeries exp_of(const MultiPoly& linear_form, int truncation_order);
  // 1 / (constant + z_coeff z); a simple pole when constant = 0.
  static LaurentSeries reciprocal_linear(std::size_t outer_arity, const Rational& constant,
                                         const Rational& z_coeff, int truncation_order);

  std::size_t outer_arity() const { return outer_arity_; }
  int min_degree() const { return min_degree_; }
  int truncation_order() const { return truncation_order_; }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  // Zero outside [min_degree, truncation_order]; throws above the truncation
  // order, where the coefficient is not known.
  const MultiPoly& coefficient(int degree) const;
  void set_coefficient(int degree, MultiPoly value);

  // Coefficient of z^{-1}.
  MultiPoly residue() const;

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

 private:
  std::size_t outer_arity_;
  int min_degree_;
  int truncation_order_;
  std::vector<MultiPoly> coeffs_;
  MultiPoly zero_;
};

// One denominator factor (constant + z_coeff * z).
struct LinearFactor {
  Rational constant;
  Rational z_coeff;
};

inline constexpr int kDefaultLaurentOrder = 8;

// Res_{z=0} [ exp(L z) / prod_i (constant_i + z_coeff_i z) ] as an exact
// polynomial in the outer variables. Zero when no factor has a pole at 0.
MultiPoly laurent_residue(const MultiPoly& linear_form, std::span<const LinearFactor> factors,
                          int truncation_order = kDefaultLaurentOrder);

// The full truncated series behind laurent_residue (exposed for testing).
LaurentSeries laurent_expand(const MultiPoly& linear_form, std::span<const LinearFactor> factors,
                             int truncation_order = kDefaultLaurentOrder);

}  // namespace qsep
