#include "qsep/exactmath/laurent.hpp"

#include <algorithm>

namespace qsep {

LaurentSeries::LaurentSeries(std::size_t outer_arity, int min_degree, int truncation_order)
    : outer_arity_(outer_arity),
      min_degree_(min_degree),
      truncation_order_(truncation_order),
      zero_(outer_arity) {
  if (truncation_order < min_degree - 1)
    throw StructuralError("LaurentSeries: truncation order below minimum degree");
  coeffs_.assign(static_cast<std::size_t>(truncation_order - min_degree + 1), MultiPoly(outer_arity));
}

LaurentSeries LaurentSeries::exp_of(const MultiPoly& linear_form, int truncation_order) {
  LaurentSeries s(linear_form.arity(), 0, truncation_order);
  MultiPoly term = MultiPoly::constant(linear_form.arity(), Rational(1));
  for (int k = 0; k <= truncation_order; ++k) {
    s.set_coefficient(k, term);
    term = term * linear_form * Rational(1, k + 1);
  }
  return s;
}

LaurentSeries LaurentSeries::reciprocal_linear(std::size_t outer_arity, const Rational& constant,
                                               const Rational& z_coeff, int truncation_order) {
  if (constant == 0) {
    if (z_coeff == 0) throw StructuralError("reciprocal_linear: factor is identically zero");
    LaurentSeries s(outer_arity, -1, std::max(truncation_order, -1));
    s.set_coefficient(-1, MultiPoly::constant(outer_arity, 1 / z_coeff));
    return s;
  }
  // 1/(c + d z) = (1/c) sum_k (-d/c)^k z^k
  LaurentSeries s(outer_arity, 0, truncation_order);
  const Rational ratio = -z_coeff / constant;
  Rational c = 1 / constant;
  for (int k = 0; k <= truncation_order; ++k) {
    s.set_coefficient(k, MultiPoly::constant(outer_arity, c));
    c *= ratio;
  }
  return s;
}

const MultiPoly& LaurentSeries::coefficient(int degree) const {
  if (degree > truncation_order_) throw StructuralError("Laurent coefficient above truncation order");
  if (degree < min_degree_) return zero_;
  return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
}

void LaurentSeries::set_coefficient(int degree, MultiPoly value) {
  if (degree < min_degree_ || degree > truncation_order_)
    throw StructuralError("Laurent coefficient index out of range");
  if (value.arity() != outer_arity_) throw StructuralError("Laurent coefficient arity mismatch");
  coeffs_[static_cast<std::size_t>(degree - min_degree_)] = std::move(value);
}

MultiPoly LaurentSeries::residue() const {
  if (truncation_order_ < -1)
    throw StructuralError("residue requires truncation order >= -1");
  return coefficient(-1);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.outer_arity_ != b.outer_arity_) throw StructuralError("Laurent arity mismatch");
  const int lo = a.min_degree_ + b.min_degree_;
  const int hi = std::min(a.truncation_order_ + b.min_degree_, b.truncation_order_ + a.min_degree_);
  LaurentSeries out(a.outer_arity_, lo, std::max(hi, lo - 1));
  for (int n = lo; n <= hi; ++n) {
    MultiPoly acc(a.outer_arity_);
    for (int i = a.min_degree_; i <= a.truncation_order_; ++i) {
      const int j = n - i;
      if (j < b.min_degree_ || j > b.truncation_order_) continue;
      const MultiPoly& ai = a.coefficient(i);
      const MultiPoly& bj = b.coefficient(j);
      if (ai.is_zero() || bj.is_zero()) continue;
      acc += ai * bj;
    }
    out.set_coefficient(n, std::move(acc));
  }
  return out;
}

LaurentSeries laurent_expand(const MultiPoly& linear_form, std::span<const LinearFactor> factors,
                             int truncation_order) {
  const auto poles = static_cast<int>(
      std::count_if(factors.begin(), factors.end(), [](const LinearFactor& f) { return f.constant == 0; }));
  // Enough regular terms that the z^{-1} coefficient survives the shift.
  const int order = std::max(truncation_order, poles);
  LaurentSeries series = LaurentSeries::exp_of(linear_form, order);
  for (const auto& f : factors)
    series = series * LaurentSeries::reciprocal_linear(linear_form.arity(), f.constant, f.z_coeff, order);
  return series;
}

MultiPoly laurent_residue(const MultiPoly& linear_form, std::span<const LinearFactor> factors,
                          int truncation_order) {
  const bool has_pole =
      std::any_of(factors.begin(), factors.end(), [](const LinearFactor& f) { return f.constant == 0; });
  if (!has_pole) return MultiPoly(linear_form.arity());
  return laurent_expand(linear_form, factors, truncation_order).residue();
}

}  // namespace qsep
