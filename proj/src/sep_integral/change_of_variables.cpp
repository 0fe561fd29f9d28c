#include "qsep/sep_integral.hpp"

namespace qsep {

namespace {

MultiPoly affine4(const Rational& c0, const Rational& a1, const Rational& a2, const Rational& a3,
                  const Rational& a4) {
  const std::array<Rational, 4> coeffs{a1, a2, a3, a4};
  return MultiPoly::linear(c0, coeffs);
}

std::array<MultiPoly, 4> compose_all(const std::array<MultiPoly, 4>& outer,
                                     const std::array<MultiPoly, 4>& inner) {
  std::array<MultiPoly, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = compose(outer[k], inner);
  return out;
}

bool is_identity(const std::array<MultiPoly, 4>& m) {
  for (std::size_t k = 0; k < 4; ++k)
    if (!(m[k] == MultiPoly::variable(4, k))) return false;
  return true;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

ChangeOfVariables lambda_t_change_of_variables() {
  ChangeOfVariables cov;
  const Rational q(-1, 4);
  cov.forward[0] = affine4(q, 1, Rational(1, 2), Rational(1, 3), Rational(1, 4));
  cov.forward[1] = affine4(q, 0, Rational(1, 2), Rational(1, 3), Rational(1, 4));
  cov.forward[2] = affine4(q, 0, 0, Rational(1, 3), Rational(1, 4));
  cov.forward[3] = affine4(q, 0, 0, 0, Rational(1, 4));

  cov.inverse[0] = affine4(0, 1, -1, 0, 0);
  cov.inverse[1] = affine4(0, 0, 2, -2, 0);
  cov.inverse[2] = affine4(0, 0, 0, 3, -3);
  cov.inverse[3] = affine4(1, 0, 0, 0, 4);

  // Eliminate t4 and differentiate λ̂1..λ̂3 in t1..t3.
  const MultiPoly t4 = affine4(1, -1, -1, -1, 0);
  std::array<std::array<Rational, 3>, 3> jac;
  for (std::size_t i = 0; i < 3; ++i) {
    const MultiPoly li = substitute(cov.forward[i], 3, t4);
    for (std::size_t j = 0; j < 3; ++j) {
      Exponents e(4, 0);
      e[j] = 1;
      jac[i][j] = li.coefficient(e);
    }
  }
  cov.jacobian = det3(jac);
  return cov;
}

bool change_of_variables_roundtrip(const ChangeOfVariables& cov) {
  return is_identity(compose_all(cov.forward, cov.inverse)) &&
         is_identity(compose_all(cov.inverse, cov.forward));
}

std::array<MultiPoly, 4> lambda_hat_in_t() {
  const auto cov = lambda_t_change_of_variables();
  const MultiPoly t1 = MultiPoly::variable(kSepArity, kVarT1);
  const MultiPoly t2 = MultiPoly::variable(kSepArity, kVarT2);
  const MultiPoly t3 = MultiPoly::variable(kSepArity, kVarT3);
  const std::array<MultiPoly, 4> t{t1, t2, t3, MultiPoly::constant(kSepArity, 1) - t1 - t2 - t3};
  std::array<MultiPoly, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = compose(cov.forward[k], t);
  return out;
}

CInT c_coeffs_in_t() {
  const auto l = lambda_hat_in_t();
  const Rational two(2);
  return {two * (l[0] + l[1]), two * (l[0] + l[2]), two * (l[0] + l[3])};
}

MultiPoly vandermonde_t() {
  const MultiPoly t1 = MultiPoly::variable(kSepArity, kVarT1);
  const MultiPoly t2 = MultiPoly::variable(kSepArity, kVarT2);
  const MultiPoly t3 = MultiPoly::variable(kSepArity, kVarT3);
  const Rational two(2), three(3), six(6);
  return Rational(1, 432) * t1 * t2 * t3 * (two * t1 + t2) * (three * t2 + two * t3) *
         (six * t1 + three * t2 + two * t3);
}

MultiPoly vandermonde_of_lambda_t() {
  const auto l = lambda_hat_in_t();
  MultiPoly v = MultiPoly::constant(kSepArity, 1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) v *= l[i] - l[j];
  return v;
}

MultiPoly i_tilde(int k, C1Branch branch) {
  const CInT c = c_coeffs_in_t();
  const MultiPoly c1 = branch == C1Branch::positive ? c.c1_signed : -c.c1_signed;
  const std::array<MultiPoly, 4> values{MultiPoly::variable(kSepArity, kVarX), c1, c.c2, c.c3};
  return compose(marginal_term_generic(k), values);
}

}  // namespace qsep
