#include <cmath>

#include "qsep/dh_density.hpp"

namespace qsep {

CCoeffs c_coeffs(const CenteredSpectrum& lambda_hat) {
  if (lambda_hat.size() != 4) throw std::invalid_argument("c_coeffs: spectrum must have length 4");
  const auto& l = lambda_hat.entries();
  return {2 * abs(Rational(l[0] + l[3])), 2 * (l[0] + l[2]), 2 * (l[0] + l[1])};
}

MomentPolytope2Q::MomentPolytope2Q(CCoeffs c) : c_(std::move(c)) {
  if (c_.c1 < 0 || c_.c2 < c_.c1 || c_.c3 < c_.c2)
    throw std::invalid_argument("MomentPolytope2Q: need c3 >= c2 >= c1 >= 0");
}

bool MomentPolytope2Q::contains(const Rational& x, const Rational& y) const {
  if (x < 0 || y < 0 || x > c_.c3 || y > c_.c3) return false;
  if (x + y > c_.c2 + c_.c3) return false;
  return abs(Rational(x - y)) <= c_.c3 - c_.c1;
}

bool MomentPolytope2Q::contains(double x, double y, double tol) const {
  const double c1 = to_double(c_.c1), c2 = to_double(c_.c2), c3 = to_double(c_.c3);
  if (x < -tol || y < -tol || x > c3 + tol || y > c3 + tol) return false;
  if (x + y > c2 + c3 + tol) return false;
  return std::abs(x - y) <= c3 - c1 + tol;
}

MomentPolytope2Q moment_polytope(const CCoeffs& c) { return MomentPolytope2Q(c); }

bool bravyi_compatible(const Spectrum& global, const Rational& lam_min_a, const Rational& lam_min_b) {
  if (global.size() != 4) throw std::invalid_argument("bravyi_compatible: spectrum must have length 4");
  const auto poly = moment_polytope(c_coeffs(CenteredSpectrum::from(global)));
  return poly.contains(Rational(1 - 2 * lam_min_a), Rational(1 - 2 * lam_min_b));
}

bool bravyi_compatible(const Spectrum& global, double lam_min_a, double lam_min_b, double tol) {
  if (global.size() != 4) throw std::invalid_argument("bravyi_compatible: spectrum must have length 4");
  const auto poly = moment_polytope(c_coeffs(CenteredSpectrum::from(global)));
  return poly.contains(1 - 2 * lam_min_a, 1 - 2 * lam_min_b, tol);
}

}  // namespace qsep
