#include "qsep/volumes.hpp"

#include <stdexcept>

namespace qsep {

namespace {

void check_dimension(unsigned n, unsigned max_n) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (n > max_n) throw std::out_of_range("dimension exceeds configured cap");
}

unsigned pair_count(unsigned n) { return n * (n - 1) / 2; }

BigInt gamma_product(unsigned n) {
  BigInt p(1);
  for (unsigned k = 1; k <= n; ++k) p *= gamma_int(k);
  return p;
}

}  // namespace

Rational vandermonde(std::span<const Rational> x) {
  Rational v(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
  return v;
}

SymbolicReal flag_volume_hs(unsigned n, unsigned max_n) {
  check_dimension(n, max_n);
  const unsigned m = pair_count(n);
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, m);
  return SymbolicReal(Rational(two_pow, gamma_product(n)), m);
}

SymbolicReal flag_volume_euclid(unsigned n, unsigned max_n) {
  check_dimension(n, max_n);
  return SymbolicReal(Rational(BigInt(1), gamma_product(n)), pair_count(n));
}

OrbitVolume adjoint_orbit_volume_hs(std::span<const Rational> x) {
  const auto n = static_cast<unsigned>(x.size());
  const Rational v = vandermonde(x);
  if (v == 0) return {SymbolicReal{}, true};
  return {flag_volume_hs(n) * Rational(v * v), false};
}

SymbolicReal state_space_volume_hs(unsigned n, unsigned max_n) {
  check_dimension(n, max_n);
  return SymbolicReal::sqrt_of(n) * flag_volume_hs(n, max_n) * simplex_vandermonde_integral(n, max_n);
}

Rational simplex_vandermonde_integral(unsigned n, unsigned max_n) {
  check_dimension(n, max_n);
  const BigInt g = gamma_product(n);
  Rational r(g * g, gamma_int(n * n));
  r.canonicalize();
  return r;
}

SymbolicReal coadjoint_symplectic_volume(const CenteredSpectrum& lambda_hat) {
  const Rational v = vandermonde(lambda_hat.entries());
  if (v == 0) return {};
  // Descending entries make V_N positive; |V_N| is what the measure needs.
  return flag_volume_hs(static_cast<unsigned>(lambda_hat.size())) * Rational(abs(v));
}

bool hs_symp_relation_check(const CenteredSpectrum& lambda_hat) {
  const OrbitVolume hs = adjoint_orbit_volume_hs(lambda_hat.entries());
  const Rational v = vandermonde(lambda_hat.entries());
  return hs.volume == coadjoint_symplectic_volume(lambda_hat) * v;
}

}  // namespace qsep
