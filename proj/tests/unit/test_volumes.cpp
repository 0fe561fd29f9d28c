#include <doctest.h>

#include "qsep/volumes.hpp"

using namespace qsep;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [n, d] : xs) out.push_back(make_rational(n, d));
  return out;
}

}  // namespace

TEST_CASE("spectrum validation") {
  CHECK_NOTHROW(Spectrum(rationals({{9, 20}, {27, 100}, {9, 50}, {1, 10}})));
  CHECK_THROWS(Spectrum(rationals({{1, 10}, {9, 20}, {27, 100}, {9, 50}})));
  CHECK_THROWS(Spectrum(rationals({{1, 2}, {1, 2}, {1, 2}, {-1, 2}})));
  CHECK_THROWS(Spectrum(rationals({{1, 2}, {1, 4}})));
  CHECK_FALSE(Spectrum(rationals({{1, 4}, {1, 4}, {1, 4}, {1, 4}})).is_simple());
}

TEST_CASE("centered spectrum sums to zero") {
  const Spectrum s(rationals({{9, 20}, {27, 100}, {9, 50}, {1, 10}}));
  const CenteredSpectrum c = CenteredSpectrum::from(s);
  Rational sum(0);
  for (const auto& v : c.entries()) sum += v;
  CHECK(sum == 0);
  CHECK(c[0] == make_rational(1, 5));
}

TEST_CASE("vandermonde") {
  const auto x = rationals({{3, 1}, {2, 1}, {0, 1}});
  CHECK(vandermonde(x) == Rational(6));
}

TEST_CASE("flag volumes for small N") {
  CHECK(flag_volume_hs(1) == SymbolicReal(Rational(1)));
  CHECK(flag_volume_hs(2) == SymbolicReal(Rational(2), 1));
  CHECK(flag_volume_euclid(2) == SymbolicReal(Rational(1), 1));
  // (2π)^6 / (1·1·2·6) for N = 4
  CHECK(flag_volume_hs(4) == SymbolicReal(make_rational(64, 12), 6));
}

TEST_CASE("flag volume HS/Euclid ratio is 2^{N(N-1)/2}") {
  for (unsigned n = 1; n <= kMaxVolumeDimension; ++n) {
    const SymbolicReal ratio = flag_volume_hs(n) / flag_volume_euclid(n);
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n * (n - 1) / 2);
    CHECK(ratio == SymbolicReal(Rational(two_pow)));
  }
}

TEST_CASE("dimension outside range is rejected") {
  CHECK_THROWS(flag_volume_hs(0));
  CHECK_THROWS(flag_volume_hs(kMaxVolumeDimension + 1));
  CHECK_THROWS(state_space_volume_hs(kMaxVolumeDimension + 1));
}

TEST_CASE("two-qubit state space volume") {
  // √4 (2π)^6 Γ(1)Γ(2)Γ(3)Γ(4) / Γ(16)
  const SymbolicReal expected(Rational(2 * 64 * 12) / Rational(factorial(15)), 6);
  CHECK(state_space_volume_hs(4) == expected);
}

TEST_CASE("state space volume factorizes over orbits for N <= 8") {
  for (unsigned n = 1; n <= 8; ++n) {
    const SymbolicReal lhs = state_space_volume_hs(n);
    const SymbolicReal rhs = flag_volume_hs(n) * SymbolicReal(Rational(simplex_vandermonde_integral(n)), 0,
                                                             static_cast<unsigned long>(n));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("adjoint orbit volume degenerates on repeated eigenvalues") {
  const auto x = rationals({{1, 2}, {1, 2}, {0, 1}});
  const OrbitVolume v = adjoint_orbit_volume_hs(x);
  CHECK(v.degenerate);
  CHECK(v.volume.is_zero());
}

TEST_CASE("HS and symplectic orbit volumes are related") {
  const Spectrum s(rationals({{9, 20}, {27, 100}, {9, 50}, {1, 10}}));
  CHECK(hs_symp_relation_check(CenteredSpectrum::from(s)));
}
