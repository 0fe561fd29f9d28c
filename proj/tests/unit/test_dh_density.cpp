#include <doctest.h>

#include <algorithm>
#include <random>

#include "qsep/dh_density.hpp"

using namespace qsep;

namespace {

Spectrum example_spectrum() {
  return Spectrum({make_rational(9, 20), make_rational(27, 100), make_rational(9, 50), make_rational(1, 10)});
}

}  // namespace

TEST_CASE("weights from roots") {
  const auto w = weights_from_roots();
  REQUIRE(w.size() == 6);
  CHECK(std::count(w.begin(), w.end(), Weight{-2, 0}) == 2);
  CHECK(std::count(w.begin(), w.end(), Weight{0, -2}) == 2);
  CHECK(std::count(w.begin(), w.end(), Weight{-2, 2}) == 1);
  CHECK(std::count(w.begin(), w.end(), Weight{-2, -2}) == 1);
  CHECK(distinct_weights().size() == 4);
}

TEST_CASE("chamber location and wall priority") {
  CHECK(locate_chamber(Rational(-2), Rational(1)) == ChamberLabel::C1);
  CHECK(locate_chamber(Rational(-2), Rational(-1)) == ChamberLabel::C2);
  CHECK(locate_chamber(Rational(-1), Rational(-2)) == ChamberLabel::C3);
  CHECK(locate_chamber(Rational(1), Rational(1)) == ChamberLabel::C0);
  CHECK(locate_chamber(Rational(-1), Rational(0)) == ChamberLabel::C1);
  CHECK(locate_chamber(Rational(-1), Rational(-1)) == ChamberLabel::C2);
  CHECK(locate_chamber(Rational(0), Rational(0)) == ChamberLabel::C1);
}

TEST_CASE("closed form pieces") {
  const PiecewiseDensity p = convolution_density_closed();
  CHECK(p.evaluate(Rational(-2), Rational(1)) == make_rational(1, 64));
  CHECK(p.evaluate(Rational(-2), Rational(-1)) == make_rational(4 + 4 - 1, 64));
  CHECK(p.evaluate(Rational(-1), Rational(-2)) == make_rational(1, 32));
  CHECK(p.evaluate(Rational(1), Rational(-1)) == 0);
}

TEST_CASE("jump walk reproduces the closed form") {
  const PiecewiseDensity closed = convolution_density_closed();
  const PiecewiseDensity jump = convolution_density_jump();
  for (auto label : {ChamberLabel::C1, ChamberLabel::C2, ChamberLabel::C3})
    CHECK(closed.piece(label) == jump.piece(label));
  for (const auto& w : jump_walk()) CHECK(w.prefactor == make_rational(1, 2));
}

TEST_CASE("density is continuous across walls") {
  const PiecewiseDensity p = convolution_density_closed();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(1, 500);
  for (int i = 0; i < 50; ++i) {
    const Rational t = make_rational(num(rng), 100);
    const std::vector<Rational> w01{-t, t}, w12{-t, Rational(0)}, w23{-t, -t};
    CHECK(p.piece(ChamberLabel::C1).evaluate(w01) == 0);
    CHECK(p.piece(ChamberLabel::C1).evaluate(w12) == p.piece(ChamberLabel::C2).evaluate(w12));
    CHECK(p.piece(ChamberLabel::C2).evaluate(w23) == p.piece(ChamberLabel::C3).evaluate(w23));
  }
}

TEST_CASE("fiber polytope oracle matches the closed form") {
  const PiecewiseDensity p = convolution_density_closed();
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-5, 1);
  for (int i = 0; i < 300; ++i) {
    const double r = u(rng), s = u(rng);
    CHECK(fiber_polytope_density(r, s) == doctest::Approx(p.evaluate(r, s)).epsilon(1e-9));
  }
  CHECK(fiber_polytope_density(-2, -1) == doctest::Approx(0.109375));
}

TEST_CASE("c-coefficients and moment polytope") {
  const CCoeffs c = c_coeffs(CenteredSpectrum::from(example_spectrum()));
  CHECK(c.c3 == make_rational(11, 25));
  CHECK(c.c2 == make_rational(13, 50));
  CHECK(c.c1 == make_rational(1, 10));
  const MomentPolytope2Q mp = moment_polytope(c);
  CHECK(mp.contains(Rational(0), Rational(0)));
  CHECK(mp.contains(c.c3, c.c2));
  CHECK_FALSE(mp.contains(c.c3, c.c3));
  CHECK_FALSE(mp.contains(c.c3, Rational(0)));
}

TEST_CASE("marginal density integrates to V4/12") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> draw(1, 1000);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> w;
    for (int i = 0; i < 4; ++i) w.push_back(Rational(draw(rng)));
    std::sort(w.begin(), w.end(), [](const Rational& a, const Rational& b) { return a > b; });
    Rational total(0);
    for (const auto& x : w) total += x;
    for (auto& x : w) x /= total;
    const Spectrum s(w);
    if (!s.is_simple()) continue;
    const CenteredSpectrum c = CenteredSpectrum::from(s);
    const PiecewisePoly1D d = marginal_density_I(c);
    CHECK(d.integral() == vandermonde(c.entries()) / 12);
    for (const auto& b : d.breakpoints()) CHECK(d.evaluate(b) >= 0);
  }
}

TEST_CASE("marginal density agrees with the nine-shift oracle") {
  const CenteredSpectrum c = CenteredSpectrum::from(example_spectrum());
  const PiecewisePoly1D d = marginal_density_I(c);
  for (double x : {0.02, 0.05, 0.1, 0.15, 0.2, 0.26, 0.3, 0.4, 0.43}) {
    CHECK(marginal_density_oracle(c, x) == doctest::Approx(d.evaluate(x)).epsilon(1e-6));
  }
  CHECK(marginal_density_oracle(c, 0.5) == 0.0);
  CHECK(nine_shifts(c_coeffs(c)).size() == 9);
}

TEST_CASE("Bravyi compatibility") {
  const Spectrum s = example_spectrum();
  CHECK(bravyi_compatible(s, make_rational(1, 2), make_rational(1, 2)));
  CHECK_FALSE(bravyi_compatible(s, Rational(0), make_rational(1, 2)));
}
