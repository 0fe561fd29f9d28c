#include <doctest.h>

#include <random>

#include "qsep/exactmath/json_io.hpp"
#include "qsep/exactmath/laurent.hpp"
#include "qsep/exactmath/multipoly.hpp"
#include "qsep/exactmath/rational.hpp"
#include "qsep/exactmath/symbolic_real.hpp"

using namespace qsep;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, std::size_t arity, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  MultiPoly p(arity);
  for (int t = 0; t < terms; ++t) {
    Exponents e(arity);
    for (auto& x : e) x = deg(rng);
    p.add_term(e, make_rational(coef(rng), den(rng)));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t arity) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < arity; ++i) pt.push_back(make_rational(num(rng), den(rng)));
  return pt;
}

}  // namespace

TEST_CASE("parse_rational handles fractions and decimals") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-0.45") == make_rational(-9, 20));
  CHECK(parse_rational("0.18") == make_rational(9, 50));
  CHECK(parse_rational("0.08") == make_rational(2, 25));
  CHECK(parse_rational("1.5e-2") == make_rational(3, 200));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational("0.1/0.3") == make_rational(1, 3));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
  CHECK(to_string(Rational(3)) == "3/1");
}

TEST_CASE("factorial and gamma") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(gamma_int(5) == 24);
  CHECK_THROWS(gamma_int(0));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly a = random_poly(rng, 3, 3, 5), b = random_poly(rng, 3, 3, 5), c = random_poly(rng, 3, 3, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    const auto pt = random_point(rng, 3);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST_CASE("arity mismatch is a structural error") {
  CHECK_THROWS_AS(MultiPoly(2) + MultiPoly(3), StructuralError);
  CHECK_THROWS_AS(MultiPoly::variable(2, 2), StructuralError);
}

TEST_CASE("fundamental theorem of calculus") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = random_poly(rng, 2, 4, 6);
    CHECK(derivative(antiderivative(p, 0), 0) == p);
    const auto pt = random_point(rng, 2);
    const MultiPoly lo = MultiPoly::constant(2, pt[0]), hi = MultiPoly::constant(2, pt[1]);
    const MultiPoly integral = integrate_once(p, 0, lo, hi);
    CHECK_FALSE(integral.depends_on(0));
    const MultiPoly anti = antiderivative(p, 0);
    const MultiPoly y = MultiPoly::variable(2, 1);
    const std::vector<Rational> at_hi{pt[1], Rational(0)}, at_lo{pt[0], Rational(0)};
    // Compare at y = 0.
    const std::vector<Rational> origin{Rational(0), Rational(0)};
    CHECK(integral.evaluate(origin) == anti.evaluate(at_hi) - anti.evaluate(at_lo));
    (void)y;
  }
}

TEST_CASE("integration bound may not depend on the integration variable") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  CHECK_THROWS_AS(integrate_once(x, 0, MultiPoly(2), x), StructuralError);
}

TEST_CASE("iterated integral over the unit simplex") {
  // ∫_0^1 ∫_0^{1-x} 1 dy dx = 1/2
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly one = MultiPoly::constant(2, Rational(1));
  const std::vector<IntegrationBound> bounds{{1, MultiPoly(2), one - x}, {0, MultiPoly(2), one}};
  CHECK(iterated_integrate(one, bounds) == MultiPoly::constant(2, make_rational(1, 2)));
  const std::vector<IntegrationBound> bad{{0, MultiPoly(2), one}, {1, MultiPoly(2), one - x}};
  CHECK_THROWS_AS(iterated_integrate(one, bad), StructuralError);
}

TEST_CASE("compose agrees with sequential substitution") {
  std::mt19937_64 rng(3);
  const MultiPoly p = random_poly(rng, 2, 3, 5);
  const MultiPoly u = MultiPoly::variable(1, 0);
  const std::vector<MultiPoly> values{u * Rational(2), u + MultiPoly::constant(1, Rational(1))};
  const MultiPoly c = compose(p, values);
  for (int i = -3; i <= 3; ++i) {
    const Rational t(i);
    const std::vector<Rational> src{2 * t, t + 1};
    const std::vector<Rational> dst{t};
    CHECK(c.evaluate(dst) == p.evaluate(src));
  }
}

TEST_CASE("to_string") {
  const MultiPoly x = MultiPoly::variable(1, 0);
  const std::array<std::string, 1> names{"x"};
  CHECK(to_string(x * x - x * Rational(3) + MultiPoly::constant(1, Rational(2)), names) == "x^2 - 3*x + 2");
  CHECK(to_string(MultiPoly(1)) == "0");
}

TEST_CASE("Laurent residue: simple pole") {
  // Res exp(Lz)/z = 1
  const MultiPoly l = MultiPoly::variable(1, 0);
  const std::vector<LinearFactor> f{{Rational(0), Rational(1)}};
  CHECK(laurent_residue(l, f) == MultiPoly::constant(1, Rational(1)));
}

TEST_CASE("Laurent residue: double pole gives the linear form") {
  const MultiPoly l = MultiPoly::variable(1, 0);
  const std::vector<LinearFactor> f{{Rational(0), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK(laurent_residue(l, f) == l);
}

TEST_CASE("Laurent residue: cubic pole with a regular factor") {
  // exp(Lz) / (z^3 (1 + z)) residue = L^2/2 - L + 1
  const MultiPoly l = MultiPoly::variable(1, 0);
  const std::vector<LinearFactor> f{
      {Rational(0), Rational(1)}, {Rational(0), Rational(1)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
  const MultiPoly expected = l * l * make_rational(1, 2) - l + MultiPoly::constant(1, Rational(1));
  CHECK(laurent_residue(l, f) == expected);
}

TEST_CASE("Laurent: no pole means zero residue") {
  const MultiPoly l = MultiPoly::variable(1, 0);
  const std::vector<LinearFactor> f{{Rational(2), Rational(1)}};
  CHECK(laurent_residue(l, f).is_zero());
}

TEST_CASE("Laurent: truncation order is respected") {
  const MultiPoly l = MultiPoly::variable(1, 0);
  const std::vector<LinearFactor> f{{Rational(0), Rational(1)}};
  const LaurentSeries s = laurent_expand(l, f, 3);
  CHECK(s.min_degree() == -1);
  // A simple pole costs one order of known coefficients.
  CHECK(s.truncation_order() == 2);
  CHECK_THROWS(s.coefficient(4));
  CHECK(s.coefficient(-5).is_zero());
}

TEST_CASE("SymbolicReal arithmetic") {
  const SymbolicReal pi = SymbolicReal::pi_pow(1);
  CHECK((pi * pi).pi_power() == 2);
  CHECK(SymbolicReal::sqrt_of(12) == SymbolicReal(Rational(2), 0, 3));
  CHECK(SymbolicReal::sqrt_of(2) * SymbolicReal::sqrt_of(2) == SymbolicReal(Rational(2)));
  CHECK((pi.pow(3) / pi) == pi.pow(2));
  CHECK_THROWS(pi / pi.pow(2));
  CHECK_THROWS(pi / SymbolicReal());
  CHECK_THROWS(pi + SymbolicReal(Rational(1)));
  CHECK((pi + pi) == pi * Rational(2));
  CHECK(pi.to_double() == doctest::Approx(3.141592653589793));
  CHECK(to_decimal(1.0 / 3.0).size() >= 17);
}

TEST_CASE("JSON roundtrips") {
  const Rational q = make_rational(-8, 33);
  CHECK(rational_from_json(rational_to_json(q)) == q);
  const SymbolicReal s(make_rational(3, 7), 5, 2);
  CHECK(symbolic_from_json(symbolic_to_json(s)) == s);
  std::mt19937_64 rng(4);
  const MultiPoly p = random_poly(rng, 3, 4, 7);
  CHECK(poly_from_json(poly_to_json(p), 3) == p);
}
