#include <doctest.h>

#include "qsep/sep_integral.hpp"

using namespace qsep;

TEST_CASE("change of variables roundtrip and jacobian") {
  const ChangeOfVariables cov = lambda_t_change_of_variables();
  CHECK(change_of_variables_roundtrip(cov));
  CHECK(cov.jacobian == make_rational(1, 24));
}

TEST_CASE("regions are well ordered") {
  for (auto name : {RegionName::R, RegionName::R1a, RegionName::R1b, RegionName::R2a, RegionName::R2b,
                    RegionName::R2ab, RegionName::R3a, RegionName::R3b, RegionName::Delta3}) {
    const RegionCheck c = validate_region(region(name));
    CHECK_MESSAGE(c.bounds_ordered, to_string(name), " ", c.detail);
    CHECK(c.volume_at_sixth >= 0);
  }
  CHECK(validate_region(region(RegionName::Delta3)).volume_at_sixth == make_rational(1, 6));
  CHECK(validate_region(region(RegionName::R)).volume_at_sixth == make_rational(1, 12));
}

TEST_CASE("M integrals vanish to second order at x = 0") {
  MultiPoly sum(1);
  for (int k = 1; k <= 3; ++k) sum += compute_M(k).total;
  CHECK(sum.coefficient({0}) == 0);
  CHECK(sum.coefficient({1}) == 0);
}

TEST_CASE("decompositions agree") {
  for (int k = 2; k <= 3; ++k)
    CHECK(compute_M(k, Decomposition::standard).total == compute_M(k, Decomposition::via_r).total);
}

TEST_CASE("f(a) has the expected shape") {
  const FPoly f = compute_f();
  CHECK(f.prefactor == SymbolicReal(make_rational(1, 319334400), 5));
  const MultiPoly a = MultiPoly::variable(1, 0);
  const MultiPoly one = MultiPoly::constant(1, Rational(1));
  const MultiPoly expected = (one - a).pow(9) * (a * a * a * Rational(33) + a * a * Rational(162) +
                                                 a * Rational(72) + MultiPoly::constant(1, Rational(8)));
  CHECK(f.poly == expected);
  CHECK(evaluate_f(f, Rational(0)) == SymbolicReal(make_rational(1, 39916800), 5));
  CHECK(evaluate_f(f, Rational(1)).is_zero());
}

TEST_CASE("f_from_m_sum rejects a nonvanishing constant term") {
  CHECK_THROWS_AS(f_from_m_sum(MultiPoly::constant(1, Rational(1))), StructuralError);
}

TEST_CASE("conditioned volume and radial check") {
  const SymbolicReal v0 = conditioned_volume_at_zero();
  CHECK(v0 == SymbolicReal(make_rational(1, 9676800), 5));
  CHECK(radial_volume_check(v0));
  CHECK_FALSE(radial_volume_check(v0 * Rational(2)));
  CHECK(conditioned_volume(Rational(0)) == v0);
  CHECK(conditioned_volume(make_rational(1, 2)) == v0 * pow(make_rational(3, 4), 6));
}

TEST_CASE("separability probability is 8/33") {
  CHECK(separability_probability() == make_rational(8, 33));
  CHECK(separability_probability(Decomposition::via_r) == make_rational(8, 33));
}
