#include <map>
#include <mutex>

#include "qsep/sep_integral.hpp"

namespace qsep {

namespace {

const std::array<std::size_t, kSepArity> kToX{0, 0, 0, 0};

MultiPoly weighted_part(const TRegion& r, const MultiPoly& integrand) {
  const MultiPoly v = integrate_over(r, integrand) * Rational(2, 24);
  for (std::size_t var : {kVarT1, kVarT2, kVarT3})
    if (v.depends_on(var)) throw StructuralError("compute_M: integration left a t-variable behind");
  return v.remap(1, kToX);
}

struct Term {
  RegionName region;
  int sign;
  C1Branch branch;
};

std::vector<Term> decomposition(int k, Decomposition d) {
  using RN = RegionName;
  const auto pos = C1Branch::positive;
  switch (k) {
    case 1: return {{RN::R1a, +1, C1Branch::positive}, {RN::R1b, +1, C1Branch::negative}};
    case 2:
      if (d == Decomposition::standard)
        return {{RN::Delta3, +1, pos}, {RN::R2ab, +1, pos}, {RN::R2a, -1, pos}, {RN::R2b, -1, pos}};
      return {{RN::R, +1, pos}, {RN::R2b, -1, pos}, {RN::R2ab, +1, pos}};
    case 3:
      if (d == Decomposition::standard)
        return {{RN::Delta3, +1, pos}, {RN::R3a, -1, pos}, {RN::R3b, -1, pos}};
      return {{RN::R, +1, pos}, {RN::R3b, -1, pos}};
  }
  throw std::invalid_argument("compute_M: k must be 1, 2 or 3");
}

MResult compute_M_uncached(int k, Decomposition d) {
  const MultiPoly v = vandermonde_t();
  MResult out{{}, MultiPoly(1)};
  std::map<C1Branch, MultiPoly> integrands;
  for (const Term& t : decomposition(k, d)) {
    auto it = integrands.find(t.branch);
    if (it == integrands.end()) it = integrands.emplace(t.branch, v * i_tilde(k, t.branch)).first;
    MultiPoly part = weighted_part(region(t.region), it->second);
    if (t.sign > 0)
      out.total += part;
    else
      out.total -= part;
    out.parts.push_back({t.region, t.sign, std::move(part)});
  }
  return out;
}

BigInt poly_content_den(const MultiPoly& p) {
  BigInt l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

BigInt poly_content_num(const MultiPoly& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

}  // namespace

MResult compute_M(int k, Decomposition d) {
  static std::mutex mu;
  static std::map<std::pair<int, Decomposition>, MResult> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({k, d});
    if (it != cache.end()) return it->second;
  }
  MResult r = compute_M_uncached(k, d);
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(k, d), std::move(r)).first->second;
}

FPoly f_from_m_sum(const MultiPoly& m_sum) {
  if (m_sum.arity() != 1) throw StructuralError("f_from_m_sum: expected a polynomial in one variable");
  if (m_sum.coefficient({0}) != 0 || m_sum.coefficient({1}) != 0)
    throw StructuralError("f_from_m_sum: a^-2 does not cancel against M1+M2+M3");

  MultiPoly q(1);
  for (const auto& [e, c] : m_sum.terms()) q.add_term({e[0] - 2}, c);
  if (q.is_zero()) throw StructuralError("f_from_m_sum: M1+M2+M3 vanishes");

  Rational content(poly_content_num(q), poly_content_den(q));
  content.canonicalize();
  if (q.constant_term() < 0) content = -content;
  // Constant term zero would leave the sign convention ambiguous; the
  // leading nonzero low-order term decides instead.
  if (q.constant_term() == 0 && q.terms().begin()->second < 0) content = -content;

  FPoly f;
  f.poly = q * Rational(1 / content);
  // (2/π) (2π)^6 = 128 π^5
  f.prefactor = SymbolicReal(128 * content, 5);
  return f;
}

FPoly compute_f(Decomposition d) {
  MultiPoly sum(1);
  for (int k = 1; k <= 3; ++k) sum += compute_M(k, d).total;
  return f_from_m_sum(sum);
}

SymbolicReal evaluate_f(const FPoly& f, const Rational& a) {
  const std::array<Rational, 1> pt{a};
  return f.prefactor * f.poly.evaluate(std::span<const Rational>(pt));
}

bool f_consistency_check(const FPoly& f, const MultiPoly& m_sum) {
  const MultiPoly a = MultiPoly::variable(1, 0);
  const MultiPoly lo = MultiPoly::constant(1, 0);
  const MultiPoly hi = MultiPoly::constant(1, Rational(1, 3));
  const Rational lhs_int = integrate_once(a * a * f.poly, 0, lo, hi).constant_term();
  const SymbolicReal lhs = SymbolicReal(Rational(1, 2), 1) * f.prefactor * lhs_int;
  const Rational rhs_int = integrate_once(m_sum, 0, lo, hi).constant_term();
  const SymbolicReal rhs = SymbolicReal(64 * rhs_int, 6);
  return lhs == rhs;
}

Rational radial_moment(unsigned exponent) {
  const MultiPoly a = MultiPoly::variable(1, 0);
  const MultiPoly one = MultiPoly::constant(1, 1);
  const MultiPoly integrand = a * a * (one - a * a).pow(exponent);
  return integrate_once(integrand, 0, MultiPoly::constant(1, 0), one).constant_term();
}

SymbolicReal conditioned_volume_at_zero() {
  return state_space_volume_hs(4) / SymbolicReal(radial_moment(6) / 2, 1);
}

SymbolicReal conditioned_volume(const Rational& a) {
  if (a < 0 || a >= 1) throw std::domain_error("conditioned_volume: need 0 <= a < 1");
  return conditioned_volume_at_zero() * pow(Rational(1 - a * a), 6);
}

bool radial_volume_check(const SymbolicReal& vol_d0, unsigned exponent) {
  return SymbolicReal(radial_moment(exponent) / 2, 1) * vol_d0 == state_space_volume_hs(4);
}

Rational separability_probability(const FPoly& f) {
  const SymbolicReal ratio = evaluate_f(f, 0) / conditioned_volume_at_zero();
  if (ratio.pi_power() != 0 || ratio.radicand() != 1)
    throw StructuralError("separability_probability: ratio is not rational");
  return ratio.coeff();
}

Rational separability_probability(Decomposition d) { return separability_probability(compute_f(d)); }

}  // namespace qsep
