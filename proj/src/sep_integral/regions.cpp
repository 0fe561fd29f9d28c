#include <functional>
#include <sstream>

#include "qsep/sep_integral.hpp"

namespace qsep {

namespace {

// c0 + cx·x + c1·t1 + c2·t2 + c3·t3
MultiPoly aff(const Rational& c0, const Rational& cx, const Rational& c1, const Rational& c2,
              const Rational& c3) {
  const std::array<Rational, 4> coeffs{cx, c1, c2, c3};
  return MultiPoly::linear(c0, coeffs);
}

MultiPoly cst(const Rational& c) { return MultiPoly::constant(kSepArity, c); }

IntegrationBound bound(std::size_t var, MultiPoly lo, MultiPoly hi) {
  return {var, std::move(lo), std::move(hi)};
}

const Rational third(1, 3), ninth(1, 9), quarter(1, 4);

}  // namespace

std::string to_string(RegionName name) {
  switch (name) {
    case RegionName::R: return "R";
    case RegionName::R1a: return "R1a";
    case RegionName::R1b: return "R1b";
    case RegionName::R2a: return "R2a";
    case RegionName::R2b: return "R2b";
    case RegionName::R2ab: return "R2ab";
    case RegionName::R3a: return "R3a";
    case RegionName::R3b: return "R3b";
    case RegionName::Delta3: return "Delta3";
  }
  return "?";
}

TRegion region(RegionName name) {
  const MultiPoly zero = cst(0);
  const MultiPoly one = cst(1);
  // t1 <= 1 - t2 - t3 and 3t1 + t2 + t3/3 <= 1 written as upper bounds on t1.
  const MultiPoly simplex_t1 = aff(1, 0, 0, -1, -1);
  const MultiPoly r_t1 = aff(third, 0, 0, -third, -ninth);

  switch (name) {
    case RegionName::Delta3:
      return {name,
              {{bound(kVarT1, zero, simplex_t1), bound(kVarT2, zero, aff(1, 0, 0, 0, -1)),
                bound(kVarT3, zero, one)}}};
    case RegionName::R:
      // Split along t2 + 4t3/3 = 1, where the two upper bounds on t1 cross.
      return {name,
              {{bound(kVarT1, zero, r_t1), bound(kVarT2, zero, aff(1, 0, 0, 0, -4 * third)),
                bound(kVarT3, zero, cst(3 * quarter))},
               {bound(kVarT1, zero, simplex_t1),
                bound(kVarT2, aff(1, 0, 0, 0, -4 * third), aff(1, 0, 0, 0, -1)),
                bound(kVarT3, zero, cst(3 * quarter))},
               {bound(kVarT1, zero, simplex_t1), bound(kVarT2, zero, aff(1, 0, 0, 0, -1)),
                bound(kVarT3, cst(3 * quarter), one)}}};
    case RegionName::R1a:
      return {name,
              {{bound(kVarT1, aff(0, 1, 0, 0, third), r_t1),
                bound(kVarT2, zero, aff(1, -3, 0, 0, -4 * third)),
                bound(kVarT3, zero, aff(3 * quarter, -9 * quarter, 0, 0, 0))}}};
    case RegionName::R1b:
      return {name,
              {{bound(kVarT3, aff(0, 3, 3, 0, 0), aff(1, 0, -1, -1, 0)),
                bound(kVarT1, zero, aff(quarter, -3 * quarter, 0, -quarter, 0)),
                bound(kVarT2, zero, aff(1, -3, 0, 0, 0))}}};
    case RegionName::R2a:
    case RegionName::R3a:
      return {name,
              {{bound(kVarT1, r_t1, simplex_t1), bound(kVarT2, zero, aff(1, 0, 0, 0, -4 * third)),
                bound(kVarT3, zero, cst(3 * quarter))}}};
    case RegionName::R2b:
      return {name,
              {{bound(kVarT2, zero, aff(1, 0, -1, 0, -1)),
                bound(kVarT1, zero, aff(0, 1, 0, 0, -third)),
                bound(kVarT3, zero, aff(0, 3, 0, 0, 0))}}};
    case RegionName::R2ab:
      return {name,
              {{bound(kVarT2, aff(1, 0, -3, 0, -third), aff(1, 0, -1, 0, -1)),
                bound(kVarT1, aff(0, 0, 0, 0, third), aff(0, 1, 0, 0, -third)),
                bound(kVarT3, zero, aff(0, Rational(3, 2), 0, 0, 0))}}};
    case RegionName::R3b:
      return {name,
              {{bound(kVarT1, zero, aff(0, 1, 0, -1, -third)),
                bound(kVarT2, zero, aff(0, 1, 0, 0, -third)),
                bound(kVarT3, zero, aff(0, 3, 0, 0, 0))}}};
  }
  throw std::invalid_argument("region: unknown name");
}

MultiPoly integrate_over(const TRegion& r, const MultiPoly& p) {
  MultiPoly total(p.arity());
  for (const auto& cell : r.cells) total += iterated_integrate(p, cell);
  return total;
}

RegionCheck validate_region(const TRegion& r) {
  RegionCheck out;
  std::ostringstream detail;
  const std::array<Rational, 3> xs{Rational(1, 100), Rational(1, 6), Rational(33, 100)};
  const std::array<Rational, 3> fractions{Rational(0), Rational(1, 2), Rational(1)};

  for (std::size_t ci = 0; ci < r.cells.size(); ++ci) {
    const auto& cell = r.cells[ci];
    for (const Rational& x : xs) {
      std::array<Rational, kSepArity> point{x, 0, 0, 0};
      // Walk from the outermost bound inward.
      std::function<void(std::size_t)> walk = [&](std::size_t level) {
        if (level == 0) return;
        const auto& b = cell[level - 1];
        const Rational lo = b.lower.evaluate(std::span<const Rational>(point));
        const Rational hi = b.upper.evaluate(std::span<const Rational>(point));
        if (lo > hi) {
          out.bounds_ordered = false;
          detail << to_string(r.name) << " cell " << ci << ": lower > upper at x=" << to_string(x)
                 << " var " << b.var << "; ";
          return;
        }
        for (const Rational& f : fractions) {
          point[b.var] = lo + f * (hi - lo);
          walk(level - 1);
        }
        point[b.var] = 0;
      };
      walk(cell.size());
    }
  }

  const MultiPoly vol = integrate_over(r, MultiPoly::constant(kSepArity, 1));
  const std::array<Rational, kSepArity> at_sixth{Rational(1, 6), 0, 0, 0};
  out.volume_at_sixth = vol.evaluate(std::span<const Rational>(at_sixth));
  out.detail = detail.str();
  return out;
}

}  // namespace qsep
