#include <algorithm>
#include <cmath>

#include "qsep/dh_density.hpp"

namespace qsep {

namespace {

constexpr std::size_t kR = 0;
constexpr std::size_t kS = 1;

MultiPoly r_var() { return MultiPoly::variable(2, kR); }
MultiPoly s_var() { return MultiPoly::variable(2, kS); }

template <class T>
bool satisfies(const Chamber& c, const T& r, const T& s) {
  return std::all_of(c.inequalities.begin(), c.inequalities.end(),
                     [&](const HalfPlane& h) { return h.a * r + h.b * s >= 0; });
}

template <class T>
ChamberLabel locate(const T& r, const T& s) {
  for (auto label : {ChamberLabel::C1, ChamberLabel::C2, ChamberLabel::C3})
    if (satisfies(chamber(label), r, s)) return label;
  return ChamberLabel::C0;
}

// A point strictly inside each chamber, used to orient walls.
std::array<int, 2> interior_point(ChamberLabel label) {
  switch (label) {
    case ChamberLabel::C0: return {1, 1};
    case ChamberLabel::C1: return {-2, 1};
    case ChamberLabel::C2: return {-2, -1};
    case ChamberLabel::C3: return {-1, -2};
  }
  return {0, 0};
}

}  // namespace

std::vector<Weight> weights_from_roots() {
  std::vector<Weight> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::array<int, 4> alpha{};
      alpha[i] = 1;
      alpha[j] = -1;
      const int pr = alpha[0] + alpha[1] - alpha[2] - alpha[3];
      const int ps = alpha[0] + alpha[2] - alpha[1] - alpha[3];
      out.push_back({-pr, -ps});
    }
  }
  return out;
}

std::vector<Weight> distinct_weights() { return {{-2, 2}, {-2, 0}, {-2, -2}, {0, -2}}; }

std::string to_string(ChamberLabel label) {
  switch (label) {
    case ChamberLabel::C0: return "C0";
    case ChamberLabel::C1: return "C1";
    case ChamberLabel::C2: return "C2";
    case ChamberLabel::C3: return "C3";
  }
  return "?";
}

Chamber chamber(ChamberLabel label) {
  switch (label) {
    case ChamberLabel::C0: return {label, {}};
    case ChamberLabel::C1: return {label, {{0, 1}, {-1, -1}}};   // 0 <= s <= -r
    case ChamberLabel::C2: return {label, {{-1, 1}, {0, -1}}};   // r <= s <= 0
    case ChamberLabel::C3: return {label, {{1, -1}, {-1, 0}}};   // s <= r <= 0
  }
  return {label, {}};
}

ChamberLabel locate_chamber(const Rational& r, const Rational& s) { return locate(r, s); }
ChamberLabel locate_chamber(double r, double s) { return locate(r, s); }

PiecewiseDensity::PiecewiseDensity(std::vector<DensityPiece> pieces) : pieces_(std::move(pieces)) {
  for (const auto& p : pieces_)
    if (p.poly.arity() != 2) throw StructuralError("PiecewiseDensity: pieces must have arity 2");
}

const MultiPoly& PiecewiseDensity::piece(ChamberLabel label) const {
  for (const auto& p : pieces_)
    if (p.chamber.label == label) return p.poly;
  throw std::out_of_range("PiecewiseDensity: no piece for chamber " + to_string(label));
}

Rational PiecewiseDensity::evaluate(const Rational& r, const Rational& s) const {
  const std::array<Rational, 2> pt{r, s};
  return piece(locate_chamber(r, s)).evaluate(std::span<const Rational>(pt));
}

double PiecewiseDensity::evaluate(double r, double s) const {
  const std::array<double, 2> pt{r, s};
  return piece(locate_chamber(r, s)).evaluate(std::span<const double>(pt));
}

PiecewiseDensity convolution_density_closed() {
  const MultiPoly r = r_var();
  const MultiPoly s = s_var();
  const Rational sixty_fourth(1, 64);
  return PiecewiseDensity({
      {chamber(ChamberLabel::C0), MultiPoly(2)},
      {chamber(ChamberLabel::C1), (r + s).pow(2) * sixty_fourth},
      {chamber(ChamberLabel::C2), (r * r + Rational(2) * r * s - s * s) * sixty_fourth},
      {chamber(ChamberLabel::C3), r * r * Rational(1, 32)},
  });
}

std::vector<WallCrossing> jump_walk() {
  struct WallSpec {
    ChamberLabel from, to;
    std::array<int, 2> normal;
    Weight on_wall;
  };
  const std::array<WallSpec, 3> walls{{
      {ChamberLabel::C0, ChamberLabel::C1, {-1, -1}, {-2, 2}},   // r + s = 0
      {ChamberLabel::C1, ChamberLabel::C2, {0, -1}, {-2, 0}},    // s = 0
      {ChamberLabel::C2, ChamberLabel::C3, {1, -1}, {-2, -2}},   // r - s = 0
  }};

  std::vector<WallCrossing> out;
  for (const auto& w : walls) {
    const auto [xr, xs] = w.normal;
    if (w.on_wall.r * xr + w.on_wall.s * xs != 0)
      throw StructuralError("jump_walk: designated weight does not lie on the wall");

    std::vector<LinearFactor> factors;
    for (const Weight& om : distinct_weights()) {
      if (om == w.on_wall) continue;
      // <ω, x + zξ> at x = 0.
      factors.push_back({Rational(0), Rational(om.r * xr + om.s * xs)});
    }
    const MultiPoly exponent = r_var() * Rational(xr) + s_var() * Rational(xs);
    const LaurentSeries series = laurent_expand(exponent, factors);
    if (series.min_degree() != -static_cast<int>(factors.size()))
      throw StructuralError("jump_walk: pole order differs from off-wall weight count");

    // Wall measure normalization: 1/|det(ω, ξ/|ξ|^2)|.
    const Rational norm2(xr * xr + xs * xs);
    const Rational det = (Rational(w.on_wall.r) * Rational(xs) - Rational(w.on_wall.s) * Rational(xr)) / norm2;
    const Rational prefactor = 1 / abs(det);

    MultiPoly jump = series.residue() * prefactor;
    // Pol(...) = v(C+) - v(C-) with C+ on the side where <μ, ξ> > 0.
    const auto [pr, ps] = interior_point(w.to);
    if (pr * xr + ps * xs < 0) jump = -jump;
    out.push_back({w.from, w.to, w.normal, w.on_wall, prefactor, std::move(jump)});
  }
  return out;
}

PiecewiseDensity convolution_density_jump() {
  std::vector<DensityPiece> pieces{{chamber(ChamberLabel::C0), MultiPoly(2)}};
  for (const auto& crossing : jump_walk()) {
    if (pieces.back().chamber.label != crossing.from)
      throw StructuralError("jump walk out of order");
    MultiPoly next = pieces.back().poly + crossing.jump;
    pieces.push_back({chamber(crossing.to), std::move(next)});
  }
  return PiecewiseDensity(std::move(pieces));
}

}  // namespace qsep
