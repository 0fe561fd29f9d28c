#include <algorithm>
#include <cmath>
#include <functional>

#include "qsep/dh_density.hpp"

namespace qsep {

namespace {

constexpr std::size_t kX = 0;

MultiPoly x_var() { return MultiPoly::variable(1, kX); }

const Piece1D* find_piece(const std::vector<Piece1D>& pieces, const Rational& x) {
  for (const auto& p : pieces)
    if (p.lower <= x && x <= p.upper) return &p;
  return nullptr;
}

// Closed-form p(r, s) in double precision; avoids re-walking the exact pieces
// inside the quadrature loop.
double p_double(double r, double s) {
  if (0 <= s && s <= -r) return (r + s) * (r + s) / 64;
  if (r <= s && s <= 0) return (r * r + 2 * r * s - s * s) / 64;
  if (s <= r && r <= 0) return r * r / 32;
  return 0;
}

struct SimpsonState {
  const std::function<double(double)>& f;
  double worst = 0;
  bool failed = false;
};

double simpson(SimpsonState& st, double a, double b, double fa, double fm, double fb, double whole,
               double tol, int depth) {
  const double m = (a + b) / 2;
  const double lm = (a + m) / 2, rm = (m + b) / 2;
  const double flm = st.f(lm), frm = st.f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double err = left + right - whole;
  if (std::abs(err) <= 15 * tol) return left + right + err / 15;
  if (depth <= 0) {
    st.failed = true;
    st.worst = std::max(st.worst, std::abs(err) / 15);
    return left + right + err / 15;
  }
  return simpson(st, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(st, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

PiecewisePoly1D::PiecewisePoly1D(std::vector<Piece1D> pieces) : pieces_(std::move(pieces)) {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (p.poly.arity() != 1) throw StructuralError("PiecewisePoly1D: pieces must have arity 1");
    if (p.upper < p.lower) throw std::invalid_argument("PiecewisePoly1D: empty interval");
    if (i > 0 && pieces_[i - 1].upper != p.lower)
      throw std::invalid_argument("PiecewisePoly1D: intervals must be consecutive");
  }
}

std::vector<Rational> PiecewisePoly1D::breakpoints() const {
  std::vector<Rational> out;
  if (pieces_.empty()) return out;
  out.push_back(pieces_.front().lower);
  for (const auto& p : pieces_) out.push_back(p.upper);
  return out;
}

Rational PiecewisePoly1D::evaluate(const Rational& x) const {
  const Piece1D* p = find_piece(pieces_, x);
  if (!p) return 0;
  const std::array<Rational, 1> pt{x};
  return p->poly.evaluate(std::span<const Rational>(pt));
}

double PiecewisePoly1D::evaluate(double x) const {
  for (const auto& p : pieces_) {
    if (to_double(p.lower) <= x && x <= to_double(p.upper)) {
      const std::array<double, 1> pt{x};
      return p.poly.evaluate(std::span<const double>(pt));
    }
  }
  return 0.0;
}

Rational PiecewisePoly1D::integral() const {
  if (pieces_.empty()) return 0;
  return integral(pieces_.front().lower, pieces_.back().upper);
}

Rational PiecewisePoly1D::integral(const Rational& a, const Rational& b) const {
  if (b < a) throw std::invalid_argument("PiecewisePoly1D::integral: need a <= b");
  Rational total = 0;
  for (const auto& p : pieces_) {
    const Rational lo = std::max(a, p.lower);
    const Rational hi = std::min(b, p.upper);
    if (hi <= lo) continue;
    const MultiPoly v = integrate_once(p.poly, kX, MultiPoly::constant(1, lo), MultiPoly::constant(1, hi));
    total += v.constant_term();
  }
  return total;
}

MultiPoly marginal_term_generic(int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("marginal_term_generic: k must be 1, 2 or 3");
  const MultiPoly x = MultiPoly::variable(4, 0);
  const std::array<MultiPoly, 3> c{MultiPoly::variable(4, 1), MultiPoly::variable(4, 2),
                                   MultiPoly::variable(4, 3)};
  // (c_{k+2}^2 - c_{k+1}^2)/64 · x (x - c_k)^2, indices cyclic in {1,2,3}.
  const MultiPoly& ck = c[k - 1];
  const MultiPoly& cp = c[(k + 1) % 3];
  const MultiPoly& cm = c[k % 3];
  return Rational(1, 64) * (cp * cp - cm * cm) * x * (x - ck).pow(2);
}

PiecewisePoly1D marginal_density_I(const CenteredSpectrum& lambda_hat) {
  const CCoeffs c = c_coeffs(lambda_hat);
  const std::array<Rational, 3> cv{c.c1, c.c2, c.c3};
  std::array<MultiPoly, 3> terms;
  const std::array<std::size_t, 4> to_x{0, 0, 0, 0};
  for (int k = 1; k <= 3; ++k) {
    MultiPoly t = marginal_term_generic(k);
    for (std::size_t v = 1; v <= 3; ++v) t = substitute(t, v, MultiPoly::constant(4, cv[v - 1]));
    terms[k - 1] = t.remap(1, to_x);
  }

  std::vector<Piece1D> pieces;
  Rational lo = 0;
  for (int k = 0; k < 3; ++k) {
    const Rational hi = cv[k];
    if (hi > lo) {
      MultiPoly sum(1);
      for (int j = k; j < 3; ++j) sum += terms[j];
      pieces.push_back({lo, hi, std::move(sum)});
      lo = hi;
    }
  }
  return PiecewisePoly1D(std::move(pieces));
}

std::vector<ShiftedCopy> nine_shifts(const CCoeffs& c) {
  return {
      {+1, c.c1, c.c3}, {-1, c.c1, c.c2}, {-1, c.c2, c.c3},
      {+1, c.c2, c.c1}, {+1, c.c2, -c.c1}, {+1, c.c3, c.c2},
      {+1, c.c3, -c.c2}, {-1, c.c3, c.c1}, {-1, c.c3, -c.c1},
  };
}

double marginal_density_oracle(const CenteredSpectrum& lambda_hat, double x, double abs_tol) {
  const CCoeffs c = c_coeffs(lambda_hat);
  if (x <= 0 || x >= to_double(c.c3)) return 0.0;

  struct Shift {
    int sign;
    double a, b;
  };
  std::vector<Shift> shifts;
  for (const auto& s : nine_shifts(c)) shifts.push_back({s.sign, to_double(s.a), to_double(s.b)});

  const std::function<double(double)> f = [&](double y) {
    double acc = 0;
    for (const auto& s : shifts) acc += s.sign * p_double(x - s.a, y - s.b);
    return x * y * acc;
  };

  // Break at every shifted wall so each panel sees a single polynomial.
  std::vector<double> cuts{0.0};
  double top = 0.0;
  for (const auto& s : shifts) {
    const double r = x - s.a;
    for (double y : {s.b, s.b - r, s.b + r})
      if (y > 0) cuts.push_back(y);
    top = std::max(top, s.b - r);
  }
  cuts.push_back(top);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  while (!cuts.empty() && cuts.back() > top) cuts.pop_back();

  SimpsonState st{f};
  double total = 0;
  const double panel_tol = abs_tol / std::max<std::size_t>(1, cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b <= a) continue;
    const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    total += simpson(st, a, b, fa, fm, fb, whole, panel_tol, 40);
  }
  if (st.failed)
    throw QuadratureError("marginal_density_oracle: adaptive Simpson did not converge", st.worst);
  return total;
}

}  // namespace qsep
