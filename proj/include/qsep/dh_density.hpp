#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsep/exactmath/laurent.hpp"
#include "qsep/exactmath/multipoly.hpp"
#include "qsep/volumes.hpp"

namespace qsep {

// ---------------------------------------------------------------------------
// Weights and chambers of the SU(2)xSU(2) action on a regular SU(4) orbit.
// Coordinates on the torus dual are (r, s); polynomials in this module use
// variable 0 = r and variable 1 = s.
// ---------------------------------------------------------------------------

struct Weight {
  int r = 0;
  int s = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
};

// -π(α) for the six positive roots α = e_i - e_j of SU(4), where
// π(h) = (h1 + h2 - h3 - h4, h1 + h3 - h2 - h4). Multiset of size 6.
std::vector<Weight> weights_from_roots();

// The four distinct weights, in the order (-2,2), (-2,0), (-2,-2), (0,-2).
std::vector<Weight> distinct_weights();

enum class ChamberLabel { C0, C1, C2, C3 };

std::string to_string(ChamberLabel label);

// a*r + b*s >= 0
struct HalfPlane {
  int a = 0;
  int b = 0;
};

struct Chamber {
  ChamberLabel label;
  // Empty for C0, which is the complement of the other three.
  std::vector<HalfPlane> inequalities;
};

Chamber chamber(ChamberLabel label);

// Closed chambers with priority C1 > C2 > C3; everything else is C0.
ChamberLabel locate_chamber(const Rational& r, const Rational& s);
ChamberLabel locate_chamber(double r, double s);

struct DensityPiece {
  Chamber chamber;
  MultiPoly poly;  // arity 2 in (r, s)
};

class PiecewiseDensity {
 public:
  explicit PiecewiseDensity(std::vector<DensityPiece> pieces);

  const std::vector<DensityPiece>& pieces() const { return pieces_; }
  const MultiPoly& piece(ChamberLabel label) const;

  Rational evaluate(const Rational& r, const Rational& s) const;
  double evaluate(double r, double s) const;

 private:
  std::vector<DensityPiece> pieces_;
};

// p(r,s): (r+s)^2/64 on C1, (r^2+2rs-s^2)/64 on C2, r^2/32 on C3, 0 on C0.
PiecewiseDensity convolution_density_closed();

// One wall crossing of the jump-formula walk.
struct WallCrossing {
  ChamberLabel from;
  ChamberLabel to;
  std::array<int, 2> normal;  // ξ
  Weight on_wall;
  Rational prefactor;         // 1 / |det(ω, ξ/|ξ|^2)|
  MultiPoly jump;             // p_to - p_from
};

// The walls W01 (r+s=0), W12 (s=0), W23 (r-s=0) in walk order C0→C1→C2→C3.
std::vector<WallCrossing> jump_walk();

// Re-derives p(r,s) starting from p = 0 on C0 and adding residue jumps.
PiecewiseDensity convolution_density_jump();

// Density of the push-forward of Lebesgue measure on R^4_+ along the 2x4
// weight matrix A, computed as area of the fiber polygon {u >= 0 : Au = y}
// over sqrt(det(A A^T)). Independent of the chamber formulas.
double fiber_polytope_density(double r, double s);

// ---------------------------------------------------------------------------
// Non-Abelian side: c-coefficients, moment polytope, marginal density.
// ---------------------------------------------------------------------------

struct CCoeffs {
  Rational c1;
  Rational c2;
  Rational c3;
};

// c3 = 2(λ̂1+λ̂2), c2 = 2(λ̂1+λ̂3), c1 = 2|λ̂1+λ̂4|; requires N = 4.
CCoeffs c_coeffs(const CenteredSpectrum& lambda_hat);

// {(x,y) in [0,c3]^2 : x+y <= c2+c3, |x-y| <= c3-c1}
class MomentPolytope2Q {
 public:
  explicit MomentPolytope2Q(CCoeffs c);

  const CCoeffs& c() const { return c_; }
  bool contains(const Rational& x, const Rational& y) const;
  bool contains(double x, double y, double tol = 0.0) const;

 private:
  CCoeffs c_;
};

MomentPolytope2Q moment_polytope(const CCoeffs& c);

// Marginal pair (λmin(ρ_A), λmin(ρ_B)) is compatible with the global
// spectrum iff (1 - 2λmin_A, 1 - 2λmin_B) lies in the moment polytope.
bool bravyi_compatible(const Spectrum& global, const Rational& lam_min_a, const Rational& lam_min_b);
bool bravyi_compatible(const Spectrum& global, double lam_min_a, double lam_min_b, double tol = 1e-12);

// Piecewise polynomial in one variable on consecutive closed intervals.
struct Piece1D {
  Rational lower;
  Rational upper;
  MultiPoly poly;  // arity 1
};

class PiecewisePoly1D {
 public:
  explicit PiecewisePoly1D(std::vector<Piece1D> pieces);

  const std::vector<Piece1D>& pieces() const { return pieces_; }
  std::vector<Rational> breakpoints() const;
  // Zero outside the support; at an interior breakpoint the left piece wins.
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  Rational integral() const;
  // ∫_a^b, exact, for a <= b.
  Rational integral(const Rational& a, const Rational& b) const;

 private:
  std::vector<Piece1D> pieces_;
};

// Generic marginal terms as polynomials in (x, c1, c2, c3):
//   k=1: (c3^2-c2^2)/64 x (x-c1)^2,  k=2: (c1^2-c3^2)/64 x (x-c2)^2,
//   k=3: (c2^2-c1^2)/64 x (x-c3)^2.
MultiPoly marginal_term_generic(int k);

// I(x|λ̂) = I1 χ[0,c1] + I2 χ[0,c2] + I3 χ[0,c3] on the grid {0,c1,c2,c3}.
PiecewisePoly1D marginal_density_I(const CenteredSpectrum& lambda_hat);

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_tolerance() const { return achieved_; }

 private:
  double achieved_;
};

// One signed shift δ_(a,b) of p in the nine-term sum.
struct ShiftedCopy {
  int sign;
  Rational a;
  Rational b;
};

std::vector<ShiftedCopy> nine_shifts(const CCoeffs& c);

// ∫_0^∞ x y Σ sign·p(x - a, y - b) dy by adaptive Simpson, subdivided at the
// shifted chamber walls.
double marginal_density_oracle(const CenteredSpectrum& lambda_hat, double x, double abs_tol = 1e-9);

}  // namespace qsep
