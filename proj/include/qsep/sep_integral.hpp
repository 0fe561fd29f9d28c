#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsep/dh_density.hpp"

namespace qsep {

// Integrands in this module are polynomials of arity 4 in (x, t1, t2, t3).
inline constexpr std::size_t kVarX = 0;
inline constexpr std::size_t kVarT1 = 1;
inline constexpr std::size_t kVarT2 = 2;
inline constexpr std::size_t kVarT3 = 3;
inline constexpr std::size_t kSepArity = 4;

// λ̂ ↔ t. `forward` gives λ̂_k as affine polynomials in (t1, t2, t3, t4) and
// `inverse` gives t_k in (λ̂1, ..., λ̂4); both have arity 4 with their own
// variable order. `jacobian` is det ∂(λ̂1,λ̂2,λ̂3)/∂(t1,t2,t3) after t4 is
// eliminated by t1+t2+t3+t4 = 1.
struct ChangeOfVariables {
  std::array<MultiPoly, 4> forward;
  std::array<MultiPoly, 4> inverse;
  Rational jacobian;
};

ChangeOfVariables lambda_t_change_of_variables();

// forward ∘ inverse and inverse ∘ forward are both the identity.
bool change_of_variables_roundtrip(const ChangeOfVariables& cov);

// λ̂_k(t) with t4 = 1 - t1 - t2 - t3, in (x, t1, t2, t3).
std::array<MultiPoly, 4> lambda_hat_in_t();

// c3, c2 and the signed quantity t1 - t3/3 whose absolute value is c1,
// derived from λ̂(t); arity kSepArity.
struct CInT {
  MultiPoly c3;
  MultiPoly c2;
  MultiPoly c1_signed;
};

CInT c_coeffs_in_t();

// t1 t2 t3 (2t1+t2)(3t2+2t3)(6t1+3t2+2t3) / 432, arity kSepArity.
MultiPoly vandermonde_t();

// V4(λ̂(t)) expanded directly from the change of variables.
MultiPoly vandermonde_of_lambda_t();

// Sign choice for c1 = |t1 - t3/3|: `positive` means t1 - t3/3 >= x.
enum class C1Branch { positive, negative };

// Pullback of I_k(x|λ̂) under t, i.e. marginal_term_generic(k) with c(t)
// substituted. For k = 2, 3 the branch does not matter.
MultiPoly i_tilde(int k, C1Branch branch = C1Branch::positive);

enum class RegionName { R, R1a, R1b, R2a, R2b, R2ab, R3a, R3b, Delta3 };

std::string to_string(RegionName name);

// A region is a union of cells with disjoint interiors; each cell is an
// iterated-integration box listed innermost bound first.
struct TRegion {
  RegionName name;
  std::vector<std::vector<IntegrationBound>> cells;
};

TRegion region(RegionName name);

// Exact ∫_region p dt1 dt2 dt3; result depends on x only (arity kSepArity).
MultiPoly integrate_over(const TRegion& r, const MultiPoly& p);

struct RegionCheck {
  bool bounds_ordered = true;
  Rational volume_at_sixth;
  std::string detail;
};

// Checks lower <= upper on nested sample points for x in {1/100, 1/6, 33/100}
// and computes the region volume at x = 1/6.
RegionCheck validate_region(const TRegion& r);

struct MPart {
  RegionName region;
  int sign;
  MultiPoly value;  // arity 1 in x
};

struct MResult {
  std::vector<MPart> parts;
  MultiPoly total;  // arity 1 in x
};

enum class Decomposition {
  // M2 = Δ3 + R2ab - R2a - R2b, M3 = Δ3 - R3a - R3b.
  standard,
  // M2 = R - R2b + R2ab, M3 = R - R3b.
  via_r,
};

// M_k(x) = (2/4!) ∫ V(t) Ĩ_k(x|t) dt over the k-th region, for x in (0, 1/3).
MResult compute_M(int k, Decomposition d = Decomposition::standard);

// f(a) = prefactor · poly(a) with poly primitive over the integers and a
// positive constant term.
struct FPoly {
  SymbolicReal prefactor;
  MultiPoly poly;  // arity 1 in a
};

// f(a) = (2/π) a^-2 (2π)^6 (M1+M2+M3)(a). Throws StructuralError if the
// constant or linear coefficient of M1+M2+M3 is nonzero.
FPoly compute_f(Decomposition d = Decomposition::standard);
FPoly f_from_m_sum(const MultiPoly& m_sum);

SymbolicReal evaluate_f(const FPoly& f, const Rational& a);

// (π/2) ∫_0^{1/3} a² f(a) da == (2π)^6 ∫_0^{1/3} (M1+M2+M3) dx, exactly.
bool f_consistency_check(const FPoly& f, const MultiPoly& m_sum);

// ∫_0^1 a² (1 - a²)^exponent da
Rational radial_moment(unsigned exponent);

// vol(D) / ((π/2) ∫_0^1 a² (1-a²)^6 da), with vol(D) the two-qubit
// state-space volume.
SymbolicReal conditioned_volume_at_zero();

// vol(D^0) (1 - a²)^6 for 0 <= a < 1.
SymbolicReal conditioned_volume(const Rational& a);

// (π/2) ∫_0^1 a² vol_d0 (1-a²)^exponent da == state_space_volume_hs(4).
bool radial_volume_check(const SymbolicReal& vol_d0, unsigned exponent = 6);

// f(0) / vol(D^0); throws if π does not cancel.
Rational separability_probability(Decomposition d = Decomposition::standard);
Rational separability_probability(const FPoly& f);

}  // namespace qsep
