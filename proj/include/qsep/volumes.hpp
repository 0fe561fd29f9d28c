#pragma once

#include <span>
#include <vector>

#include "qsep/exactmath/symbolic_real.hpp"

namespace qsep {

// Eigenvalues of a density matrix: descending, nonnegative, summing to 1.
class Spectrum {
 public:
  explicit Spectrum(std::vector<Rational> entries);

  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  // Strictly descending.
  bool is_simple() const;

 private:
  std::vector<Rational> entries_;
};

// λ - (1/N, ..., 1/N): descending, summing to 0.
class CenteredSpectrum {
 public:
  explicit CenteredSpectrum(std::vector<Rational> entries);
  static CenteredSpectrum from(const Spectrum& lambda);

  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  bool is_simple() const;
  CenteredSpectrum scaled(const Rational& tau) const;

 private:
  std::vector<Rational> entries_;
};

inline constexpr unsigned kMaxVolumeDimension = 12;

// prod_{i<j} (x_i - x_j)
Rational vandermonde(std::span<const Rational> x);

// Hilbert-Schmidt volume of U(N)/T^N: (2π)^{N(N-1)/2} / prod_{k=1}^N Γ(k).
SymbolicReal flag_volume_hs(unsigned n, unsigned max_n = kMaxVolumeDimension);
// Euclidean volume of U(N)/T^N: π^{N(N-1)/2} / prod Γ(k).
SymbolicReal flag_volume_euclid(unsigned n, unsigned max_n = kMaxVolumeDimension);

struct OrbitVolume {
  SymbolicReal volume;
  bool degenerate = false;
};

// V_N(x)^2 vol_HS(U(N)/T^N). A repeated eigenvalue gives volume 0 with the
// degenerate flag set.
OrbitVolume adjoint_orbit_volume_hs(std::span<const Rational> x);

// √N (2π)^{N(N-1)/2} prod Γ(k) / Γ(N^2)
SymbolicReal state_space_volume_hs(unsigned n, unsigned max_n = kMaxVolumeDimension);

// ∫ over the ordered probability simplex of V_N(λ)^2 = (prod Γ(k))^2 / Γ(N^2)
Rational simplex_vandermonde_integral(unsigned n, unsigned max_n = kMaxVolumeDimension);

// V_N(λ̂) vol_HS(U(N)/T^N); zero on a degenerate spectrum.
SymbolicReal coadjoint_symplectic_volume(const CenteredSpectrum& lambda_hat);

// vol_HS(O) == V_N(λ̂) vol_symp(O), checked exactly.
bool hs_symp_relation_check(const CenteredSpectrum& lambda_hat);

}  // namespace qsep
