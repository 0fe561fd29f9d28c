#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qsep/dh_density.hpp"

namespace qsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// One reproducible random stream per (seed, stream id).
using Rng = std::mt19937_64;
Rng make_stream(std::uint64_t seed, std::uint64_t stream_id);

struct DensityTolerance {
  double hermitian = 1e-12;
  double trace = 1e-12;
  double min_eigenvalue = -1e-10;
};

class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Hermitian, unit trace, PSD within tolerance; validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, const DensityTolerance& tol = {});
  // Skips validation for matrices that are valid by construction.
  static DensityMatrix unchecked(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  struct NoCheck {};
  DensityMatrix(ComplexMatrix m, NoCheck) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

// Throws std::invalid_argument when ‖M - M†‖_max exceeds this.
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiTolerance = 1e-13;

struct Eigensystem {
  RealVector values;     // descending
  ComplexMatrix vectors; // columns match values
};

RealVector hermitian_eigs(const ComplexMatrix& m);
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

// ρ on C²⊗C², index 2i + k for |i⟩⊗|k⟩. keep = 1 traces out the second
// factor, keep = 2 the first.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int keep);
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

// Transposes each 2x2 block, i.e. the second tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& rho);

double ppt_min_eig(const DensityMatrix& rho);
bool is_ppt(const DensityMatrix& rho, double tol = 1e-10);
bool is_half_bounded(const DensityMatrix& rho, double tol = 1e-10);

// 1 - 2 λmin(Tr_2 ρ)
double marginal_gap(const DensityMatrix& rho);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix pauli(int k);  // 0 = I, 1..3 = σx, σy, σz

// ---------------------------------------------------------------------------
// Random states
// ---------------------------------------------------------------------------

ComplexMatrix ginibre(int n, Rng& rng);
DensityMatrix hs_random_state(int n, Rng& rng);
ComplexMatrix haar_unitary(int n, Rng& rng);
// U diag(λ) U† with U Haar.
DensityMatrix sample_fixed_spectrum(const std::vector<double>& lambda, Rng& rng);

// ---------------------------------------------------------------------------
// Estimators
// ---------------------------------------------------------------------------

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::int64_t count = 1000;
  std::int64_t burn_in = 1000;
  std::int64_t thinning = 10;
  double tolerance = 1e-10;

  // count >= 1, burn_in >= 0, thinning >= 1, tolerance >= 0.
  void validate() const;
};

// Samples are grouped into blocks of this many indices, each with its own
// stream, so results do not depend on the thread count.
inline constexpr std::int64_t kSampleBlock = 4096;

struct SepEstimate {
  std::int64_t n = 0;
  std::int64_t ppt_count = 0;
  double fraction = 0;
  double std_error = 0;
  std::int64_t indeterminate = 0;  // |min eig of ρ^Γ| < tolerance
};

SepEstimate estimate_sep_prob(const SamplerConfig& config, unsigned threads = 1);

struct MarginalHistogram {
  std::vector<double> edges;     // bins + 1
  std::vector<std::int64_t> counts;
  std::vector<double> empirical; // counts / (n · width)
  std::vector<double> analytic;  // bin average of I / (V4/12), exact then rounded
  double sup_norm = 0;
  std::int64_t outside_support = 0;
  std::int64_t polytope_violations = 0;
};

// Histogram of marginal_gap over Haar-orbit samples of diag(λ) on [0, c3].
MarginalHistogram marginal_histogram(const Spectrum& lambda, std::int64_t count, int bins,
                                     std::uint64_t seed, unsigned threads = 1);

// Hit-and-run on D^a = {ρ ⪰ 0 : Tr_2 ρ = (I + aσz)/2}.
class HitAndRunSampler {
 public:
  static constexpr int kMaxRedraws = 100;

  HitAndRunSampler(double a, const SamplerConfig& config, std::uint64_t chain = 0);

  // Next emitted state (after burn-in, every `thinning` steps).
  DensityMatrix next();
  const ComplexMatrix& current() const { return rho_; }
  std::int64_t steps() const { return steps_; }
  std::int64_t redraws() const { return redraws_; }

 private:
  void step();

  double a_;
  SamplerConfig config_;
  Rng rng_;
  ComplexMatrix rho_;
  std::vector<ComplexMatrix> basis_;
  std::int64_t steps_ = 0;
  std::int64_t redraws_ = 0;
  bool burned_ = false;
};

struct ConditionedStudy {
  std::int64_t n = 0;
  std::int64_t ppt_count = 0;
  double fraction = 0;
  // Among samples outside the band, the share where is_ppt == is_half_bounded.
  double agreement_halfbound = 0;
  std::int64_t disagreements = 0;
  // |λmax - 1/2| < 1e-9 or |min eig of ρ^Γ| < tolerance.
  std::int64_t band_count = 0;
  double max_marginal_error = 0;
};

inline constexpr double kHalfBoundBand = 1e-9;

ConditionedStudy conditioned_study(double a, const SamplerConfig& config);

}  // namespace qsep
