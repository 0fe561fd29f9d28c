#include <cmath>

#include "qsep/sampling.hpp"

namespace qsep {

namespace {

ComplexMatrix marginal_target(double a) { return (pauli(0) + a * pauli(3)) / 2.0; }

}  // namespace

HitAndRunSampler::HitAndRunSampler(double a, const SamplerConfig& config, std::uint64_t chain)
    : a_(a), config_(config), rng_(make_stream(config.seed, chain)) {
  if (!(a >= 0 && a < 1)) throw std::domain_error("HitAndRunSampler: need 0 <= a < 1");
  config_.validate();
  rho_ = kron(marginal_target(a), pauli(0) / 2.0);
  for (int j = 1; j <= 3; ++j) basis_.push_back(kron(pauli(0), pauli(j)) / 2.0);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) basis_.push_back(kron(pauli(i), pauli(j)) / 2.0);
}

void HitAndRunSampler::step() {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  Eigen::LLT<ComplexMatrix> llt(rho_);
  if (llt.info() != Eigen::Success) throw std::runtime_error("HitAndRunSampler: state left the interior");
  const ComplexMatrix l = llt.matrixL();

  for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    std::array<double, 12> u{};
    double norm2 = 0;
    for (double& x : u) {
      x = normal(rng_);
      norm2 += x * x;
    }
    const double inv = 1 / std::sqrt(norm2);
    ComplexMatrix d = ComplexMatrix::Zero(4, 4);
    for (std::size_t k = 0; k < u.size(); ++k) d += (u[k] * inv) * basis_[k];

    // ρ + tD ⪰ 0  ⟺  I + t L⁻¹ D L⁻† ⪰ 0.
    const ComplexMatrix y = l.triangularView<Eigen::Lower>().solve(d);
    ComplexMatrix m = l.triangularView<Eigen::Lower>().solve(ComplexMatrix(y.adjoint()));
    m = (m + m.adjoint()) / 2.0;
    const RealVector mu = hermitian_eigs(m);
    const double mu_max = mu(0), mu_min = mu(mu.size() - 1);
    if (!(mu_max > 0 && mu_min < 0) || !std::isfinite(mu_max) || !std::isfinite(mu_min)) {
      ++redraws_;
      continue;
    }
    const double lo = -1 / mu_max, hi = -1 / mu_min;
    const double t = lo + (hi - lo) * uniform(rng_);
    rho_ += t * d;
    rho_ = (rho_ + rho_.adjoint()) / 2.0;
    ++steps_;
    return;
  }
  throw std::runtime_error("HitAndRunSampler: chord solve failed after repeated redraws");
}

DensityMatrix HitAndRunSampler::next() {
  if (!burned_) {
    for (std::int64_t k = 0; k < config_.burn_in; ++k) step();
    burned_ = true;
  }
  for (std::int64_t k = 0; k < config_.thinning; ++k) step();
  return DensityMatrix::unchecked(rho_);
}

ConditionedStudy conditioned_study(double a, const SamplerConfig& config) {
  HitAndRunSampler sampler(a, config);
  const ComplexMatrix target = marginal_target(a);
  ConditionedStudy out;
  std::int64_t agree = 0;
  for (std::int64_t i = 0; i < config.count; ++i) {
    const DensityMatrix rho = sampler.next();
    const double m = ppt_min_eig(rho);
    const double lmax = hermitian_eigs(rho.matrix())(0);
    const bool ppt = m >= -config.tolerance;
    if (ppt) ++out.ppt_count;
    out.max_marginal_error =
        std::max(out.max_marginal_error, (partial_trace(rho.matrix(), 1) - target).cwiseAbs().maxCoeff());

    const bool band = std::abs(lmax - 0.5) < kHalfBoundBand || std::abs(m) < config.tolerance;
    if (band) {
      ++out.band_count;
      continue;
    }
    if (ppt == (lmax <= 0.5))
      ++agree;
    else
      ++out.disagreements;
  }
  out.n = config.count;
  out.fraction = static_cast<double>(out.ppt_count) / static_cast<double>(out.n);
  const std::int64_t judged = out.n - out.band_count;
  out.agreement_halfbound = judged > 0 ? static_cast<double>(agree) / static_cast<double>(judged) : 1.0;
  return out;
}

}  // namespace qsep
