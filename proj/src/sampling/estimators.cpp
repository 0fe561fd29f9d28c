#include <algorithm>
#include <cmath>
#include <thread>

#include "qsep/sampling.hpp"

namespace qsep {

namespace {

// Runs fn(block, begin, end, out) for every block of kSampleBlock indices and
// returns the per-block results in block order.
template <class Result, class Fn>
std::vector<Result> run_blocks(std::int64_t count, unsigned threads, Fn fn) {
  const std::int64_t nblocks = (count + kSampleBlock - 1) / kSampleBlock;
  std::vector<Result> results(static_cast<std::size_t>(nblocks));
  auto worker = [&](unsigned w, unsigned stride) {
    for (std::int64_t b = w; b < nblocks; b += stride) {
      const std::int64_t begin = b * kSampleBlock;
      const std::int64_t end = std::min(count, begin + kSampleBlock);
      fn(static_cast<std::uint64_t>(b), begin, end, results[static_cast<std::size_t>(b)]);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w, threads);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace

void SamplerConfig::validate() const {
  if (count < 1) throw std::invalid_argument("SamplerConfig: count must be >= 1");
  if (burn_in < 0) throw std::invalid_argument("SamplerConfig: burn_in must be >= 0");
  if (thinning < 1) throw std::invalid_argument("SamplerConfig: thinning must be >= 1");
  if (!(tolerance >= 0)) throw std::invalid_argument("SamplerConfig: tolerance must be >= 0");
}

SepEstimate estimate_sep_prob(const SamplerConfig& config, unsigned threads) {
  config.validate();
  if (config.count < 1000) throw std::invalid_argument("estimate_sep_prob: count must be >= 1000");

  struct Tally {
    std::int64_t ppt = 0;
    std::int64_t band = 0;
  };
  const auto tallies = run_blocks<Tally>(
      config.count, threads, [&](std::uint64_t block, std::int64_t begin, std::int64_t end, Tally& out) {
        Rng rng = make_stream(config.seed, block);
        for (std::int64_t i = begin; i < end; ++i) {
          const double m = ppt_min_eig(hs_random_state(4, rng));
          if (m >= -config.tolerance) ++out.ppt;
          if (std::abs(m) < config.tolerance) ++out.band;
        }
      });

  SepEstimate est;
  est.n = config.count;
  for (const auto& t : tallies) {
    est.ppt_count += t.ppt;
    est.indeterminate += t.band;
  }
  est.fraction = static_cast<double>(est.ppt_count) / static_cast<double>(est.n);
  est.std_error = std::sqrt(est.fraction * (1 - est.fraction) / static_cast<double>(est.n));
  return est;
}

MarginalHistogram marginal_histogram(const Spectrum& lambda, std::int64_t count, int bins,
                                     std::uint64_t seed, unsigned threads) {
  if (lambda.size() != 4) throw std::invalid_argument("marginal_histogram: spectrum must have length 4");
  if (count < 1) throw std::invalid_argument("marginal_histogram: count must be >= 1");
  if (bins < 1) throw std::invalid_argument("marginal_histogram: bins must be >= 1");
  const CenteredSpectrum lhat = CenteredSpectrum::from(lambda);
  if (!lhat.is_simple()) throw std::invalid_argument("marginal_histogram: spectrum must be simple");

  const CCoeffs c = c_coeffs(lhat);
  const MomentPolytope2Q poly = moment_polytope(c);
  const PiecewisePoly1D density = marginal_density_I(lhat);
  const Rational norm = vandermonde(lhat.entries()) / 12;
  const Rational width = c.c3 / bins;
  const double c3 = to_double(c.c3);
  const double w = to_double(width);

  MarginalHistogram h;
  for (int b = 0; b <= bins; ++b) h.edges.push_back(to_double(Rational(width * b)));
  for (int b = 0; b < bins; ++b) {
    const Rational lo = width * b, hi = width * (b + 1);
    h.analytic.push_back(to_double(Rational(density.integral(lo, hi) / (norm * width))));
  }

  std::vector<double> lam(lambda.entries().size());
  for (std::size_t k = 0; k < lam.size(); ++k) lam[k] = to_double(lambda[k]);

  struct Tally {
    std::vector<std::int64_t> counts;
    std::int64_t outside = 0;
    std::int64_t violations = 0;
  };
  const auto tallies = run_blocks<Tally>(
      count, threads, [&](std::uint64_t block, std::int64_t begin, std::int64_t end, Tally& out) {
        out.counts.assign(static_cast<std::size_t>(bins), 0);
        Rng rng = make_stream(seed, block);
        for (std::int64_t i = begin; i < end; ++i) {
          const DensityMatrix rho = sample_fixed_spectrum(lam, rng);
          const double xa = 1 - 2 * hermitian_eigs(partial_trace(rho.matrix(), 1))(1);
          const double xb = 1 - 2 * hermitian_eigs(partial_trace(rho.matrix(), 2))(1);
          if (!poly.contains(xa, xb, 1e-9)) ++out.violations;
          if (xa < -1e-9 || xa > c3 + 1e-9) {
            ++out.outside;
            continue;
          }
          const int b = std::clamp(static_cast<int>(std::floor(xa / w)), 0, bins - 1);
          ++out.counts[static_cast<std::size_t>(b)];
        }
      });

  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (const auto& t : tallies) {
    for (int b = 0; b < bins; ++b) h.counts[b] += t.counts[b];
    h.outside_support += t.outside;
    h.polytope_violations += t.violations;
  }
  for (int b = 0; b < bins; ++b) {
    h.empirical.push_back(static_cast<double>(h.counts[b]) / (static_cast<double>(count) * w));
    h.sup_norm = std::max(h.sup_norm, std::abs(h.empirical[b] - h.analytic[b]));
  }
  return h;
}

}  // namespace qsep
