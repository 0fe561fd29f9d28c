#include <cmath>

#include "qsep/sampling.hpp"

namespace qsep {

Rng make_stream(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  return Rng(seq);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const DensityTolerance& tol) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) throw InvalidState("DensityMatrix: not square");
  if (!m_.allFinite()) throw InvalidState("DensityMatrix: non-finite entry");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol.hermitian)
    throw InvalidState("DensityMatrix: not Hermitian");
  if (std::abs(m_.trace() - Complex(1)) > tol.trace) throw InvalidState("DensityMatrix: trace is not 1");
  const RealVector ev = hermitian_eigs(m_);
  if (ev(ev.size() - 1) < tol.min_eigenvalue) throw InvalidState("DensityMatrix: not PSD");
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) { return DensityMatrix(std::move(m), NoCheck{}); }

ComplexMatrix ginibre(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("ginibre: n must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

DensityMatrix hs_random_state(int n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix::unchecked(std::move(rho));
}

ComplexMatrix haar_unitary(int n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0) q.col(k) *= d / mag;
  }
  return q;
}

DensityMatrix sample_fixed_spectrum(const std::vector<double>& lambda, Rng& rng) {
  const int n = static_cast<int>(lambda.size());
  const ComplexMatrix u = haar_unitary(n, rng);
  RealVector l(n);
  for (int k = 0; k < n; ++k) l(k) = lambda[k];
  ComplexMatrix rho = u * l.cast<Complex>().asDiagonal() * u.adjoint();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix::unchecked(std::move(rho));
}

}  // namespace qsep
