#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsep/sampling.hpp"

namespace qsep {

namespace {

void require_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigs: matrix is not square");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTolerance * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("hermitian_eigs: matrix is not Hermitian");
}

double off_norm(const ComplexMatrix& a) {
  double s = 0;
  for (Eigen::Index p = 0; p < a.rows(); ++p)
    for (Eigen::Index q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

// Cyclic Jacobi: each rotation G = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
// zeroes A(p,q) in G†AG.
Eigensystem jacobi(const ComplexMatrix& m, bool want_vectors) {
  const Eigen::Index n = m.rows();
  ComplexMatrix a = (m + m.adjoint()) / 2.0;
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double scale = std::max(1.0, a.norm());

  int sweep = 0;
  while (off_norm(a) > kJacobiTolerance * scale) {
    if (++sweep > 100) throw std::runtime_error("hermitian_eigs: Jacobi did not converge");
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0) continue;
        const Complex phase = b / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;
        const Complex gpp = c, gpq = s, gqp = -s * std::conj(phase), gqq = c * std::conj(phase);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = v(k, p), vkq = v(k, q);
            v(k, p) = vkp * gpp + vkq * gqp;
            v(k, q) = vkp * gpq + vkq * gqq;
          }
        }
      }
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });
  Eigensystem out{RealVector(n), want_vectors ? ComplexMatrix(n, n) : ComplexMatrix()};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    if (want_vectors) out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

Eigensystem two_by_two(const ComplexMatrix& m, bool want_vectors) {
  const double a = m(0, 0).real(), d = m(1, 1).real();
  const Complex b = (m(0, 1) + std::conj(m(1, 0))) / 2.0;
  const double mean = (a + d) / 2;
  const double rad = std::hypot((a - d) / 2, std::abs(b));
  Eigensystem out{RealVector(2), ComplexMatrix()};
  out.values << mean + rad, mean - rad;
  if (want_vectors) return jacobi(m, true);
  return out;
}

}  // namespace

RealVector hermitian_eigs(const ComplexMatrix& m) {
  require_hermitian(m);
  if (m.rows() == 1) return RealVector::Constant(1, m(0, 0).real());
  if (m.rows() == 2) return two_by_two(m, false).values;
  return jacobi(m, false).values;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  require_hermitian(m);
  if (m.rows() == 1) return {RealVector::Constant(1, m(0, 0).real()), ComplexMatrix::Identity(1, 1)};
  return jacobi(m, true);
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int keep) {
  if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("partial_trace: need a 4x4 matrix");
  if (keep != 1 && keep != 2) throw std::invalid_argument("partial_trace: keep must be 1 or 2");
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (keep == 1)
          out(i, j) += rho(2 * i + k, 2 * j + k);
        else
          out(i, j) += rho(2 * k + i, 2 * k + j);
      }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
  return DensityMatrix(partial_trace(rho.matrix(), keep), DensityTolerance{1e-12, 1e-12, -1e-10});
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("partial_transpose: need a 4x4 matrix");
  ComplexMatrix out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
  return out;
}

double ppt_min_eig(const DensityMatrix& rho) {
  const RealVector ev = hermitian_eigs(partial_transpose(rho.matrix()));
  return ev(ev.size() - 1);
}

bool is_ppt(const DensityMatrix& rho, double tol) { return ppt_min_eig(rho) >= -tol; }

bool is_half_bounded(const DensityMatrix& rho, double tol) {
  return hermitian_eigs(rho.matrix())(0) <= 0.5 + tol;
}

double marginal_gap(const DensityMatrix& rho) {
  const RealVector ev = hermitian_eigs(partial_trace(rho.matrix(), 1));
  return 1 - 2 * ev(1);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix pauli(int k) {
  ComplexMatrix m(2, 2);
  const Complex i(0, 1);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return m;
}

}  // namespace qsep
