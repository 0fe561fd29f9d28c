#include <doctest.h>

#include <cmath>

#include "qsep/sampling.hpp"

using namespace qsep;

namespace {

ComplexMatrix random_hermitian(int n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rng);
  return (g + g.adjoint()) * 0.5;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues match Eigen") {
  Rng rng = make_stream(1, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(4, rng);
    const RealVector ours = hermitian_eigs(h);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(h);
    for (int i = 0; i < 4; ++i) CHECK(ours[i] == doctest::Approx(ref.eigenvalues()[3 - i]).epsilon(1e-12));
    const Eigensystem es = hermitian_eigensystem(h);
    const ComplexMatrix recon = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
    CHECK((recon - h).norm() < 1e-10);
  }
}

TEST_CASE("density matrix validation") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) * 0.25;
  CHECK_NOTHROW(DensityMatrix{m});
  m(0, 0) = 0.5;
  CHECK_THROWS_AS(DensityMatrix{m}, InvalidState);
  ComplexMatrix neg = ComplexMatrix::Identity(4, 4) * 0.5;
  neg(0, 0) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, InvalidState);
}

TEST_CASE("HS random states are valid") {
  Rng rng = make_stream(2, 0);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = hs_random_state(4, rng);
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
    CHECK(hermitian_eigs(rho.matrix()).minCoeff() > -1e-12);
  }
}

TEST_CASE("Haar unitaries are unitary") {
  Rng rng = make_stream(3, 0);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix u = haar_unitary(4, rng);
    CHECK((u * u.adjoint() - ComplexMatrix::Identity(4, 4)).norm() < 1e-12);
  }
}

TEST_CASE("partial trace and transpose of product states") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
  b << 0.6, Complex(0, 0.1), Complex(0, -0.1), 0.4;
  const ComplexMatrix rho = kron(a, b);
  CHECK((partial_trace(rho, 1) - a).norm() < 1e-14);
  CHECK((partial_trace(rho, 2) - b).norm() < 1e-14);
  CHECK((partial_transpose(rho) - kron(a, b.transpose())).norm() < 1e-14);
  CHECK(is_ppt(DensityMatrix(rho)));
}

TEST_CASE("Bell state is not PPT") {
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const DensityMatrix rho(bell);
  CHECK(ppt_min_eig(rho) == doctest::Approx(-0.5));
  CHECK_FALSE(is_ppt(rho));
  CHECK(marginal_gap(rho) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("Pauli matrices") {
  for (int k = 1; k <= 3; ++k) {
    CHECK((pauli(k) * pauli(k) - ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
    CHECK(std::abs(pauli(k).trace()) < 1e-15);
  }
}

TEST_CASE("fixed-spectrum samples keep the spectrum") {
  Rng rng = make_stream(4, 0);
  const std::vector<double> lambda{0.45, 0.27, 0.18, 0.10};
  for (int i = 0; i < 10; ++i) {
    const RealVector ev = hermitian_eigs(sample_fixed_spectrum(lambda, rng).matrix());
    for (int k = 0; k < 4; ++k) CHECK(ev[k] == doctest::Approx(lambda[k]).epsilon(1e-12));
  }
}

TEST_CASE("sampler config validation") {
  SamplerConfig c;
  c.count = 10;
  CHECK_THROWS(estimate_sep_prob(c));
  c.count = 1000;
  c.thinning = 0;
  CHECK_THROWS(c.validate());
}

TEST_CASE("separability estimate is thread-count independent") {
  SamplerConfig c;
  c.seed = 9;
  c.count = 20000;
  const SepEstimate one = estimate_sep_prob(c, 1);
  const SepEstimate four = estimate_sep_prob(c, 4);
  CHECK(one.ppt_count == four.ppt_count);
  CHECK(std::abs(one.fraction - 8.0 / 33.0) < 5 * one.std_error);
}

TEST_CASE("histogram sample stays in the moment polytope") {
  const Spectrum s({make_rational(9, 20), make_rational(27, 100), make_rational(9, 50), make_rational(1, 10)});
  const MarginalHistogram h = marginal_histogram(s, 20000, 20, 11, 2);
  CHECK(h.polytope_violations == 0);
  CHECK(h.outside_support == 0);
  std::int64_t total = 0;
  for (auto c : h.counts) total += c;
  CHECK(total == 20000);
}

TEST_CASE("hit-and-run keeps the marginal fixed") {
  SamplerConfig c;
  c.seed = 12;
  c.count = 1000;
  c.burn_in = 100;
  HitAndRunSampler sampler(0.3, c);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = sampler.next();
    CHECK(marginal_gap(rho) == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(hermitian_eigs(rho.matrix()).minCoeff() > -1e-12);
  }
  CHECK(sampler.steps() > 200);
}

TEST_CASE("conditioned study at a = 0 agrees with the half-bound criterion") {
  SamplerConfig c;
  c.seed = 13;
  c.count = 3000;
  const ConditionedStudy s = conditioned_study(0.0, c);
  CHECK(s.disagreements == 0);
  CHECK(s.max_marginal_error < 1e-10);
}
