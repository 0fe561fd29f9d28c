#include <chrono>
#include <map>
#include <mutex>
#include <sstream>

#include "qsep/cli.hpp"
#include "qsep/exactmath/json_io.hpp"

namespace qsep::cli {

namespace {

using Clock = std::chrono::steady_clock;

const Rational kEightOver33(8, 33);
constexpr double kEightOver33d = 8.0 / 33.0;

MultiPoly xvar() { return MultiPoly::variable(1, 0); }
MultiPoly cst(const Rational& c) { return MultiPoly::constant(1, c); }

MultiPoly from_coefficients(std::initializer_list<std::pair<unsigned, const char*>> terms) {
  MultiPoly p(1);
  for (const auto& [e, c] : terms) p.add_term({e}, parse_rational(c));
  return p;
}

// (1 - x)^9 (33x^3 + 162x^2 + 72x + 8)
MultiPoly f_shape() {
  const MultiPoly x = xvar();
  return (cst(1) - x).pow(9) *
         (Rational(33) * x.pow(3) + Rational(162) * x.pow(2) + Rational(72) * x + cst(8));
}

// A positive limit fails the check when the wall-clock time exceeds it.
template <class Fn>
CheckResult timed(std::string name, Fn fn, double limit_s = 0) {
  const auto t0 = Clock::now();
  CheckResult r{std::move(name), false, "", 0};
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail += std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && r.seconds > limit_s) {
    r.passed = false;
    r.detail += "; exceeded time limit of " + std::to_string(limit_s) + " s";
  }
  return r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Spectrum random_simple_spectrum(Rng& rng) {
  std::uniform_int_distribution<int> pick(1, 1000);
  std::vector<int> v;
  while (v.size() < 4) {
    const int k = pick(rng);
    if (std::find(v.begin(), v.end(), k) == v.end()) v.push_back(k);
  }
  std::sort(v.rbegin(), v.rend());
  const int total = v[0] + v[1] + v[2] + v[3];
  std::vector<Rational> e;
  for (int k : v) e.push_back(make_rational(k, total));
  return Spectrum(std::move(e));
}

Rational random_unit(Rng& rng) {
  std::uniform_int_distribution<long> pick(0, 997);
  return make_rational(pick(rng), 997);
}

// A rational point in the interior or on the boundary of `label`, with
// |r|, |s| <= 5.
std::pair<Rational, Rational> random_point(ChamberLabel label, Rng& rng) {
  const Rational u = 5 * random_unit(rng), v = random_unit(rng);
  switch (label) {
    case ChamberLabel::C1: return {-u, v * u};
    case ChamberLabel::C2: return {-u, -v * u};
    case ChamberLabel::C3: return {-v * u, -u};
    case ChamberLabel::C0: {
      const Rational r = 10 * random_unit(rng) - 5;
      return {r, -r + u + make_rational(1, 997)};
    }
  }
  return {0, 0};
}

std::string mismatch_report(const MultiPoly& got, const MultiPoly& want) {
  std::ostringstream os;
  unsigned top = std::max(got.total_degree(), want.total_degree());
  for (unsigned e = 0; e <= top; ++e) {
    const Rational g = got.coefficient({e}), w = want.coefficient({e});
    if (g != w) os << "x^" << e << ": computed " << to_string(g) << " reference " << to_string(w) << "; ";
  }
  return os.str();
}

// Hit-and-run studies are shared between criteria 8 and 9.
ConditionedStudy cached_study(double a, const RunOptions& opts) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, double>, ConditionedStudy> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({opts.seed, a});
  if (it != cache.end()) return it->second;
  SamplerConfig cfg;
  cfg.seed = opts.seed;
  cfg.count = 100000;
  return cache.emplace(std::make_pair(opts.seed, a), conditioned_study(a, cfg)).first->second;
}

// --- acceptance criteria ------------------------------------------------------

CheckResult criterion_probability(const RunOptions&) {
  return timed("1 exact separability probability", [](CheckResult& r) {
    const std::vector<std::string> args{"integrate", "--emit", "prob"};
    std::ostringstream out, err;
    const int code = run(args, out, err);
    const auto j = nlohmann::json::parse(out.str());
    const std::string prob = j.at("prob").get<std::string>();
    r.passed = code == 0 && prob == "8/33";
    r.detail = "prob=" + prob + " exit=" + std::to_string(code);
  }, 60);
}

CheckResult criterion_f(const RunOptions&) {
  return timed("2 conditioned volume polynomial f(a)", [](CheckResult& r) {
    const FPoly f = compute_f();
    const FPoly want = reference_f();
    const SymbolicReal f0 = evaluate_f(f, 0);
    const bool prefactor_ok = f.prefactor == want.prefactor;
    const bool poly_ok = f.poly == want.poly;
    const bool f0_ok = f0 == SymbolicReal(make_rational(1, 39916800), 5);
    r.passed = prefactor_ok && poly_ok && f0_ok;
    r.detail = "prefactor=" + to_string(f.prefactor) + " f(0)=" + to_string(f0) +
               (poly_ok ? "" : " poly mismatch: " + mismatch_report(f.poly, want.poly));
  }, 60);
}

CheckResult criterion_m(const RunOptions&) {
  return timed("3 M-polynomials", [](CheckResult& r) {
    const MultiPoly m1 = compute_M(1).total, m2 = compute_M(2).total, m3 = compute_M(3).total;
    const bool ok1 = m1 == reference_m1();
    const bool ok3 = m3 == reference_m3();
    const bool ok_sum = (m1 + m2 + m3) == reference_m_sum();
    const std::string m2_report = mismatch_report(m2, reference_m2());
    r.passed = ok1 && ok3 && ok_sum;
    std::ostringstream os;
    os << "M1 " << (ok1 ? "match" : "MISMATCH " + mismatch_report(m1, reference_m1())) << "; M3 "
       << (ok3 ? "match" : "MISMATCH " + mismatch_report(m3, reference_m3())) << "; sum "
       << (ok_sum ? "match" : "MISMATCH") << "; M2 vs reference: "
       << (m2_report.empty() ? "all coefficients match" : m2_report);
    r.detail = os.str();
  });
}

CheckResult criterion_density(const RunOptions& opts) {
  return timed("4 DH density triple agreement", [&](CheckResult& r) {
    const PiecewiseDensity closed = convolution_density_closed();
    const PiecewiseDensity jump = convolution_density_jump();
    bool structural = true;
    for (auto label : {ChamberLabel::C0, ChamberLabel::C1, ChamberLabel::C2, ChamberLabel::C3})
      structural = structural && closed.piece(label) == jump.piece(label);

    Rng rng = make_stream(opts.seed, 401);
    double worst = 0;
    int points = 0;
    for (auto label : {ChamberLabel::C0, ChamberLabel::C1, ChamberLabel::C2, ChamberLabel::C3}) {
      for (int i = 0; i < 100; ++i, ++points) {
        const auto [pr, ps] = random_point(label, rng);
        const double exact = to_double(closed.evaluate(pr, ps));
        worst = std::max(worst, std::abs(fiber_polytope_density(to_double(pr), to_double(ps)) - exact));
      }
    }

    const MultiPoly& p1 = closed.piece(ChamberLabel::C1);
    const MultiPoly& p2 = closed.piece(ChamberLabel::C2);
    const MultiPoly& p3 = closed.piece(ChamberLabel::C3);
    const MultiPoly rr = MultiPoly::variable(2, 0), zero(2);
    const bool walls = substitute(p1, 1, zero) == substitute(p2, 1, zero) &&
                       substitute(p2, 1, rr) == substitute(p3, 1, rr) &&
                       substitute(p1, 1, -rr).is_zero() && substitute(p3, 0, zero).is_zero();
    r.passed = structural && walls && worst <= 1e-9 && points >= 300;
    r.detail = std::string("closed==jump ") + (structural ? "yes" : "no") + "; walls " +
               (walls ? "continuous" : "BROKEN") + "; oracle max err " + fmt(worst) + " over " +
               std::to_string(points) + " points";
  });
}

CheckResult criterion_volumes(const RunOptions& opts) {
  return timed("5 volume identities", [&](CheckResult& r) {
    const SymbolicReal two_pi6 = SymbolicReal(Rational(64), 6);
    const SymbolicReal want = two_pi6 * Rational(2 * 2 * 6, 1) / Rational(factorial(15));
    const bool ss = state_space_volume_hs(4) == want;
    const bool radial = radial_volume_check(SymbolicReal(make_rational(1, 9676800), 5));
    Rng rng = make_stream(opts.seed, 501);
    int good = 0;
    for (int i = 0; i < 50; ++i)
      if (hs_symp_relation_check(CenteredSpectrum::from(random_simple_spectrum(rng)))) ++good;
    r.passed = ss && radial && good == 50;
    r.detail = std::string("state space ") + (ss ? "ok" : "FAIL") + "; radial " + (radial ? "ok" : "FAIL") +
               "; HS/symplectic " + std::to_string(good) + "/50";
  }, 10);
}

CheckResult criterion_marginal(const RunOptions& opts) {
  return timed("6 marginal density", [&](CheckResult& r) {
    Rng rng = make_stream(opts.seed, 601);
    int mass_ok = 0;
    for (int i = 0; i < 10; ++i) {
      const CenteredSpectrum l = CenteredSpectrum::from(random_simple_spectrum(rng));
      if (marginal_density_I(l).integral() == vandermonde(l.entries()) / 12) ++mass_ok;
    }
    const std::vector<std::vector<const char*>> spectra{
        {"0.45", "0.27", "0.18", "0.10"}, {"0.4", "0.3", "0.2", "0.1"}, {"0.7", "0.15", "0.1", "0.05"}};
    double worst = 0;
    for (const auto& s : spectra) {
      std::vector<Rational> e;
      for (const char* v : s) e.push_back(parse_rational(v));
      const CenteredSpectrum l = CenteredSpectrum::from(Spectrum(e));
      const PiecewisePoly1D density = marginal_density_I(l);
      const double c3 = to_double(c_coeffs(l).c3);
      for (int k = 1; k <= 50; ++k) {
        const double x = c3 * k / 51.0;
        worst = std::max(worst, std::abs(marginal_density_oracle(l, x) - density.evaluate(x)));
      }
    }
    r.passed = mass_ok == 10 && worst <= 1e-6;
    r.detail = "exact mass " + std::to_string(mass_ok) + "/10; oracle max err " + fmt(worst);
  });
}

CheckResult criterion_global_mc(const RunOptions& opts) {
  return timed("7 Monte Carlo separability fraction", [&](CheckResult& r) {
    SamplerConfig cfg;
    cfg.seed = opts.seed;
    cfg.count = 1000000;
    const SepEstimate e = estimate_sep_prob(cfg, opts.threads);
    const double dev = std::abs(e.fraction - kEightOver33d);
    r.passed = dev <= 0.002;
    r.detail = "fraction " + fmt(e.fraction) + " stderr " + fmt(e.std_error) + " |dev| " + fmt(dev);
  }, 120);
}

CheckResult criterion_conditioned(const RunOptions& opts) {
  return timed("8 conditioned fractions constant in a", [&](CheckResult& r) {
    bool ok = true;
    std::ostringstream os;
    for (double a : {0.0, 0.2, 0.4}) {
      const ConditionedStudy s = cached_study(a, opts);
      const double dev = std::abs(s.fraction - kEightOver33d);
      ok = ok && dev <= 0.01 && s.max_marginal_error <= 1e-10;
      os << "a=" << a << " fraction " << fmt(s.fraction) << " |dev| " << fmt(dev) << "; ";
    }
    r.passed = ok;
    r.detail = os.str();
  });
}

CheckResult criterion_half_bound(const RunOptions& opts) {
  return timed("9 PPT equals lambda_max <= 1/2 on a=0", [&](CheckResult& r) {
    const ConditionedStudy s = cached_study(0.0, opts);
    const double band_share = static_cast<double>(s.band_count) / static_cast<double>(s.n);
    r.passed = s.disagreements == 0 && band_share < 1e-3;
    r.detail = "disagreements " + std::to_string(s.disagreements) + " band " + std::to_string(s.band_count) +
               "/" + std::to_string(s.n);
  });
}

CheckResult criterion_histogram(const RunOptions& opts) {
  return timed("10 fixed-spectrum marginal law", [&](CheckResult& r) {
    const Spectrum lambda({parse_rational("0.45"), parse_rational("0.27"), parse_rational("0.18"),
                           parse_rational("0.10")});
    const MarginalHistogram h = marginal_histogram(lambda, 1000000, 50, opts.seed, opts.threads);
    r.passed = h.sup_norm < 0.05 && h.polytope_violations == 0;
    r.detail = "sup-norm " + fmt(h.sup_norm) + " over 50 bins; polytope violations " +
               std::to_string(h.polytope_violations);
  }, 180);
}

// --- invariant checks -----------------------------------------------------------

std::vector<CheckResult> exact_invariants(const RunOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(timed("laurent residue truncation-insensitive", [](CheckResult& r) {
    bool ok = true;
    for (const auto& w : jump_walk()) {
      std::vector<LinearFactor> factors;
      for (const Weight& om : distinct_weights())
        if (!(om == w.on_wall))
          factors.push_back({0, om.r * w.normal[0] + om.s * w.normal[1]});
      const MultiPoly l = MultiPoly::variable(2, 0) * Rational(w.normal[0]) +
                          MultiPoly::variable(2, 1) * Rational(w.normal[1]);
      ok = ok && laurent_residue(l, factors, 3) == laurent_residue(l, factors, 7);
    }
    r.passed = ok;
  }));
  out.push_back(timed("flag volume HS = 2^{N(N-1)/2} Euclid, N <= 8", [](CheckResult& r) {
    bool ok = true;
    for (unsigned n = 1; n <= 8; ++n)
      ok = ok && flag_volume_hs(n) == flag_volume_euclid(n) * pow(Rational(2), n * (n - 1) / 2);
    r.passed = ok;
  }));
  out.push_back(timed("state space volume factorization, N <= 8", [](CheckResult& r) {
    bool ok = true;
    for (unsigned n = 1; n <= 8; ++n)
      ok = ok && state_space_volume_hs(n) ==
                     SymbolicReal::sqrt_of(n) * flag_volume_hs(n) * simplex_vandermonde_integral(n);
    r.passed = ok;
  }));
  out.push_back(timed("change of variables", [](CheckResult& r) {
    const auto cov = lambda_t_change_of_variables();
    r.passed = change_of_variables_roundtrip(cov) && cov.jacobian == make_rational(1, 24) &&
               vandermonde_t() == vandermonde_of_lambda_t();
    r.detail = "jacobian " + to_string(cov.jacobian);
  }));
  out.push_back(timed("region bounds ordered with positive volume", [](CheckResult& r) {
    bool ok = true;
    for (auto n : {RegionName::R, RegionName::R1a, RegionName::R1b, RegionName::R2a, RegionName::R2b,
                   RegionName::R2ab, RegionName::R3a, RegionName::R3b, RegionName::Delta3}) {
      const RegionCheck c = validate_region(region(n));
      ok = ok && c.bounds_ordered && c.volume_at_sixth > 0;
      r.detail += c.detail;
    }
    r.passed = ok;
  }));
  out.push_back(timed("M1 halves equal", [](CheckResult& r) {
    const MResult m1 = compute_M(1);
    r.passed = m1.parts.size() == 2 && m1.parts[0].value == m1.parts[1].value;
  }));
  out.push_back(timed("decomposition order invariance", [](CheckResult& r) {
    bool same = true;
    for (int k = 2; k <= 3; ++k)
      same = same && compute_M(k).total == compute_M(k, Decomposition::via_r).total;
    r.passed = same && separability_probability(Decomposition::via_r) == kEightOver33;
  }));
  out.push_back(timed("f consistency with M integrals", [](CheckResult& r) {
    MultiPoly sum(1);
    for (int k = 1; k <= 3; ++k) sum += compute_M(k).total;
    r.passed = f_consistency_check(compute_f(), sum);
  }));
  out.push_back(timed("conditioned volume at zero", [](CheckResult& r) {
    const SymbolicReal v = conditioned_volume_at_zero();
    r.passed = v == SymbolicReal(make_rational(1, 9676800), 5);
    r.detail = to_string(v);
  }));
  (void)opts;
  return out;
}

std::vector<CheckResult> density_invariants(const RunOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(timed("wall prefactors", [](CheckResult& r) {
    bool ok = true;
    for (const auto& w : jump_walk()) ok = ok && w.prefactor == make_rational(1, 2);
    r.passed = ok;
  }));
  out.push_back(timed("p2 nonnegative on C2", [](CheckResult& r) {
    const PiecewiseDensity density = convolution_density_closed();
    const MultiPoly& p2 = density.piece(ChamberLabel::C2);
    bool ok = true;
    for (int i = 1; i <= 100; ++i)
      for (int j = 0; j < 100; ++j) {
        const Rational rr = make_rational(-i, 20);
        const std::array<Rational, 2> pt{rr, rr * make_rational(j, 99)};
        ok = ok && p2.evaluate(std::span<const Rational>(pt)) >= 0;
      }
    r.passed = ok;
  }));
  out.push_back(timed("marginal density continuous and nonnegative", [&](CheckResult& r) {
    Rng rng = make_stream(opts.seed, 701);
    bool ok = true;
    for (int i = 0; i < 10; ++i) {
      const PiecewisePoly1D d = marginal_density_I(CenteredSpectrum::from(random_simple_spectrum(rng)));
      const auto& pieces = d.pieces();
      for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
        const std::array<Rational, 1> pt{pieces[k].upper};
        ok = ok && pieces[k].poly.evaluate(std::span<const Rational>(pt)) ==
                       pieces[k + 1].poly.evaluate(std::span<const Rational>(pt));
      }
      const Rational top = pieces.back().upper;
      for (int k = 0; k <= 100; ++k) ok = ok && d.evaluate(Rational(top * k / 100)) >= 0;
    }
    r.passed = ok;
  }));
  return out;
}

std::vector<CheckResult> sampling_invariants(const RunOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(timed("estimator independent of thread count", [&](CheckResult& r) {
    SamplerConfig cfg;
    cfg.seed = opts.seed;
    cfg.count = 3 * kSampleBlock;
    const SepEstimate a = estimate_sep_prob(cfg, 1), b = estimate_sep_prob(cfg, 3);
    r.passed = a.ppt_count == b.ppt_count && a.indeterminate == b.indeterminate;
  }));
  out.push_back(timed("haar unitaries unitary", [&](CheckResult& r) {
    Rng rng = make_stream(opts.seed, 801);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const ComplexMatrix u = haar_unitary(4, rng);
      worst = std::max(worst, (u.adjoint() * u - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff());
    }
    r.passed = worst <= 1e-12;
    r.detail = "max |U†U - I| " + fmt(worst);
  }));
  return out;
}

}  // namespace

nlohmann::json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}};
}

MultiPoly reference_m1() {
  const MultiPoly x = xvar();
  const MultiPoly quartic = Rational(567) * x.pow(4) - Rational(3564) * x.pow(3) +
                            Rational(5526) * x.pow(2) - Rational(3152) * x - cst(1345);
  return x * (Rational(3) * x - cst(1)).pow(9) * quartic * parse_rational("1/387370509926400");
}

MultiPoly reference_m2() {
  return from_coefficients({{14, "-499/17712414720"},
                            {13, "41/151388160"},
                            {12, "-1061/1135411200"},
                            {11, "653/371589120"},
                            {10, "-163/82575360"},
                            {9, "557/412876800"},
                            {8, "-11/20643840"},
                            {7, "1/10321920"},
                            {3, "-90533/84757991915520"},
                            {2, "3677549/7628219272396800"},
                            {1, "-613427/9916685054115840"}});
}

MultiPoly reference_m3() {
  return from_coefficients({{14, "-1/691891200"},
                            {3, "15013/84757991915520"},
                            {2, "-1531501/7628219272396800"},
                            {1, "115799/1983337010823168"}});
}

MultiPoly reference_m_sum() {
  return f_shape() * xvar().pow(2) * parse_rational("1/40874803200");
}

FPoly reference_f() { return {SymbolicReal(make_rational(1, 319334400), 5), f_shape()}; }

std::vector<Criterion> acceptance_criteria() {
  return {criterion_probability, criterion_f,           criterion_m,           criterion_density,
          criterion_volumes,     criterion_marginal,    criterion_global_mc,   criterion_conditioned,
          criterion_half_bound,  criterion_histogram};
}

std::vector<CheckResult> run_suite(Suite suite, const RunOptions& opts) {
  const auto criteria = acceptance_criteria();
  std::vector<std::size_t> picked;
  switch (suite) {
    case Suite::all: picked = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}; break;
    case Suite::exact: picked = {0, 1, 2, 4}; break;
    case Suite::density: picked = {3, 5}; break;
    case Suite::sampling: picked = {6, 7, 8, 9}; break;
  }
  std::vector<CheckResult> out;
  for (std::size_t i : picked) out.push_back(criteria[i](opts));
  auto append = [&](std::vector<CheckResult> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  if (suite == Suite::all || suite == Suite::exact) append(exact_invariants(opts));
  if (suite == Suite::all || suite == Suite::density) append(density_invariants(opts));
  if (suite == Suite::all || suite == Suite::sampling) append(sampling_invariants(opts));
  return out;
}

}  // namespace qsep::cli
