#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <optional>

#include "qsep/cli.hpp"
#include "qsep/exactmath/json_io.hpp"

namespace qsep::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json decimal_pair(const SymbolicReal& x) {
  return {{"exact", symbolic_to_json(x)}, {"text", to_string(x)}, {"decimal", to_decimal(x.to_double())}};
}

json decimal_pair(const Rational& q) {
  return {{"exact", rational_to_json(q)}, {"decimal", to_decimal(to_double(q))}};
}

json poly_report(const MultiPoly& p, const std::string& var) {
  const std::array<std::string, 1> names{var};
  return {{"terms", poly_to_json(p)}, {"text", to_string(p, names)}};
}

Spectrum parse_spectrum(const std::string& text) {
  try {
    auto entries = parse_rational_list(text);
    if (entries.size() != 4) throw UsageError("--spectrum needs four entries");
    return Spectrum(std::move(entries));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("--spectrum: ") + e.what());
  }
}

// --- verbs -------------------------------------------------------------------

void do_volumes(unsigned n, json& report) {
  report["n"] = n;
  report["flag_hs"] = decimal_pair(flag_volume_hs(n));
  report["flag_euclid"] = decimal_pair(flag_volume_euclid(n));
  report["state_space_hs"] = decimal_pair(state_space_volume_hs(n));
  report["simplex_integral"] = decimal_pair(simplex_vandermonde_integral(n));
}

void do_density_pieces(json& report, std::vector<CheckResult>& checks) {
  const PiecewiseDensity closed = convolution_density_closed();
  const PiecewiseDensity jump = convolution_density_jump();
  const std::array<std::string, 2> names{"r", "s"};
  json pieces = json::array();
  bool equal = true;
  for (const auto& piece : closed.pieces()) {
    const MultiPoly& other = jump.piece(piece.chamber.label);
    equal = equal && other == piece.poly;
    pieces.push_back({{"chamber", to_string(piece.chamber.label)},
                      {"closed_form", poly_to_json(piece.poly)},
                      {"jump_formula", poly_to_json(other)},
                      {"text", to_string(piece.poly, names)}});
  }
  json walls = json::array();
  for (const auto& w : jump_walk())
    walls.push_back({{"from", to_string(w.from)},
                     {"to", to_string(w.to)},
                     {"normal", w.normal},
                     {"on_wall_weight", {w.on_wall.r, w.on_wall.s}},
                     {"prefactor", rational_to_json(w.prefactor)},
                     {"jump", poly_to_json(w.jump)}});
  report["pieces"] = pieces;
  report["walls"] = walls;
  checks.push_back({"closed form equals jump derivation", equal, "", 0});
}

void do_density_oracle(int points, std::uint64_t seed, double tol, json& report,
                       std::vector<CheckResult>& checks) {
  const PiecewiseDensity closed = convolution_density_closed();
  Rng rng = make_stream(seed, 0);
  std::uniform_int_distribution<long> pick(-5000, 1000);
  json rows = json::array();
  double worst = 0;
  for (int i = 0; i < points; ++i) {
    const Rational r = make_rational(pick(rng), 1000), s = make_rational(pick(rng), 1000);
    const Rational exact = closed.evaluate(r, s);
    const double oracle = fiber_polytope_density(to_double(r), to_double(s));
    const double err = std::abs(oracle - to_double(exact));
    worst = std::max(worst, err);
    rows.push_back({{"chamber", to_string(locate_chamber(r, s))},
                    {"point", {rational_to_json(r), rational_to_json(s)}},
                    {"closed_form", rational_to_json(exact)},
                    {"oracle", oracle},
                    {"abs_err", err}});
  }
  report["rows"] = rows;
  report["max_abs_err"] = worst;
  checks.push_back({"fiber oracle agrees with closed form", worst <= tol, "max abs err " + to_decimal(worst), 0});
}

void do_marginal(const Spectrum& lambda, std::optional<std::int64_t> samples, int bins, std::uint64_t seed,
                 unsigned threads, json& report, std::vector<CheckResult>& checks) {
  const CenteredSpectrum lhat = CenteredSpectrum::from(lambda);
  if (!lhat.is_simple()) throw UsageError("--spectrum must have distinct entries");
  const CCoeffs c = c_coeffs(lhat);
  const PiecewisePoly1D d = marginal_density_I(lhat);

  json spectrum = json::array();
  for (const auto& v : lambda.entries()) spectrum.push_back(rational_to_json(v));
  report["spectrum"] = spectrum;
  report["c"] = {{"c1", decimal_pair(c.c1)}, {"c2", decimal_pair(c.c2)}, {"c3", decimal_pair(c.c3)}};
  json bps = json::array();
  for (const auto& b : d.breakpoints()) bps.push_back(rational_to_json(b));
  report["breakpoints"] = bps;
  json pieces = json::array();
  for (const auto& p : d.pieces())
    pieces.push_back({{"lower", rational_to_json(p.lower)},
                      {"upper", rational_to_json(p.upper)},
                      {"poly", poly_report(p.poly, "x")}});
  report["pieces"] = pieces;
  const Rational mass = d.integral();
  const Rational expected = vandermonde(lhat.entries()) / 12;
  report["total_mass"] = decimal_pair(mass);
  report["expected_mass"] = decimal_pair(expected);
  checks.push_back({"total mass equals V4/12", mass == expected, "", 0});

  if (samples) {
    const MarginalHistogram h = marginal_histogram(lambda, *samples, bins, seed, threads);
    report["histogram"] = {{"edges", h.edges},       {"counts", h.counts},
                           {"empirical", h.empirical}, {"analytic", h.analytic},
                           {"sup_norm", h.sup_norm},   {"outside_support", h.outside_support},
                           {"polytope_violations", h.polytope_violations}};
    checks.push_back({"samples inside moment polytope", h.polytope_violations == 0, "", 0});
  }
}

void do_integrate(const std::string& emit, json& report, std::vector<CheckResult>& checks) {
  report["emit"] = emit;
  if (emit == "M1" || emit == "M2" || emit == "M3") {
    const MResult m = compute_M(emit[1] - '0');
    json parts = json::array();
    for (const auto& p : m.parts)
      parts.push_back({{"region", to_string(p.region)}, {"sign", p.sign}, {"poly", poly_report(p.value, "x")}});
    report[emit] = poly_report(m.total, "x");
    report["parts"] = parts;
  } else if (emit == "f") {
    const FPoly f = compute_f();
    report["f"] = {{"prefactor", decimal_pair(f.prefactor)},
                   {"poly", poly_report(f.poly, "a")},
                   {"f0", decimal_pair(evaluate_f(f, 0))},
                   {"f_third", decimal_pair(evaluate_f(f, Rational(1, 3)))}};
    MultiPoly sum(1);
    for (int k = 1; k <= 3; ++k) sum += compute_M(k).total;
    checks.push_back({"f consistent with M integrals", f_consistency_check(f, sum), "", 0});
  } else {
    const Rational p = separability_probability();
    report["prob"] = to_string(p);
    report["decimal"] = to_decimal(to_double(p));
    report["vol_d0"] = decimal_pair(conditioned_volume_at_zero());
  }
}

void do_sample_sep(const SamplerConfig& cfg, unsigned threads, json& report) {
  const SepEstimate e = estimate_sep_prob(cfg, threads);
  report["n"] = e.n;
  report["ppt_count"] = e.ppt_count;
  report["fraction"] = e.fraction;
  report["stderr"] = e.std_error;
  report["indeterminate"] = e.indeterminate;
  report["threads"] = threads;
}

void do_sample_conditioned(double a, const SamplerConfig& cfg, json& report) {
  const ConditionedStudy s = conditioned_study(a, cfg);
  report["a"] = a;
  report["n"] = s.n;
  report["ppt_count"] = s.ppt_count;
  report["fraction"] = s.fraction;
  report["agreement_halfbound"] = s.agreement_halfbound;
  report["disagreements"] = s.disagreements;
  report["band_count"] = s.band_count;
  report["max_marginal_error"] = s.max_marginal_error;
  report["burn"] = cfg.burn_in;
  report["thin"] = cfg.thinning;
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_rational(std::string_view(text).substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Exact and Monte Carlo two-qubit separability toolkit", "qsep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::uint64_t seed = 42;
  unsigned threads = 1;
  double tol = 0;

  auto* volumes = app.add_subcommand("volumes", "Flag manifold and state space volumes");
  unsigned vol_n = 0;
  volumes->add_option("--n", vol_n, "Dimension N")->required()->check(CLI::Range(1u, kMaxVolumeDimension));

  auto* density = app.add_subcommand("density", "Chamber density p(r,s)");
  bool check_oracle = false, density_csv = false;
  int points = 300, grid = 100;
  density->add_flag("--check-oracle", check_oracle, "Compare against the fiber-polytope oracle");
  density->add_option("--points", points, "Random points for --check-oracle")->check(CLI::Range(1, 1000000));
  density->add_option("--seed", seed, "Seed");
  density->add_option("--tol", tol, "Oracle tolerance (default 1e-9)")->check(CLI::Range(0.0, 1.0));
  density->add_option("--grid", grid, "Grid size for --csv")->check(CLI::Range(2, 2000));
  density->add_flag("--csv", density_csv, "Emit a CSV grid over [-5,1]^2");

  auto* marginal = app.add_subcommand("marginal", "Marginal-gap density I(x) for a global spectrum");
  std::string spectrum_text;
  std::optional<std::int64_t> samples;
  int bins = 50, marginal_points = 200;
  bool marginal_csv = false;
  marginal->add_option("--spectrum", spectrum_text, "l1,l2,l3,l4 descending, summing to 1")->required();
  marginal->add_option("--samples", samples, "Haar-orbit samples for a histogram")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000'000}));
  marginal->add_option("--bins", bins, "Histogram bins")->check(CLI::Range(1, 100000));
  marginal->add_option("--points", marginal_points, "Grid nodes for --csv")->check(CLI::Range(2, 1000000));
  marginal->add_option("--seed", seed, "Seed");
  marginal->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  marginal->add_flag("--csv", marginal_csv, "Emit CSV (histogram when --samples is given)");

  auto* integrate = app.add_subcommand("integrate", "Exact M-integrals, f(a) and the probability");
  std::string emit;
  integrate->add_option("--emit", emit, "M1|M2|M3|f|prob")
      ->required()
      ->check(CLI::IsMember({"M1", "M2", "M3", "f", "prob"}));

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimators");
  sample->require_subcommand(1);
  auto* sep = sample->add_subcommand("sep", "PPT fraction of Hilbert-Schmidt random states");
  std::int64_t n = 0;
  sep->add_option("--n", n, "Sample count (>= 1000)")
      ->required()
      ->check(CLI::Range(std::int64_t{1000}, std::int64_t{1'000'000'000}));
  sep->add_option("--seed", seed, "Seed");
  sep->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  sep->add_option("--tol", tol, "PPT tolerance (default 1e-10)")->check(CLI::Range(0.0, 1.0));

  auto* cond = sample->add_subcommand("conditioned", "Hit-and-run on the conditioned state space");
  double a = 0;
  std::int64_t burn = 1000, thin = 10;
  cond->add_option("--a", a, "Bloch length of the first marginal, 0 <= a < 1")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  cond->add_option("--n", n, "Emitted samples")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000'000}));
  cond->add_option("--burn", burn, "Burn-in steps")->check(CLI::Range(std::int64_t{0}, std::int64_t{1'000'000'000}));
  cond->add_option("--thin", thin, "Steps between samples")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000}));
  cond->add_option("--seed", seed, "Seed");
  cond->add_option("--tol", tol, "PPT tolerance (default 1e-10)")->check(CLI::Range(0.0, 1.0));

  auto* verify = app.add_subcommand("verify", "Acceptance criteria and invariant checks");
  std::string suite_name = "all";
  verify->add_option("suite", suite_name, "all|exact|density|sampling")
      ->check(CLI::IsMember({"all", "exact", "density", "sampling"}));
  verify->add_option("--seed", seed, "Seed");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    err << app.help();
    return kUsage;
  }

  json report;
  report["command"] = std::vector<std::string>(args.begin(), args.end());
  report["version"] = kVersion;
  report["seed"] = nullptr;
  std::vector<CheckResult> checks;
  bool csv_written = false;

  try {
    if (*volumes) {
      do_volumes(vol_n, report);
    } else if (*density) {
      if (density_csv) {
        out << density_grid_csv(grid);
        csv_written = true;
      } else if (check_oracle) {
        report["seed"] = seed;
        do_density_oracle(points, seed, tol > 0 ? tol : 1e-9, report, checks);
      } else {
        do_density_pieces(report, checks);
      }
    } else if (*marginal) {
      const Spectrum lambda = parse_spectrum(spectrum_text);
      if (marginal_csv) {
        if (samples) {
          out << histogram_csv(marginal_histogram(lambda, *samples, bins, seed, threads));
        } else {
          out << marginal_grid_csv(lambda, marginal_points);
        }
        csv_written = true;
      } else {
        if (samples) report["seed"] = seed;
        do_marginal(lambda, samples, bins, seed, threads, report, checks);
      }
    } else if (*integrate) {
      do_integrate(emit, report, checks);
    } else if (*sep) {
      SamplerConfig cfg;
      cfg.seed = seed;
      cfg.count = n;
      cfg.tolerance = tol > 0 ? tol : 1e-10;
      report["seed"] = seed;
      do_sample_sep(cfg, threads, report);
    } else if (*cond) {
      if (a >= 1) throw UsageError("--a must be < 1");
      SamplerConfig cfg;
      cfg.seed = seed;
      cfg.count = n;
      cfg.burn_in = burn;
      cfg.thinning = thin;
      cfg.tolerance = tol > 0 ? tol : 1e-10;
      report["seed"] = seed;
      do_sample_conditioned(a, cfg, report);
    } else if (*verify) {
      const Suite suite = suite_name == "exact"     ? Suite::exact
                          : suite_name == "density" ? Suite::density
                          : suite_name == "sampling" ? Suite::sampling
                                                     : Suite::all;
      report["seed"] = seed;
      report["suite"] = suite_name;
      checks = run_suite(suite, RunOptions{seed, threads});
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }

  if (csv_written) return kOk;

  bool all_passed = true;
  json jchecks = json::array();
  for (const auto& c : checks) {
    all_passed = all_passed && c.passed;
    jchecks.push_back(to_json(c));
  }
  report["checks"] = jchecks;
  report["passed"] = all_passed;
  report["wall_clock_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << report.dump(2) << "\n";
  return all_passed ? kOk : kCheckFailed;
}

}  // namespace qsep::cli
