#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsep/sampling.hpp"
#include "qsep/sep_integral.hpp"

namespace qsep::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Parses args (without the program name), writes one JSON report or CSV
// table to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Comma-separated rationals ("0.45,0.27,0.18,0.10" or "9/20,...").
std::vector<Rational> parse_rational_list(const std::string& text);

// --- plot data -------------------------------------------------------------

// p(r, s) on a grid x grid lattice over [lo, hi]^2; columns r,s,chamber,density.
std::string density_grid_csv(int grid, double lo = -5.0, double hi = 1.0);

// I(x|λ̂) on [0, c3] at `points` uniform nodes plus the breakpoints c1, c2;
// columns x,density,normalized.
std::string marginal_grid_csv(const Spectrum& lambda, int points);

// One row per bin; columns bin_lo,bin_hi,count,empirical,analytic.
std::string histogram_csv(const MarginalHistogram& h);

// --- checks ----------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

nlohmann::json to_json(const CheckResult& c);

enum class Suite { all, exact, density, sampling };

struct RunOptions {
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

// The ten acceptance criteria, in order.
using Criterion = std::function<CheckResult(const RunOptions&)>;
std::vector<Criterion> acceptance_criteria();

// Acceptance criteria relevant to the suite followed by invariant checks.
std::vector<CheckResult> run_suite(Suite suite, const RunOptions& opts);

// Reference polynomials assembled from their factored forms.
MultiPoly reference_m1();
MultiPoly reference_m2();
MultiPoly reference_m3();
MultiPoly reference_m_sum();
FPoly reference_f();

}  // namespace qsep::cli
