#include <algorithm>
#include <iomanip>
#include <sstream>

#include "qsep/cli.hpp"

namespace qsep::cli {

namespace {

std::ostringstream csv_stream() {
  std::ostringstream os;
  os << std::setprecision(17);
  return os;
}

}  // namespace

std::string density_grid_csv(int grid, double lo, double hi) {
  if (grid < 2) throw std::invalid_argument("density_grid_csv: grid must be >= 2");
  if (!(lo < hi)) throw std::invalid_argument("density_grid_csv: need lo < hi");
  const PiecewiseDensity p = convolution_density_closed();
  auto os = csv_stream();
  os << "r,s,chamber,density\n";
  const double step = (hi - lo) / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    const double r = lo + i * step;
    for (int j = 0; j < grid; ++j) {
      const double s = lo + j * step;
      os << r << ',' << s << ',' << to_string(locate_chamber(r, s)) << ',' << p.evaluate(r, s) << '\n';
    }
  }
  return os.str();
}

std::string marginal_grid_csv(const Spectrum& lambda, int points) {
  if (points < 2) throw std::invalid_argument("marginal_grid_csv: points must be >= 2");
  const CenteredSpectrum lhat = CenteredSpectrum::from(lambda);
  const CCoeffs c = c_coeffs(lhat);
  const PiecewisePoly1D density = marginal_density_I(lhat);
  const Rational norm = vandermonde(lhat.entries()) / 12;

  std::vector<Rational> xs;
  for (int k = 0; k < points; ++k) xs.push_back(c.c3 * k / (points - 1));
  xs.push_back(c.c1);
  xs.push_back(c.c2);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto os = csv_stream();
  os << "x,density,normalized\n";
  for (const Rational& x : xs) {
    const Rational v = density.evaluate(x);
    os << to_double(x) << ',' << to_double(v) << ',';
    if (norm != 0)
      os << to_double(Rational(v / norm));
    else
      os << "nan";
    os << '\n';
  }
  return os.str();
}

std::string histogram_csv(const MarginalHistogram& h) {
  auto os = csv_stream();
  os << "bin_lo,bin_hi,count,empirical,analytic\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    os << h.edges[b] << ',' << h.edges[b + 1] << ',' << h.counts[b] << ',' << h.empirical[b] << ','
       << h.analytic[b] << '\n';
  return os.str();
}

}  // namespace qsep::cli
