#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "qsep/dh_density.hpp"

namespace qsep {

namespace {

using Vec4 = std::array<double, 4>;

double dot(const Vec4& a, const Vec4& b) {
  double s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

struct WeightMatrix {
  std::array<Vec4, 2> rows;
  double gram;  // A A^T is gram * I for this weight system
  std::array<Vec4, 2> kernel;
};

WeightMatrix build() {
  WeightMatrix m{};
  const auto w = distinct_weights();
  for (int j = 0; j < 4; ++j) {
    m.rows[0][j] = w[j].r;
    m.rows[1][j] = w[j].s;
  }
  const double g00 = dot(m.rows[0], m.rows[0]);
  const double g01 = dot(m.rows[0], m.rows[1]);
  const double g11 = dot(m.rows[1], m.rows[1]);
  if (g01 != 0 || g00 != g11) throw StructuralError("fiber oracle: A A^T is not a multiple of I");
  m.gram = g00;

  // Orthonormal kernel basis: Gram-Schmidt on (I - A^T A / gram) e_i.
  int found = 0;
  for (int i = 0; i < 4 && found < 2; ++i) {
    Vec4 v{};
    v[i] = 1;
    for (const auto& row : m.rows) {
      const double c = row[i] / m.gram;
      for (int j = 0; j < 4; ++j) v[j] -= c * row[j];
    }
    for (int k = 0; k < found; ++k) {
      const double c = dot(v, m.kernel[k]);
      for (int j = 0; j < 4; ++j) v[j] -= c * m.kernel[k][j];
    }
    const double n = std::sqrt(dot(v, v));
    if (n < 1e-8) continue;
    for (double& x : v) x /= n;
    m.kernel[found++] = v;
  }
  if (found != 2) throw StructuralError("fiber oracle: kernel is not two-dimensional");
  return m;
}

}  // namespace

double fiber_polytope_density(double r, double s) {
  static const WeightMatrix m = build();

  // Minimum-norm particular solution u0 = A^T y / gram.
  Vec4 u0{};
  for (int j = 0; j < 4; ++j) u0[j] = (m.rows[0][j] * r + m.rows[1][j] * s) / m.gram;

  // Fiber in kernel coordinates: α k1_i + β k2_i >= -u0_i.
  struct Line {
    double a, b, c;  // a α + b β >= c
  };
  std::array<Line, 4> lines{};
  for (int i = 0; i < 4; ++i) lines[i] = {m.kernel[0][i], m.kernel[1][i], -u0[i]};

  const double scale = 1.0 + std::abs(r) + std::abs(s);
  const double feas_tol = 1e-12 * scale;
  std::vector<std::array<double, 2>> verts;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
      if (std::abs(det) < 1e-14) continue;
      const double al = (lines[i].c * lines[j].b - lines[i].b * lines[j].c) / det;
      const double be = (lines[i].a * lines[j].c - lines[i].c * lines[j].a) / det;
      const bool ok = std::all_of(lines.begin(), lines.end(), [&](const Line& l) {
        return l.a * al + l.b * be >= l.c - feas_tol;
      });
      if (ok) verts.push_back({al, be});
    }
  }
  if (verts.size() < 3) return 0.0;

  double cx = 0, cy = 0;
  for (const auto& v : verts) {
    cx += v[0];
    cy += v[1];
  }
  cx /= verts.size();
  cy /= verts.size();
  std::sort(verts.begin(), verts.end(), [&](const auto& p, const auto& q) {
    return std::atan2(p[1] - cy, p[0] - cx) < std::atan2(q[1] - cy, q[0] - cx);
  });
  double area2 = 0;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    const auto& p = verts[k];
    const auto& q = verts[(k + 1) % verts.size()];
    area2 += p[0] * q[1] - p[1] * q[0];
  }
  return std::abs(area2) / 2 / std::sqrt(m.gram * m.gram);
}

}  // namespace qsep
