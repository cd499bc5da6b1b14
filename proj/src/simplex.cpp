#include "bpb/simplex.hpp"

#include <limits>

namespace bpb {

double lp_max_unit_rows(const std::vector<std::vector<double>>& rows, const std::vector<double>& c) {
  const std::size_t m = rows.size();
  const std::size_t n = c.size();
  const std::size_t cols = 2 * n + m;  // u+, u-, slacks
  // Row r < m: constraint; row m: objective as z - c.u = 0 (reduced costs).
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].size() != n) throw Error(ErrorKind::DimensionMismatch, "LP row dimension differs");
    for (std::size_t j = 0; j < n; ++j) {
      t[r][j] = rows[r][j];
      t[r][n + j] = -rows[r][j];
    }
    t[r][2 * n + r] = 1.0;
    t[r][cols] = 1.0;
    basis[r] = 2 * n + r;
  }
  for (std::size_t j = 0; j < n; ++j) {
    t[m][j] = -c[j];
    t[m][n + j] = c[j];
  }

  constexpr double eps = 1e-12;
  for (std::size_t iter = 0; iter < 50 * (cols + m); ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (t[m][j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) return t[m][cols];

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] > eps) {
        const double ratio = t[r][cols] / t[r][enter];
        if (ratio < best - eps || (ratio <= best + eps && leave < m && basis[r] < basis[leave])) {
          best = ratio;
          leave = r;
        }
      }
    }
    if (leave == m) throw Error(ErrorKind::InvalidSpace, "unbounded gauge program");

    const double pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter] == 0.0) continue;
      const double factor = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  throw Error(ErrorKind::NotFound, "simplex iteration limit reached");
}

double gauge_lp(const std::vector<Vector>& points, const Vector& v) {
  std::vector<std::vector<double>> rows;
  rows.reserve(points.size());
  for (const auto& w : points) rows.emplace_back(w.values().begin(), w.values().end());
  return lp_max_unit_rows(rows, std::vector<double>(v.values().begin(), v.values().end()));
}

double dual_gauge_lp(const std::vector<Functional>& facets, const Functional& f) {
  std::vector<std::vector<double>> rows;
  rows.reserve(facets.size());
  for (const auto& a : facets) rows.emplace_back(a.values().begin(), a.values().end());
  return lp_max_unit_rows(rows, std::vector<double>(f.values().begin(), f.values().end()));
}

}  // namespace bpb
