#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "bpb/space.hpp"

namespace bpb::detail {
namespace {

double cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double polar_angle(const Vector& v) {
  double a = std::atan2(v[1], v[0]);
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

// Subsets of size k of {0..m-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vector> planar_hull(const std::vector<Vector>& points) {
  std::vector<Vector> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorKind::InvalidSpace, "polytope vertices do not span the plane");

  // Andrew's monotone chain; collinear points are dropped so only extreme
  // points remain.
  std::vector<Vector> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 1e-14) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-14) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  auto start = std::min_element(hull.begin(), hull.end(), [](const Vector& a, const Vector& b) {
    return polar_angle(a) < polar_angle(b);
  });
  std::rotate(hull.begin(), start, hull.end());
  return hull;
}

std::vector<Functional> polytope_facets(const std::vector<Vector>& vertices) {
  const std::size_t n = vertices.front().dim();
  std::vector<Functional> facets;

  if (n == 1) {
    double r = 0.0;
    for (const auto& v : vertices) r = std::max(r, std::abs(v[0]));
    facets.push_back(Functional{1.0 / r});
    facets.push_back(Functional{-1.0 / r});
    return facets;
  }

  if (n == 2) {
    const auto hull = planar_hull(vertices);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Vector& p = hull[i];
      const Vector& q = hull[(i + 1) % hull.size()];
      const double c = p[0] * q[1] - p[1] * q[0];
      facets.push_back(Functional{(q[1] - p[1]) / c, (p[0] - q[0]) / c});
    }
    return facets;
  }

  if (n > 4) throw Error(ErrorKind::InvalidSpace, "polytope spaces are supported up to dimension 4");
  const std::size_t m = vertices.size();
  if (m > 64) throw Error(ErrorKind::InvalidSpace, "polytope vertex lists are limited to 64 points");

  for_each_subset(m, n, [&](const std::vector<std::size_t>& subset) {
    Eigen::MatrixXd w(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) w(r, c) = vertices[subset[r]][c];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(w);
    if (lu.rank() < static_cast<Eigen::Index>(n)) return;
    const Eigen::VectorXd a = lu.solve(Eigen::VectorXd::Ones(n));
    Functional f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = a(static_cast<Eigen::Index>(i));
    for (const auto& v : vertices) {
      if (action(f, v) > 1.0 + 1e-9) return;
    }
    for (const auto& g : facets) {
      double diff = 0.0;
      for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(g[i] - f[i]));
      if (diff <= 1e-9) return;
    }
    facets.push_back(f);
  });
  if (facets.size() < 2 * n) throw Error(ErrorKind::InvalidSpace, "polytope vertices do not span the space");
  return facets;
}

}  // namespace bpb::detail
