#include "bpb/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace bpb {

void EstimatorConfig::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidConfig, "tol must be positive");
  if (resolution < 8) throw Error(ErrorKind::InvalidConfig, "resolution must be at least 8");
  if (outer_resolution < 8) throw Error(ErrorKind::InvalidConfig, "outer_resolution must be at least 8");
  if (!(delta_slack >= 0.0)) throw Error(ErrorKind::InvalidConfig, "delta_slack must be nonnegative");
}

double polar_angle(double x, double y) {
  const double a = std::atan2(y, x);
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

namespace {

// cos and sin of 2 pi i / n, exact at multiples of pi / 4.
std::pair<double, double> unit_direction(std::size_t i, std::size_t n) {
  if ((8 * i) % n == 0) {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    static constexpr double c[8] = {1.0, h, 0.0, -h, -1.0, -h, 0.0, h};
    static constexpr double s[8] = {0.0, h, 1.0, h, 0.0, -h, -1.0, -h};
    const std::size_t k = (8 * i) / n % 8;
    return {c[k], s[k]};
  }
  const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
  return {std::cos(t), std::sin(t)};
}

struct Tagged {
  double angle;
  bool extreme;
  Vector v;
};

template <class Norm>
std::vector<Vector> planar_ring(std::size_t resolution, const std::optional<std::vector<Vector>>& extreme,
                                Norm&& norm) {
  std::vector<Tagged> pts;
  pts.reserve(resolution + (extreme ? extreme->size() : 0));
  if (extreme) {
    for (const auto& e : *extreme) {
      const Vector v = e / norm(e);
      pts.push_back({polar_angle(v), true, v});
    }
  }
  for (std::size_t i = 0; i < resolution; ++i) {
    const auto [c, s] = unit_direction(i, resolution);
    Vector u{c, s};
    u /= norm(u);
    pts.push_back({polar_angle(u), false, u});
  }
  std::stable_sort(pts.begin(), pts.end(), [](const Tagged& a, const Tagged& b) {
    return a.angle < b.angle || (a.angle == b.angle && a.extreme && !b.extreme);
  });
  std::vector<Vector> out;
  out.reserve(pts.size());
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i;
    std::size_t keep = i;
    while (j < pts.size() && pts[j].angle - pts[i].angle <= 1e-12) {
      if (pts[j].extreme && !pts[keep].extreme) keep = j;
      ++j;
    }
    out.push_back(pts[keep].v);
    i = j;
  }
  // Points just below 2 pi that coincide with the first one.
  while (out.size() > 1 && 2.0 * std::numbers::pi - polar_angle(out.back()) + polar_angle(out.front()) <= 1e-12) {
    out.pop_back();
  }
  return out;
}

template <class Norm>
std::vector<Vector> cube_sample(std::size_t n, std::size_t resolution, std::uint64_t seed,
                                const std::optional<std::vector<Vector>>& extreme, Norm&& norm) {
  const double root = std::pow(static_cast<double>(resolution), 1.0 / static_cast<double>(n - 1));
  const std::size_t m = std::max<std::size_t>(3, 2 * static_cast<std::size_t>(root / 2.0) + 1);
  std::vector<Vector> out;
  if (extreme) {
    for (const auto& e : *extreme) out.push_back(e / norm(e));
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= m;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Vector u(n);
    std::size_t r = idx;
    bool surface = false;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t c = r % m;
      r /= m;
      u[k] = -1.0 + 2.0 * static_cast<double>(c) / static_cast<double>(m - 1);
      if (c == 0 || c == m - 1) surface = true;
    }
    if (surface) out.push_back(u / norm(u));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (std::size_t i = 0; i < resolution; ++i) {
    Vector u(n);
    do {
      for (std::size_t k = 0; k < n; ++k) u[k] = gauss(rng);
    } while (u.is_zero());
    out.push_back(u / norm(u));
  }
  return out;
}

template <class Norm>
std::vector<Vector> generic_sample(std::size_t n, std::size_t resolution, std::uint64_t seed,
                                   const std::optional<std::vector<Vector>>& extreme, Norm&& norm) {
  if (resolution < 4) throw Error(ErrorKind::InvalidConfig, "sphere resolution must be at least 4");
  if (n > 4) throw Error(ErrorKind::InvalidSpace, "sphere sampling is limited to dimension 4");
  if (n == 1) {
    const Vector one{1.0};
    const Vector u = one / norm(one);
    return {u, -u};
  }
  if (n == 2) return planar_ring(resolution, extreme, norm);
  return cube_sample(n, resolution, seed, extreme, norm);
}

}  // namespace

std::vector<Vector> sphere_sample(const NormedSpace& space, std::size_t resolution, std::uint64_t seed) {
  return generic_sample(space.dim(), resolution, seed, space.extreme_points(),
                        [&](const Vector& v) { return space.norm(v); });
}

std::vector<Vector> sphere_sample(const NormedSpace& space, const EstimatorConfig& config) {
  config.validate();
  return sphere_sample(space, config.resolution, config.seed);
}

std::vector<Functional> dual_sphere_sample(const NormedSpace& space, std::size_t resolution, std::uint64_t seed) {
  const NormedSpace dual = space.dual();
  const auto pts = generic_sample(space.dim(), resolution, seed, dual.extreme_points(),
                                  [&](const Vector& v) { return space.dual_norm(as_functional(v)); });
  std::vector<Functional> out;
  out.reserve(pts.size());
  for (const auto& v : pts) out.push_back(as_functional(v));
  return out;
}

Vector sphere_point(const NormedSpace& space, double t) {
  const Vector u{std::cos(t), std::sin(t)};
  return u / space.norm(u);
}

Functional dual_sphere_point(const NormedSpace& space, double t) {
  const Functional g{std::cos(t), std::sin(t)};
  return g / space.dual_norm(g);
}

double planar_gap(const NormedSpace& space, const std::vector<Vector>& ring) {
  double gap = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    gap = std::max(gap, space.norm(ring[(i + 1) % ring.size()] - ring[i]));
  }
  return gap;
}

double planar_dual_gap(const NormedSpace& space, const std::vector<Functional>& ring) {
  double gap = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    gap = std::max(gap, space.dual_norm(ring[(i + 1) % ring.size()] - ring[i]));
  }
  return gap;
}

}  // namespace bpb
