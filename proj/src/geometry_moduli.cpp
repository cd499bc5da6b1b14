#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "bpb/golden.hpp"
#include "bpb/moduli.hpp"
#include "bpb/parallel.hpp"
#include "bpb/sampling.hpp"

namespace bpb {
namespace {

constexpr double kPi = std::numbers::pi;

bool upper_half(const Vector& v) {
  if (v.dim() == 2) return polar_angle(v) < kPi;
  for (double c : v.values()) {
    if (c != 0.0) return c > 0.0;
  }
  return false;
}

double sphere_spacing(const NormedSpace& space, const std::vector<Vector>& pts) {
  if (pts.size() < 2 || space.dim() == 1) return 0.0;
  if (space.dim() == 2) return planar_gap(space, pts);
  double gap = 0.0;
  const std::size_t stride = std::max<std::size_t>(1, pts.size() / 256);
  for (std::size_t i = 0; i < pts.size(); i += stride) {
    double nearest = kInfinity;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double d = space.norm(pts[i] - pts[j]);
      if (d > 1e-14) nearest = std::min(nearest, d);
    }
    if (std::isfinite(nearest)) gap = std::max(gap, nearest);
  }
  return gap;
}

double square_objective(const NormedSpace& space, const Vector& x, const Vector& y) {
  return 0.5 * (space.norm(x + y) + space.norm(x - y));
}

// Compass ascent of (x, y) -> objective on S_X x S_X.
std::pair<Vector, Vector> ascend(const NormedSpace& space, Vector x, Vector y, double& best, double h,
                                 const std::function<double(const Vector&, const Vector&)>& objective) {
  const std::size_t n = space.dim();
  if (n == 1) return {x, y};
  std::size_t evals = 0;
  if (n == 2) {
    double s = polar_angle(x);
    double t = polar_angle(y);
    while (h > 1e-10 && evals < 600) {
      bool improved = false;
      for (int du = -1; du <= 1; ++du) {
        for (int dv = -1; dv <= 1; ++dv) {
          if (du == 0 && dv == 0) continue;
          const Vector xs = sphere_point(space, s + du * h);
          const Vector ys = sphere_point(space, t + dv * h);
          const double v = objective(xs, ys);
          ++evals;
          if (v > best) {
            best = v;
            s += du * h;
            t += dv * h;
            x = xs;
            y = ys;
            improved = true;
          }
        }
      }
      if (!improved) h /= 2.0;
    }
    return {x, y};
  }
  while (h > 1e-9 && evals < 4000) {
    bool improved = false;
    for (std::size_t k = 0; k < 2 * n; ++k) {
      for (double sgn : {1.0, -1.0}) {
        Vector xs = x;
        Vector ys = y;
        (k < n ? xs[k] : ys[k - n]) += sgn * h;
        if (xs.is_zero() || ys.is_zero()) continue;
        xs /= space.norm(xs);
        ys /= space.norm(ys);
        const double v = objective(xs, ys);
        ++evals;
        if (v > best) {
          best = v;
          x = xs;
          y = ys;
          improved = true;
        }
      }
    }
    if (!improved) h /= 2.0;
  }
  return {x, y};
}

}  // namespace

AlphaReport estimate_alpha(const NormedSpace& space, const EstimatorConfig& config) {
  config.validate();
  if (space.dim() > 4) throw Error(ErrorKind::InvalidSpace, "estimators are limited to dimension 4");
  const auto sphere = sphere_sample(space, config.resolution, config.seed);
  std::vector<std::size_t> firsts;
  for (std::size_t i = 0; i < sphere.size(); ++i) {
    if (upper_half(sphere[i])) firsts.push_back(i);
  }
  std::vector<double> value(firsts.size());
  std::vector<std::size_t> partner(firsts.size());
  parallel_for(firsts.size(), thread_count(config.threads), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t a = lo; a < hi; ++a) {
      const Vector& x = sphere[firsts[a]];
      double best = -1.0;
      std::size_t arg = 0;
      for (std::size_t j = 0; j < sphere.size(); ++j) {
        const double v = square_objective(space, x, sphere[j]);
        if (v > best) {
          best = v;
          arg = j;
        }
      }
      value[a] = best;
      partner[a] = arg;
    }
  });

  std::vector<std::size_t> order(firsts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value[a] > value[b]; });

  const double gap = sphere_spacing(space, sphere);
  const double step = space.dim() == 2 ? 2.0 * kPi / static_cast<double>(config.resolution) : std::max(gap, 1e-3);
  const auto objective = [&](const Vector& x, const Vector& y) { return square_objective(space, x, y); };
  double best = -1.0;
  std::pair<Vector, Vector> maximizer;
  for (std::size_t r = 0; r < std::min<std::size_t>(3, order.size()); ++r) {
    const std::size_t a = order[r];
    double v = value[a];
    auto pair = ascend(space, sphere[firsts[a]], sphere[partner[a]], v, step, objective);
    if (v > best) {
      best = v;
      maximizer = pair;
    }
  }
  return {2.0 - best, maximizer, gap};
}

double alpha_interior_audit(const NormedSpace& space, std::size_t count, std::uint64_t seed) {
  const std::size_t n = space.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] {
    Vector u(n);
    do {
      for (std::size_t k = 0; k < n; ++k) u[k] = gauss(rng);
    } while (u.is_zero());
    return u * (unit(rng) / space.norm(u));
  };
  double best = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Vector x = draw();
    const Vector y = draw();
    best = std::max(best, square_objective(space, x, y));
  }
  return best;
}

ConvexityReport estimate_convexity_modulus(const NormedSpace& space, double eps, const EstimatorConfig& config) {
  config.validate();
  if (!(eps > 0.0 && eps <= 2.0)) throw Error(ErrorKind::Regime, "eps must lie in (0, 2]");
  if (space.dim() > 4) throw Error(ErrorKind::InvalidSpace, "estimators are limited to dimension 4");
  const std::size_t n = space.dim();

  if (n == 1) {
    if (std::abs(eps - 2.0) > config.tol) throw Error(ErrorKind::EmptySample, "S_R has no pair at distance eps < 2");
    return {eps, 1.0, 0.0};
  }

  const auto sphere = sphere_sample(space, config.resolution, config.seed);
  const double gap = sphere_spacing(space, sphere);

  if (n == 2) {
    // Along S_X the distance to x grows monotonically up to -x, and the
    // distance to -x shrinks, so the best partner at distance eps is the
    // first one reached in either direction.
    auto best_partner = [&](double a) {
      const Vector x = sphere_point(space, a);
      auto chord = [&](double t) { return space.norm(x - sphere_point(space, t)); };
      double result = 0.0;
      for (double dir : {1.0, -1.0}) {
        double near = 0.0;
        double far = kPi;
        if (chord(a + dir * far) < eps) {
          near = far;
        } else {
          for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (near + far);
            (chord(a + dir * mid) >= eps ? far : near) = mid;
          }
          near = far;
        }
        result = std::max(result, space.norm(x + sphere_point(space, a + dir * near)) / 2.0);
      }
      return result;
    };
    std::vector<double> angles;
    for (const auto& v : sphere) {
      if (upper_half(v)) angles.push_back(polar_angle(v));
    }
    std::vector<double> values(angles.size());
    parallel_for(angles.size(), thread_count(config.threads), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) values[i] = best_partner(angles[i]);
    });
    const std::size_t arg = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
    double best = values[arg];
    const double h = 2.0 * kPi / static_cast<double>(config.resolution);
    const ScalarMin r = golden_min([&](double a) { return -best_partner(a); }, angles[arg] - h, angles[arg] + h, 1e-12);
    best = std::max(best, -r.value);
    return {eps, 1.0 - best, gap};
  }

  const double band = 2.0 * gap;
  double best = -1.0;
  for (std::size_t i = 0; i < sphere.size(); ++i) {
    if (!upper_half(sphere[i])) continue;
    for (const auto& y : sphere) {
      if (std::abs(space.norm(sphere[i] - y) - eps) <= band) best = std::max(best, space.norm(sphere[i] + y) / 2.0);
    }
  }
  if (best < 0.0) throw Error(ErrorKind::EmptySample, "no sampled pair in the eps band");
  return {eps, 1.0 - best, band};
}

SelfDualReport check_alpha_self_dual(const NormedSpace& space, const EstimatorConfig& config) {
  if (space.dim() > 3) throw Error(ErrorKind::InvalidSpace, "self-duality check is limited to dimension 3");
  return {estimate_alpha(space, config), estimate_alpha(space.dual(), config)};
}

}  // namespace bpb
