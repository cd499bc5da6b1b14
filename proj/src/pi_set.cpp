#include "bpb/pi_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bpb/golden.hpp"
#include "bpb/sampling.hpp"

namespace bpb {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) { return std::remainder(a, kTwoPi); }

void check_dims(const NormedSpace& space, const Vector& x, const Functional& f) {
  if (x.dim() != space.dim() || f.dim() != space.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "pair dimension differs from the space");
  }
}

}  // namespace

PairState PairState::make(const NormedSpace& space, const Vector& x, const Functional& f) {
  check_dims(space, x, f);
  return {x, f, space.norm(x), space.dual_norm(f), bpb::action(f, x)};
}

bool is_in_pi(const NormedSpace& space, const PairState& p, double tol) {
  check_dims(space, p.x, p.f);
  return std::abs(p.norm_x - 1.0) <= tol && std::abs(p.norm_f - 1.0) <= tol && std::abs(p.action - 1.0) <= tol;
}

double d_inf(const NormedSpace& space, const Vector& x, const Functional& f, const Vector& y, const Functional& g) {
  return std::max(space.norm(x - y), space.dual_norm(f - g));
}

std::vector<std::pair<Vector, Functional>> sample_pi(const NormedSpace& space, const EstimatorConfig& config) {
  config.validate();
  if (space.dim() > 4) throw Error(ErrorKind::InvalidSpace, "Pi sampling is limited to dimension 4");
  std::vector<std::pair<Vector, Functional>> out;
  for (const auto& y : sphere_sample(space, config.resolution, config.seed)) {
    out.emplace_back(y, space.support_functional(y));
  }
  for (const auto& g : dual_sphere_sample(space, config.resolution, config.seed)) {
    out.emplace_back(space.norming_point(g), g);
  }
  return out;
}

PiCloud::PiCloud(const NormedSpace& space, const EstimatorConfig& config)
    : space_(space), config_(config), samples_(sample_pi(space, config)) {
  const std::size_t n = space_.dim();
  if (n == 2) {
    // Order along the closed curve Pi(X): both angles increase together and
    // differ by less than pi / 2, so their sum orders the pairs.
    std::vector<std::pair<double, std::size_t>> key(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      const double a = polar_angle(samples_[i].first);
      const double b = polar_angle(samples_[i].second);
      double s = 2.0 * a + wrap(b - a);
      s = std::fmod(s + 2.0 * kTwoPi, 2.0 * kTwoPi);
      key[i] = {s, i};
    }
    std::sort(key.begin(), key.end());
    std::vector<std::pair<Vector, Functional>> ordered;
    ordered.reserve(samples_.size());
    for (const auto& [s, i] : key) {
      if (!ordered.empty() && d_inf(space_, ordered.back().first, ordered.back().second, samples_[i].first,
                                    samples_[i].second) <= 1e-15) {
        continue;
      }
      ordered.push_back(samples_[i]);
    }
    samples_ = std::move(ordered);
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      const auto& [y, g] = samples_[i];
      const auto& [y2, g2] = samples_[(i + 1) % samples_.size()];
      gap_ = std::max(gap_, d_inf(space_, y, g, y2, g2));
      primal_angle_.push_back(polar_angle(y));
      dual_angle_.push_back(polar_angle(g));
    }
  } else if (n == 1) {
    std::vector<std::pair<Vector, Functional>> unique;
    for (const auto& s : samples_) {
      if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
    }
    samples_ = std::move(unique);
  } else {
    // Nearest-neighbour spacing over a strided subset of the samples.
    const std::size_t stride = std::max<std::size_t>(1, samples_.size() / 256);
    for (std::size_t i = 0; i < samples_.size(); i += stride) {
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < samples_.size(); ++j) {
        const double d = d_inf(space_, samples_[i].first, samples_[i].second, samples_[j].first, samples_[j].second);
        if (d > 1e-14) nearest = std::min(nearest, d);
      }
      if (std::isfinite(nearest)) gap_ = std::max(gap_, nearest);
    }
  }
}

std::pair<double, std::size_t> PiCloud::coarse(const Vector& x, const Functional& f) const {
  check_dims(space_, x, f);
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const double ex = space_.norm(x - samples_[i].first);
    if (ex >= best) continue;
    const double d = std::max(ex, space_.dual_norm(f - samples_[i].second));
    if (d < best) {
      best = d;
      arg = i;
    }
  }
  return {best, arg};
}

PiWitness PiCloud::local_min(std::size_t i, const Objective& objective, PiWitness start) const {
  PiWitness best = std::move(start);
  const std::size_t n = space_.dim();
  if (n == 1) return best;
  if (n > 2) return descent(objective, std::move(best));

  const std::size_t m = samples_.size();
  const std::size_t prev = (i + m - 1) % m;
  const std::size_t next = (i + 1) % m;
  auto consider = [&](const Vector& y, const Functional& g) {
    const double v = objective(y, g);
    if (v < best.distance) best = {y, g, v};
  };

  const double a = primal_angle_[i];
  const double a_lo = a + std::min(0.0, wrap(primal_angle_[prev] - a));
  const double a_hi = a + std::max(0.0, wrap(primal_angle_[next] - a));
  if (a_hi - a_lo > 1e-15) {
    auto along = [&](double t) {
      const Vector y = sphere_point(space_, t);
      return objective(y, space_.support_functional(y));
    };
    const ScalarMin r = bracketed_min(along, a_lo, a_hi);
    const Vector y = sphere_point(space_, r.t);
    consider(y, space_.support_functional(y));
  }

  const double b = dual_angle_[i];
  const double b_lo = b + std::min(0.0, wrap(dual_angle_[prev] - b));
  const double b_hi = b + std::max(0.0, wrap(dual_angle_[next] - b));
  if (b_hi - b_lo > 1e-15) {
    auto along = [&](double t) {
      const Functional g = dual_sphere_point(space_, t);
      return objective(space_.norming_point(g), g);
    };
    const ScalarMin r = bracketed_min(along, b_lo, b_hi);
    const Functional g = dual_sphere_point(space_, r.t);
    consider(space_.norming_point(g), g);
  }
  return best;
}

PiWitness PiCloud::descent(const Objective& objective, PiWitness best) const {
  const std::size_t n = space_.dim();
  double h = gap_ > 0.0 ? gap_ : 0.05;
  std::size_t evals = 0;
  while (h > 1e-9 && evals < 6000) {
    bool improved = false;
    for (std::size_t k = 0; k < n; ++k) {
      for (double s : {h, -h}) {
        Vector y = best.y;
        y[k] += s;
        if (!y.is_zero()) {
          y /= space_.norm(y);
          const Functional g = space_.support_functional(y);
          const double v = objective(y, g);
          ++evals;
          if (v < best.distance) {
            best = {y, g, v};
            improved = true;
          }
        }
        Functional g = best.g;
        g[k] += s;
        if (!g.is_zero()) {
          g /= space_.dual_norm(g);
          const Vector y2 = space_.norming_point(g);
          const double v = objective(y2, g);
          ++evals;
          if (v < best.distance) {
            best = {y2, g, v};
            improved = true;
          }
        }
      }
    }
    if (!improved) h /= 2.0;
  }
  return best;
}

PiWitness PiCloud::nearest(const Vector& x, const Functional& f) const {
  const auto [d, i] = coarse(x, f);
  PiWitness best{samples_[i].first, samples_[i].second, d};
  if (space_.dim() == 1) return best;

  const Objective distance = [&](const Vector& y, const Functional& g) {
    return d_inf(space_, x, f, y, g);
  };

  if (config_.closed_form_refine && space_.is_euclidean()) {
    // In a Hilbert space the nearest pair is (z, z) with z the projection of
    // x or of f onto the sphere, or a point of the sphere equidistant from
    // both inside span{x, f}.
    const Vector u = x;
    const Vector v = as_vector(f);
    auto consider = [&](const Vector& z) {
      const double r = d_inf(space_, x, f, z, as_functional(z));
      if (r < best.distance) best = {z, as_functional(z), r};
    };
    if (!u.is_zero()) consider(u / euclidean_norm(u));
    if (!v.is_zero()) consider(v / euclidean_norm(v));
    const Vector diff = v - u;
    const double len = euclidean_norm(diff);
    if (len > 0.0) {
      const Vector e1 = diff / len;
      const Vector c = (u + v) / 2.0;
      const double alpha = dot(c, e1);
      Vector e2 = c - e1 * alpha;
      if (euclidean_norm(e2) <= 1e-12) {
        for (std::size_t k = 0; k < e2.dim(); ++k) {
          Vector basis(e2.dim());
          basis[k] = 1.0;
          e2 = basis - e1 * dot(basis, e1);
          if (euclidean_norm(e2) > 0.5) break;
        }
      }
      e2 /= euclidean_norm(e2);
      if (std::abs(alpha) <= 1.0) {
        const double t = std::sqrt(1.0 - alpha * alpha);
        consider(e1 * alpha + e2 * t);
        consider(e1 * alpha - e2 * t);
      }
    }
  }
  if (space_.dim() != 2) return local_min(i, distance, std::move(best));

  // The distance along Pi(X) can have several basins of nearly equal depth;
  // refine every local minimum of the sampled distance that can still hold
  // the true minimum.
  const std::size_t m = samples_.size();
  const double reach = d + 2.0 * gap_;
  std::vector<double> dist(m, std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < m; ++j) {
    const double ex = space_.norm(x - samples_[j].first);
    if (ex > reach) continue;
    dist[j] = std::max(ex, space_.dual_norm(f - samples_[j].second));
  }
  std::vector<std::size_t> basins;
  for (std::size_t j = 0; j < m; ++j) {
    if (dist[j] > reach) continue;
    if (dist[j] <= dist[(j + m - 1) % m] && dist[j] <= dist[(j + 1) % m]) basins.push_back(j);
  }
  std::stable_sort(basins.begin(), basins.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
  if (basins.size() > 4) basins.resize(4);
  if (std::find(basins.begin(), basins.end(), i) == basins.end()) basins.insert(basins.begin(), i);
  for (std::size_t j : basins) best = local_min(j, distance, std::move(best));
  return best;
}

PiWitness distance_to_pi(const NormedSpace& space, const PairState& p, const EstimatorConfig& config) {
  check_dims(space, p.x, p.f);
  return PiCloud(space, config).nearest(p.x, p.f);
}

}  // namespace bpb
