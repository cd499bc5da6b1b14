#include "bpb/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

#include "bpb/parallel.hpp"
#include "bpb/sampling.hpp"

namespace bpb {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Candidate {
  Vector x;
  Functional f;
};

// Representative of each antipodal class: upper half plane in 2-D, positive
// first non-zero coordinate otherwise.
template <class Tag>
bool upper_half(const Coords<Tag>& v) {
  if (v.dim() == 2) return polar_angle(v) < std::numbers::pi;
  for (double c : v.values()) {
    if (c != 0.0) return c > 0.0;
  }
  return false;
}

template <class Tag, class Dist>
double spacing(const std::vector<Coords<Tag>>& pts, Dist&& dist) {
  if (pts.size() < 2) return 0.0;
  if (pts.front().dim() == 2) {
    double gap = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) gap = std::max(gap, dist(pts[i], pts[(i + 1) % pts.size()]));
    return gap;
  }
  if (pts.front().dim() == 1) return 0.0;
  double gap = 0.0;
  const std::size_t stride = std::max<std::size_t>(1, pts.size() / 256);
  for (std::size_t i = 0; i < pts.size(); i += stride) {
    double nearest = kInfinity;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double d = dist(pts[i], pts[j]);
      if (d > 1e-14) nearest = std::min(nearest, d);
    }
    if (std::isfinite(nearest)) gap = std::max(gap, nearest);
  }
  return gap;
}

class MutSearch {
 public:
  MutSearch(const NormedSpace& space, const ModulusQuery& q, const EstimatorConfig& config, const PiCloud& cloud)
      : space_(space), q_(q), config_(config), cloud_(cloud), tau_(1.0 - q.delta + config.delta_slack) {}

  Estimate run() {
    const std::size_t n = space_.dim();
    std::vector<Vector> xs;
    double gap_x = 0.0;
    if (q_.mu == 0.0) {
      xs.emplace_back(n);
    } else {
      const auto ring = sphere_sample(space_, config_.outer_resolution, config_.seed);
      gap_x = q_.mu * spacing(ring, [&](const Vector& a, const Vector& b) { return space_.norm(a - b); });
      for (const auto& v : ring) {
        if (upper_half(v)) xs.push_back(v * q_.mu);
      }
    }
    std::vector<Functional> fs;
    double gap_f = 0.0;
    if (q_.theta == 0.0) {
      fs.emplace_back(n);
    } else {
      const auto ring = dual_sphere_sample(space_, config_.outer_resolution, config_.seed ^ 0x9e3779b97f4a7c15ULL);
      gap_f = q_.theta * spacing(ring, [&](const Functional& a, const Functional& b) { return space_.dual_norm(a - b); });
      for (const auto& g : ring) fs.push_back(g * q_.theta);
    }

    std::vector<Candidate> pool;
    for (const auto& x : xs) {
      for (const auto& f : fs) {
        if (action(f, x) >= tau_) pool.push_back({x, f});
      }
      if (n == 2 && q_.mu > 0.0 && q_.theta > 0.0) add_boundary(x, fs, pool);
      if (q_.mu > 0.0 && q_.theta > 0.0) {
        const Functional apex = space_.support_functional(x) * q_.theta;
        if (action(apex, x) >= tau_) pool.push_back({x, apex});
      }
    }
    const auto& pi = cloud_.samples();
    const std::size_t stride = std::max<std::size_t>(1, pi.size() / 256);
    for (std::size_t i = 0; i < pi.size(); i += stride) {
      const Vector x = pi[i].first * q_.mu;
      const Functional f = pi[i].second * q_.theta;
      if (action(f, x) >= tau_) pool.push_back({x, f});
    }
    if (pool.empty()) throw Error(ErrorKind::EmptySample, "no sampled pair satisfies the constraint");

    const std::size_t threads = thread_count(config_.threads);
    std::vector<double> coarse(pool.size());
    parallel_for(pool.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) coarse[i] = cloud_.coarse(pool[i].x, pool[i].f).first;
    });

    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return coarse[a] > coarse[b]; });
    const double radius = 2.0 * std::max({gap_x, gap_f, 1e-6});
    std::vector<std::size_t> chosen;
    for (std::size_t idx : order) {
      if (chosen.size() >= config_.refine_candidates) break;
      const bool close = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return d_inf(space_, pool[idx].x, pool[idx].f, pool[c].x, pool[c].f) < radius;
      });
      if (!close) chosen.push_back(idx);
    }

    std::vector<double> refined(chosen.size());
    parallel_for(chosen.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) refined[i] = refine(pool[chosen[i]], gap_x, gap_f);
    });
    const double value = *std::max_element(refined.begin(), refined.end());
    return {value, std::max(gap_x, gap_f) + cloud_.mesh_gap()};
  }

 private:
  Functional dual_at(double t) const { return dual_sphere_point(space_, t) * q_.theta; }

  void add_boundary(const Vector& x, const std::vector<Functional>& fs, std::vector<Candidate>& pool) const {
    const std::size_t m = fs.size();
    for (std::size_t j = 0; j < m; ++j) {
      const Functional& a = fs[j];
      const Functional& b = fs[(j + 1) % m];
      const bool fa = action(a, x) >= tau_;
      const bool fb = action(b, x) >= tau_;
      if (fa == fb) continue;
      double t_in = polar_angle(fa ? a : b);
      double t_out = polar_angle(fa ? b : a);
      t_out = t_in + std::remainder(t_out - t_in, kTwoPi);
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (t_in + t_out);
        (action(dual_at(mid), x) >= tau_ ? t_in : t_out) = mid;
      }
      const Functional f = dual_at(t_in);
      if (action(f, x) >= tau_) pool.push_back({x, f});
    }
  }

  // Parameters: (angle of x, angle of f) in the plane, raw coordinates of x
  // and f otherwise. Frozen parameters belong to zero radii.
  std::vector<double> params(const Candidate& c) const {
    if (space_.dim() == 2) return {polar_angle(c.x), polar_angle(c.f)};
    std::vector<double> p(c.x.values().begin(), c.x.values().end());
    p.insert(p.end(), c.f.values().begin(), c.f.values().end());
    return p;
  }

  Candidate realise(const std::vector<double>& p) const {
    const std::size_t n = space_.dim();
    if (n == 2) {
      const Vector x = q_.mu == 0.0 ? Vector(2) : sphere_point(space_, p[0]) * q_.mu;
      const Functional f = q_.theta == 0.0 ? Functional(2) : dual_at(p[1]);
      return {x, f};
    }
    Vector x = Vector::from(std::span<const double>(p.data(), n));
    Functional f = Functional::from(std::span<const double>(p.data() + n, n));
    x = q_.mu == 0.0 || x.is_zero() ? Vector(n) : x * (q_.mu / space_.norm(x));
    f = q_.theta == 0.0 || f.is_zero() ? Functional(n) : f * (q_.theta / space_.dual_norm(f));
    return {x, f};
  }

  // Moves an infeasible planar parameter onto the constraint boundary by
  // changing only coordinate k (0 = point angle, 1 = functional angle). For a
  // fixed partner the feasible set on the sphere is one arc around the
  // supporting direction, so bisection towards it lands on the boundary.
  std::optional<std::vector<double>> slide(std::vector<double> p, std::size_t k) const {
    if ((k == 0 && q_.mu == 0.0) || (k == 1 && q_.theta == 0.0)) return std::nullopt;
    const Candidate c = realise(p);
    double good = k == 1 ? polar_angle(space_.support_functional(c.x)) : polar_angle(space_.norming_point(c.f));
    double bad = p[k];
    good = bad + std::remainder(good - bad, kTwoPi);
    p[k] = good;
    if (!feasible(p)) return std::nullopt;
    for (int it = 0; it < 50; ++it) {
      p[k] = 0.5 * (good + bad);
      (feasible(p) ? good : bad) = p[k];
    }
    p[k] = good;
    return p;
  }

  bool feasible(const std::vector<double>& p) const {
    const Candidate c = realise(p);
    return action(c.f, c.x) >= tau_;
  }

  double refine(const Candidate& start, double gap_x, double gap_f) const {
    double best = cloud_.nearest(start.x, start.f).distance;
    const std::size_t n = space_.dim();
    if (n == 1) return best;

    std::vector<double> p = params(start);
    const std::size_t dims = p.size();
    std::vector<bool> active(dims, true);
    for (std::size_t k = 0; k < dims; ++k) {
      const bool is_x = n == 2 ? k == 0 : k < n;
      if ((is_x && q_.mu == 0.0) || (!is_x && q_.theta == 0.0)) active[k] = false;
    }
    std::vector<std::vector<double>> moves;
    if (n == 2) {
      for (int du = -1; du <= 1; ++du) {
        for (int dv = -1; dv <= 1; ++dv) {
          if ((du == 0 && dv == 0) || (du != 0 && !active[0]) || (dv != 0 && !active[1])) continue;
          moves.push_back({static_cast<double>(du), static_cast<double>(dv)});
        }
      }
    } else {
      for (std::size_t k = 0; k < dims; ++k) {
        if (!active[k]) continue;
        for (double s : {1.0, -1.0}) {
          std::vector<double> d(dims, 0.0);
          d[k] = s;
          moves.push_back(d);
        }
      }
    }
    if (moves.empty()) return best;

    double h = n == 2 ? kTwoPi / static_cast<double>(config_.outer_resolution) : std::max({gap_x, gap_f, 0.05});
    const double h_min = n == 2 ? 1e-5 : 1e-5 * std::max(q_.mu, q_.theta);
    std::size_t evals = 0;
    while (h >= h_min && evals < 400) {
      bool improved = false;
      for (const auto& d : moves) {
        std::vector<double> trial(dims);
        for (std::size_t k = 0; k < dims; ++k) trial[k] = p[k] + h * d[k];
        std::vector<std::vector<double>> trials;
        if (feasible(trial)) {
          trials.push_back(trial);
        } else {
          // Largest feasible step along d.
          double lo = 0.0;
          double hi = 1.0;
          for (int it = 0; it < 40; ++it) {
            const double mid = 0.5 * (lo + hi);
            std::vector<double> t(dims);
            for (std::size_t k = 0; k < dims; ++k) t[k] = p[k] + mid * h * d[k];
            (feasible(t) ? lo : hi) = mid;
          }
          if (lo > 0.0) {
            std::vector<double> t(dims);
            for (std::size_t k = 0; k < dims; ++k) t[k] = p[k] + lo * h * d[k];
            trials.push_back(t);
          }
          // Step along the boundary instead of stopping at it.
          if (n == 2) {
            if (auto slid = slide(trial, d[0] != 0.0 ? 1 : 0)) trials.push_back(*slid);
          }
        }
        for (const auto& t : trials) {
          const Candidate c = realise(t);
          const double v = cloud_.nearest(c.x, c.f).distance;
          ++evals;
          if (v > best + 1e-15) {
            best = v;
            p = t;
            improved = true;
          }
        }
      }
      if (!improved) h /= 2.0;
    }
    return best;
  }

  const NormedSpace& space_;
  ModulusQuery q_;
  const EstimatorConfig& config_;
  const PiCloud& cloud_;
  double tau_;
};

Estimate phi_mut_with(const NormedSpace& space, const ModulusQuery& q, const EstimatorConfig& config,
                      const PiCloud& cloud) {
  if (!q.feasible()) throw Error(ErrorKind::Regime, "constraint set is empty: mu * theta < 1 - delta");
  return MutSearch(space, q, config, cloud).run();
}

void check_space(const NormedSpace& space) {
  if (space.dim() > 4) throw Error(ErrorKind::InvalidSpace, "estimators are limited to dimension 4");
}

}  // namespace

Estimate estimate_phi_mut(const NormedSpace& space, const ModulusQuery& q, const EstimatorConfig& config) {
  config.validate();
  check_space(space);
  if (!q.feasible()) throw Error(ErrorKind::Regime, "constraint set is empty: mu * theta < 1 - delta");
  const PiCloud cloud(space, config);
  return phi_mut_with(space, q, config, cloud);
}

Estimate hausdorff_modulus_set(const NormedSpace& space, double delta, ModulusMode mode, const EstimatorConfig& config) {
  config.validate();
  check_space(space);
  if (!(delta > 0.0 && delta < 2.0)) throw Error(ErrorKind::Regime, "delta must lie in (0, 2)");
  const PiCloud cloud(space, config);
  if (mode == ModulusMode::Sphere) return phi_mut_with(space, ModulusQuery::make(1.0, 1.0, delta), config, cloud);

  static constexpr double radii[] = {1.0, 0.75, 0.5, 0.25, 0.0};
  Estimate out{0.0, 0.0};
  bool any = false;
  for (double mu : radii) {
    for (double theta : radii) {
      const ModulusQuery q = ModulusQuery::make(mu, theta, delta);
      if (!q.feasible() || mu * theta < 1.0 - delta + config.delta_slack) continue;
      const Estimate e = phi_mut_with(space, q, config, cloud);
      out.value = std::max(out.value, e.value);
      out.mesh_error = std::max(out.mesh_error, e.mesh_error);
      any = true;
    }
  }
  if (!any) throw Error(ErrorKind::EmptySample, "no radius pair satisfies the constraint");
  out.mesh_error += 0.125;
  return out;
}

Estimate estimate_phi(const NormedSpace& space, double delta, ModulusMode mode, const EstimatorConfig& config) {
  return hausdorff_modulus_set(space, delta, mode, config);
}

}  // namespace bpb
