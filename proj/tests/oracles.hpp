#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library: spaces are plain vertex lists or the Euclidean
// circle, and every minimum is taken by exhaustive scan plus golden refine.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using P2 = std::array<double, 2>;

inline double golden(auto&& f, double a, double b, int iters = 120) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  double best = std::min({f(a), f(b), fc, fd});
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
    best = std::min({best, fc, fd});
  }
  return best;
}

inline double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// d_inf((x, f), Pi(l2^2)) = min over unit u of max(|x - u|, |f - u|).
inline double circle_distance(P2 x, P2 f, int resolution = 4000) {
  auto obj = [&](double t) {
    const double c = std::cos(t), s = std::sin(t);
    return std::max(hypot2(x[0] - c, x[1] - s), hypot2(f[0] - c, f[1] - s));
  };
  const double h = 2.0 * std::numbers::pi / resolution;
  int best = 0;
  double bv = obj(0.0);
  for (int i = 1; i < resolution; ++i) {
    const double v = obj(i * h);
    if (v < bv) bv = v, best = i;
  }
  return std::min(bv, golden(obj, (best - 1) * h, (best + 1) * h));
}

// sup of the circle distance over x = (mu, 0), f = theta (cos t, sin t) with
// mu theta cos t >= 1 - delta. Rotations act transitively, so this is the
// Hilbert modulus with prescribed norms.
inline double hilbert_modulus_brute(double mu, double theta, double delta, int steps = 400) {
  const double c = mu * theta == 0.0 ? 2.0 : (1.0 - delta) / (mu * theta);
  if (c > 1.0) return std::numeric_limits<double>::quiet_NaN();
  const double tmax = c < -1.0 ? std::numbers::pi : std::acos(c);
  auto neg = [&](double t) {
    return -circle_distance({mu, 0.0}, {theta * std::cos(t), theta * std::sin(t)}, 1000);
  };
  double best = 0.0, bt = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double t = tmax * i / steps;
    const double v = -neg(t);
    if (v > best) best = v, bt = t;
  }
  const double h = tmax / steps;
  return std::max(best, -golden(neg, std::max(0.0, bt - h), std::min(tmax, bt + h), 60));
}

// A centrally symmetric polygon given by its vertices in counter-clockwise
// order. Facet k is the edge from vertex k to vertex k + 1.
struct Polygon {
  std::vector<P2> v;
  std::vector<P2> a;

  explicit Polygon(std::vector<P2> vertices) : v(std::move(vertices)) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      const P2 p = v[k], q = v[(k + 1) % v.size()];
      const double c = p[0] * q[1] - p[1] * q[0];
      a.push_back({(q[1] - p[1]) / c, (p[0] - q[0]) / c});
    }
  }

  double norm(P2 x) const {
    double m = 0.0;
    for (const auto& f : a) m = std::max(m, f[0] * x[0] + f[1] * x[1]);
    return m;
  }
  double dual_norm(P2 g) const {
    double m = 0.0;
    for (const auto& w : v) m = std::max(m, std::abs(g[0] * w[0] + g[1] * w[1]));
    return m;
  }

  // Pi is the union of (edge k, facet k) and (vertex k, segment between the
  // facets of its two edges). Along each piece d_inf is the max of a constant
  // and a convex function of the parameter, so golden search is exact.
  double pi_distance(P2 x, P2 f) const {
    const std::size_t n = v.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      const P2 p = v[k], q = v[(k + 1) % n];
      const double df = dual_norm({f[0] - a[k][0], f[1] - a[k][1]});
      auto edge = [&](double t) {
        const P2 y{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
        return std::max(norm({x[0] - y[0], x[1] - y[1]}), df);
      };
      best = std::min(best, golden(edge, 0.0, 1.0));

      const P2 g0 = a[(k + n - 1) % n], g1 = a[k];
      const double dx = norm({x[0] - p[0], x[1] - p[1]});
      auto fan = [&](double s) {
        const P2 g{g0[0] + s * (g1[0] - g0[0]), g0[1] + s * (g1[1] - g0[1])};
        return std::max(dx, dual_norm({f[0] - g[0], f[1] - g[1]}));
      };
      best = std::min(best, golden(fan, 0.0, 1.0));
    }
    return best;
  }

  // The objective of the non-squareness constant is convex in each argument,
  // so its supremum over the ball is attained at a pair of vertices.
  double alpha() const {
    double s = 0.0;
    for (const auto& p : v) {
      for (const auto& q : v) {
        s = std::max(s, 0.5 * (norm({p[0] + q[0], p[1] + q[1]}) + norm({p[0] - q[0], p[1] - q[1]})));
      }
    }
    return 2.0 - s;
  }
};

inline Polygon square_linf() { return Polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}); }
inline Polygon diamond_l1() { return Polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
inline Polygon regular_hexagon() {
  std::vector<P2> v;
  for (int i = 0; i < 6; ++i) v.push_back({std::cos(i * std::numbers::pi / 3), std::sin(i * std::numbers::pi / 3)});
  return Polygon(std::move(v));
}

// Pi(R) = {(1, 1), (-1, -1)}.
inline double real_enumeration(double x, double f) {
  return std::min(std::max(std::abs(x - 1.0), std::abs(f - 1.0)), std::max(std::abs(x + 1.0), std::abs(f + 1.0)));
}

// Psi written through half-sums; algebraically equal to the usual form.
inline double psi_ref(double mu, double theta, double delta) {
  const long double m = mu, t = theta, d = delta;
  const long double half = (m - t) / 2.0L;
  return static_cast<double>(1.0L - (m + t) / 2.0L + std::sqrt(half * half + 2.0L * (m * t - 1.0L + d)));
}

inline double day_nordlander(double eps) { return 1.0 - std::sqrt(std::max(0.0, 1.0 - eps * eps / 4.0)); }

// Seeded generator of valid (mu, theta, delta) with mu theta > 1 - delta.
struct TripleGen {
  std::mt19937_64 rng;
  explicit TripleGen(std::uint64_t seed) : rng(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  std::array<double, 3> next() {
    while (true) {
      const double mu = uniform(0.0, 1.0), theta = uniform(0.0, 1.0), delta = uniform(1e-3, 2.0 - 1e-3);
      if (mu * theta > 1.0 - delta + 1e-9) return {mu, theta, delta};
    }
  }
};

}  // namespace oracle
