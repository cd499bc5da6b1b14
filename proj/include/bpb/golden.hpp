#pragma once

#include <cmath>
#include <utility>

namespace bpb {

struct ScalarMin {
  double t;
  double value;
};

/// Golden-section minimisation of f on [a, b]. Returns the best point seen,
/// including the end points.
template <class F>
ScalarMin golden_min(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ScalarMin best{a, f(a)};
  const double fb = f(b);
  if (fb < best.value) best = {b, fb};
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && std::abs(b - a) > tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (fc < best.value) best = {c, fc};
    if (fd < best.value) best = {d, fd};
  }
  return best;
}

/// Sample f at n + 1 equispaced points of [a, b], then golden-refine the
/// bracket around the best sample.
template <class F>
ScalarMin bracketed_min(F&& f, double a, double b, int n = 8, double tol = 1e-12) {
  if (a == b) return {a, f(a)};
  const double h = (b - a) / n;
  int best_i = 0;
  double best_v = f(a);
  for (int i = 1; i <= n; ++i) {
    const double v = f(a + h * i);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  const double lo = a + h * std::max(best_i - 1, 0);
  const double hi = a + h * std::min(best_i + 1, n);
  ScalarMin r = golden_min(f, lo, hi, tol);
  if (best_v < r.value) r = {a + h * best_i, best_v};
  return r;
}

}  // namespace bpb
