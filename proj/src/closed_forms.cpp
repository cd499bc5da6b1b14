#include "bpb/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bpb {
namespace {

double root(double radicand) { return std::sqrt(std::max(0.0, radicand)); }

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::Regime, what);
}

}  // namespace

ModulusQuery ModulusQuery::make(double mu, double theta, double delta) {
  require(std::isfinite(mu) && mu >= 0.0 && mu <= 1.0, "mu must lie in [0, 1]");
  require(std::isfinite(theta) && theta >= 0.0 && theta <= 1.0, "theta must lie in [0, 1]");
  require(std::isfinite(delta) && delta > 0.0 && delta < 2.0, "delta must lie in (0, 2)");
  ModulusQuery q;
  q.mu = mu;
  q.theta = theta;
  q.delta = delta;
  const double gap = mu * theta - (1.0 - delta);
  q.regime_psi = gap > 0.0;
  q.regime_eq = std::abs(gap) <= kRegimeTol;
  q.regime_sum = delta < 1.0 && gap > 0.0 && mu * theta <= 2.0 * (1.0 - delta) + kRegimeTol;
  return q;
}

double psi(const ModulusQuery& q) {
  require(q.feasible(), "psi requires mu * theta >= 1 - delta");
  const double d = q.mu - q.theta;
  return (2.0 - (q.mu + q.theta) + root(d * d + 8.0 * (q.mu * q.theta - 1.0 + q.delta))) / 2.0;
}

double phi_upper_bound(const ModulusQuery& q) { return std::min({psi(q), 1.0 + q.mu, 1.0 + q.theta}); }

LowerBound phi_lower_bound(const ModulusQuery& q) {
  require(q.feasible(), "lower bound requires mu * theta >= 1 - delta");
  return {1.0 - std::min(q.mu, q.theta), q.regime_eq};
}

KEta k_eta_auxiliaries(const ModulusQuery& q) {
  require(q.regime_psi, "k and eta require mu * theta > 1 - delta");
  require(q.theta > 0.0, "k and eta require theta > 0");
  require(q.delta < std::min(1.0 + q.mu * q.mu, 1.0 + q.theta * q.theta),
          "k and eta require delta < min(1 + mu^2, 1 + theta^2)");
  const double d = q.mu - q.theta;
  const double r = root(d * d + 8.0 * (q.mu * q.theta - 1.0 + q.delta));
  return {(q.theta - q.mu + r) / (4.0 * q.theta), (q.mu * q.theta - 1.0 + q.delta) / q.theta};
}

double real_line_distance(double x, double f) {
  require(std::abs(x) <= 1.0 && std::abs(f) <= 1.0, "real_line_distance requires |x|, |f| <= 1");
  const double plus = std::max(std::abs(x - 1.0), std::abs(f - 1.0));
  const double minus = std::max(std::abs(x + 1.0), std::abs(f + 1.0));
  return std::min(plus, minus);
}

HilbertPair HilbertPair::make(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "Hilbert pair dimensions differ");
  if (a.dim() < 2) throw Error(ErrorKind::DimensionMismatch, "Hilbert pairs need dimension at least 2");
  require(a.all_finite() && b.all_finite(), "Hilbert pair coordinates must be finite");
  const double na = euclidean_norm(a);
  const double nb = euclidean_norm(b);
  require(na <= 1.0 + kRegimeTol && nb <= 1.0 + kRegimeTol, "Hilbert pair must lie in the unit ball");
  if (na >= nb) return {a, b};
  return {b, a};
}

namespace detail {

HilbertTerms hilbert_terms(const Vector& x, const Vector& y) {
  const Vector d = x - y;
  return {dot(x, x), dot(y, y), dot(x, y), dot(d, d)};
}

bool hilbert_first_branch(const HilbertTerms& t) {
  const double ny = std::sqrt(t.yy);
  return t.xy >= t.yy + ny * (t.xx - t.yy) / 2.0 - kRegimeTol;
}

double hilbert_first_value(const HilbertTerms& t) { return 1.0 - std::sqrt(t.yy); }

double hilbert_second_value(const HilbertTerms& t) {
  const double s = root(t.xx * t.yy - t.xy * t.xy);
  const double diff = t.xx - t.yy;
  const double lambda = (-2.0 * s + root(4.0 * t.dd - diff * diff)) / (2.0 * t.dd);
  return root(1.0 - t.xy - 2.0 * lambda * s);
}

bool phi_h_first_branch(double mu, double theta, double delta) {
  return 1.0 - delta >= theta * theta + theta * (mu * mu - theta * theta) / 2.0 - kRegimeTol;
}

double phi_h_second_value(double mu, double theta, double delta) {
  const double d = mu * mu + theta * theta - 2.0 + 2.0 * delta;
  const double s = root(mu * mu * theta * theta - (1.0 - delta) * (1.0 - delta));
  const double diff = mu * mu - theta * theta;
  const double lambda = (-2.0 * s + root(4.0 * d - diff * diff)) / (2.0 * d);
  return root(delta - 2.0 * lambda * s);
}

}  // namespace detail

double hilbert_distance(const HilbertPair& p) {
  const detail::HilbertTerms t = detail::hilbert_terms(p.x, p.y);
  if (t.dd == 0.0) return 1.0 - std::sqrt(t.xx);
  if (detail::hilbert_first_branch(t)) return detail::hilbert_first_value(t);
  return detail::hilbert_second_value(t);
}

double hilbert_modulus(const ModulusQuery& q) {
  require(q.mu >= q.theta, "Hilbert modulus requires mu >= theta");
  require(q.feasible(), "Hilbert modulus requires mu * theta >= 1 - delta");
  if (detail::phi_h_first_branch(q.mu, q.theta, q.delta)) return 1.0 - q.theta;
  return std::max(1.0 - q.theta, detail::phi_h_second_value(q.mu, q.theta, q.delta));
}

namespace {

void check_nonsquare(double delta, double alpha_tilde) {
  require(delta > 0.0 && delta < 0.5, "non-square bound requires 0 < delta < 1/2");
  require(alpha_tilde > 0.0 && alpha_tilde <= 2.0 - std::numbers::sqrt2 + kAlphaRounding,
          "non-square bound requires 0 < alpha_tilde <= 2 - sqrt(2)");
}

}  // namespace

double nonsquare_phi_bound(double delta, double alpha_tilde) {
  check_nonsquare(delta, alpha_tilde);
  const double breakpoint = 0.5 - alpha_tilde / 6.0;
  const double smooth = std::sqrt(2.0 * delta) * std::sqrt(1.0 - alpha_tilde / 3.0);
  if (std::abs(delta - breakpoint) <= kRegimeTol) return std::min(smooth, 2.0 * delta);
  return delta < breakpoint ? smooth : 2.0 * delta;
}

double nonsquare_k(double delta, double alpha_tilde) {
  check_nonsquare(delta, alpha_tilde);
  const double breakpoint = 0.5 - alpha_tilde / 6.0;
  if (delta <= breakpoint) return std::sqrt(delta / (2.0 - (2.0 / 3.0) * alpha_tilde));
  return 0.5;
}

}  // namespace bpb
