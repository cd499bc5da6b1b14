#include "bpb/witnesses.hpp"

#include <algorithm>
#include <cmath>

namespace bpb {
namespace {

constexpr double kPinTol = 1e-10;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::Regime, what);
}

void check_pin(const NormedSpace& space, const Pin& pin) {
  if (pin.first.dim() != space.dim() || pin.second.dim() != space.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "pin dimension differs from its component");
  }
  require(is_in_pi(space, PairState::make(space, pin.first, pin.second), kPinTol), "pin is not in Pi of its component");
}

double radical(const ModulusQuery& q) {
  const double d = q.mu - q.theta;
  return std::sqrt(std::max(0.0, d * d + 8.0 * (q.mu * q.theta - 1.0 + q.delta)));
}

}  // namespace

Pin canonical_pin(const NormedSpace& space) {
  Vector e(space.dim());
  e[0] = 1.0;
  const Vector y = e / space.norm(e);
  return {y, space.support_functional(y)};
}

Witness linf2_witness(const ModulusQuery& q) {
  require(q.regime_psi, "l_inf^2 witness requires mu * theta > 1 - delta");
  const NormedSpace space = NormedSpace::linf(2);
  const double p = psi(q);
  const double bound = phi_upper_bound(q);
  Witness w;
  w.predicted = bound;
  if (p <= std::min(1.0 + q.mu, 1.0 + q.theta) + kRegimeTol) {
    const double k = (q.theta - q.mu + radical(q)) / (4.0 * q.theta);
    w.pair = PairState::make(space, Vector{q.mu, 1.0 - p}, Functional{q.theta * (1.0 - k), q.theta * k});
    w.construction = 1;
  } else if (q.theta <= q.mu) {
    w.pair = PairState::make(space, Vector{q.mu, -q.theta}, Functional{0.0, q.theta});
    w.construction = 2;
  } else {
    w.pair = PairState::make(space, Vector{q.mu, -q.mu}, Functional{(q.theta - q.mu) / 2.0, (q.theta + q.mu) / 2.0});
    w.construction = 3;
  }
  return w;
}

Witness sum1_witness(const NormedSpace& a, const NormedSpace& b, const ModulusQuery& q, const Pin& pin_a,
                     const Pin& pin_b) {
  require(q.regime_sum, "sum witnesses require delta < 1 and 1 - delta < mu * theta <= 2 (1 - delta)");
  check_pin(a, pin_a);
  check_pin(b, pin_b);
  const double p = psi(q);
  const double k = (q.mu - q.theta + radical(q)) / (4.0 * q.mu);
  const Vector x = Vector::concat(pin_a.first * (q.mu * k), pin_b.first * (q.mu * (1.0 - k)));
  const Functional f = Functional::concat(pin_a.second * (1.0 - p), pin_b.second * q.theta);
  return {PairState::make(NormedSpace::sum1(a, b), x, f), p, 0};
}

Witness suminf_witness(const NormedSpace& a, const NormedSpace& b, const ModulusQuery& q, const Pin& pin_a,
                       const Pin& pin_b) {
  require(q.regime_sum, "sum witnesses require delta < 1 and 1 - delta < mu * theta <= 2 (1 - delta)");
  check_pin(a, pin_a);
  check_pin(b, pin_b);
  const double p = psi(q);
  const double k = (q.theta - q.mu + radical(q)) / (4.0 * q.theta);
  const Vector x = Vector::concat(pin_a.first * (1.0 - p), pin_b.first * q.mu);
  const Functional f = Functional::concat(pin_a.second * (k * q.theta), pin_b.second * ((1.0 - k) * q.theta));
  return {PairState::make(NormedSpace::suminf(a, b), x, f), p, 0};
}

Witness real_witness(const ModulusQuery& q) {
  require(q.feasible(), "real-line witness requires mu * theta >= 1 - delta");
  const NormedSpace line = NormedSpace::real_line();
  Witness w;
  if (q.delta <= 1.0) {
    w.pair = PairState::make(line, Vector{q.mu}, Functional{q.theta});
    w.predicted = 1.0 - std::min(q.mu, q.theta);
    return w;
  }
  double f = -q.theta;
  if (q.delta < 1.0 + q.mu * q.theta) {
    require(q.mu > 0.0, "real-line witness requires mu > 0 for 1 < delta < 1 + mu theta");
    f = (1.0 - q.delta) / q.mu;
  }
  w.pair = PairState::make(line, Vector{q.mu}, Functional{f});
  w.predicted = 1.0 + std::min(std::abs(q.mu), std::abs(f));
  return w;
}

}  // namespace bpb
