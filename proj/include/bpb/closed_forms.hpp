#pragma once

#include "bpb/coords.hpp"

namespace bpb {

/// Window used to decide the equality regime mu * theta = 1 - delta and the
/// branch boundaries of the Hilbert formulas.
inline constexpr double kRegimeTol = 1e-12;

/// Parameters (mu, theta, delta) with their regimes.
struct ModulusQuery {
  double mu = 1.0;
  double theta = 1.0;
  double delta = 0.5;
  /// mu theta > 1 - delta.
  bool regime_psi = false;
  /// mu theta = 1 - delta, within kRegimeTol.
  bool regime_eq = false;
  /// delta < 1 and 1 - delta < mu theta <= 2 (1 - delta), the upper end
  /// within kRegimeTol.
  bool regime_sum = false;

  /// Throws Error(Regime) unless mu, theta in [0, 1] and delta in (0, 2).
  static ModulusQuery make(double mu, double theta, double delta);

  /// mu theta >= 1 - delta (the constraint set is non-empty).
  bool feasible() const { return regime_psi || regime_eq; }
};

/// Psi(mu, theta, delta). Requires a non-empty constraint set.
double psi(const ModulusQuery& q);

/// min{Psi, 1 + mu, 1 + theta}.
double phi_upper_bound(const ModulusQuery& q);

struct LowerBound {
  double value;
  /// True when mu theta = 1 - delta, where the bound is the exact modulus.
  bool exact;
};

/// 1 - min(mu, theta).
LowerBound phi_lower_bound(const ModulusQuery& q);

struct KEta {
  double k;
  double eta;
};

/// k = (theta - mu + sqrt(...)) / (4 theta), eta = (mu theta - 1 + delta) / theta.
/// Requires regime_psi, theta > 0 and delta < min(1 + mu^2, 1 + theta^2).
KEta k_eta_auxiliaries(const ModulusQuery& q);

/// Distance from (x, f) in R x R to {(1, 1), (-1, -1)}. Requires |x|, |f| <= 1.
double real_line_distance(double x, double f);

/// Two points of a Hilbert space (dimension >= 2) read as a point and a
/// functional, stored with ||x|| >= ||y||.
struct HilbertPair {
  Vector x;
  Vector y;

  /// Swaps the arguments if needed; throws unless both lie in the closed
  /// unit ball and share a dimension >= 2.
  static HilbertPair make(const Vector& a, const Vector& b);
};

/// d_inf((x, y), Pi(H)). For x = y the value is 1 - ||x||.
double hilbert_distance(const HilbertPair& p);

/// Phi_H(mu, theta, delta) for mu >= theta.
double hilbert_modulus(const ModulusQuery& q);

/// Upper bound for the spherical modulus of a space whose dual has
/// non-squareness parameter above alpha_tilde. Requires 0 < delta < 1/2 and
/// 0 < alpha_tilde <= 2 - sqrt(2) (up to kAlphaRounding).
double nonsquare_phi_bound(double delta, double alpha_tilde);

/// The k that balances the two corrector bounds for nonsquare_phi_bound.
double nonsquare_k(double delta, double alpha_tilde);

/// Accepted excess of alpha_tilde over 2 - sqrt(2), so that four-digit
/// roundings such as 0.5858 are accepted.
inline constexpr double kAlphaRounding = 1e-4;

namespace detail {

/// Squared norms, inner product and squared distance of a Hilbert pair.
struct HilbertTerms {
  double xx;
  double yy;
  double xy;
  double dd;
};

HilbertTerms hilbert_terms(const Vector& x, const Vector& y);

bool hilbert_first_branch(const HilbertTerms& t);
double hilbert_first_value(const HilbertTerms& t);
double hilbert_second_value(const HilbertTerms& t);

bool phi_h_first_branch(double mu, double theta, double delta);
double phi_h_second_value(double mu, double theta, double delta);

}  // namespace detail

}  // namespace bpb
