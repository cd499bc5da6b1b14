#pragma once

#include <optional>
#include <utility>

#include "bpb/closed_forms.hpp"
#include "bpb/config.hpp"
#include "bpb/pi_set.hpp"
#include "bpb/space.hpp"

namespace bpb {

/// Phi_X(mu, theta, delta): largest refined distance to Pi(X) over sampled
/// pairs with ||x|| = mu, ||f|| = theta and f(x) >= 1 - delta + slack.
/// Throws Error(Regime) when mu theta < 1 - delta.
Estimate estimate_phi_mut(const NormedSpace& space, const ModulusQuery& q, const EstimatorConfig& config);

/// Phi_X^S(delta) (mu = theta = 1) or Phi_X(delta) (maximum over a grid of
/// radii in [0, 1]; the grid step enters mesh_error).
Estimate estimate_phi(const NormedSpace& space, double delta, ModulusMode mode, const EstimatorConfig& config);

struct AlphaReport {
  double alpha = 0.0;
  std::pair<Vector, Vector> maximizer;
  double mesh_error = 0.0;
};

/// 2 - sup (||x + y|| + ||x - y||) / 2 over pairs of sphere samples, with
/// local refinement.
AlphaReport estimate_alpha(const NormedSpace& space, const EstimatorConfig& config);

/// max (||x + y|| + ||x - y||) / 2 over `count` seeded pairs drawn from the
/// interior of the ball; used to audit the reduction to the sphere.
double alpha_interior_audit(const NormedSpace& space, std::size_t count, std::uint64_t seed);

struct ConvexityReport {
  double eps = 0.0;
  double delta_x = 0.0;
  double mesh_error = 0.0;
};

/// Modulus of convexity at eps in (0, 2].
ConvexityReport estimate_convexity_modulus(const NormedSpace& space, double eps, const EstimatorConfig& config);

struct SelfDualReport {
  AlphaReport primal;
  AlphaReport dual;
};

/// alpha(X) and alpha(X*), the latter computed on the constructed dual.
SelfDualReport check_alpha_self_dual(const NormedSpace& space, const EstimatorConfig& config);

struct CorrectorResult {
  PiWitness witness;
  double bound_x = 0.0;
  double bound_f = 0.0;
  /// bound minus achieved distance, for the point and the functional.
  double slack_x = 0.0;
  double slack_f = 0.0;
  std::size_t resolution = 0;
};

/// Searches sampled Pi(X) for (y, g) with ||x - y|| <= delta / k and
/// ||f - g|| <= 2k - (2/3) k alpha_tilde, preferring the pair with the
/// smallest max of the two distance-to-bound ratios. Resolution is doubled
/// up to three times before Error(NotFound) is thrown. When alpha_dual is
/// given, alpha_tilde must be below it.
CorrectorResult bpb_corrector(const NormedSpace& space, const PairState& p, double delta, double k,
                              double alpha_tilde, const EstimatorConfig& config,
                              std::optional<double> alpha_dual = std::nullopt);

}  // namespace bpb
