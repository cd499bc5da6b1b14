#pragma once

#include <cstddef>
#include <cstdint>

namespace bpb {

/// Knobs shared by every sampling estimator.
struct EstimatorConfig {
  /// Samples per sphere dimension for the sphere sweeps and for Π(X).
  std::size_t resolution = 720;
  /// Samples per sphere dimension for the (x, x*) pairs explored by the
  /// supremum estimators.
  std::size_t outer_resolution = 128;
  double tol = 1e-9;
  /// Constraint used by the estimators is x*(x) >= 1 - delta + delta_slack.
  double delta_slack = 0.0;
  std::uint64_t seed = 0x5eedULL;
  /// Candidates taken from the coarse pass into local refinement.
  std::size_t refine_candidates = 12;
  /// Evaluate closed-form nearest pairs for Euclidean spaces during refinement.
  bool closed_form_refine = true;
  /// 0 = hardware concurrency (capped by BPB_THREADS).
  std::size_t threads = 0;

  /// Throws Error(InvalidConfig) when tol <= 0, resolution < 8 or
  /// outer_resolution < 8.
  void validate() const;
};

}  // namespace bpb
