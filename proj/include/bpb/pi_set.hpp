#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "bpb/config.hpp"
#include "bpb/space.hpp"

namespace bpb {

/// A point-functional pair with its norms and pairing cached.
struct PairState {
  Vector x;
  Functional f;
  double norm_x = 0.0;
  double norm_f = 0.0;
  double action = 0.0;

  static PairState make(const NormedSpace& space, const Vector& x, const Functional& f);
};

/// A pair (y, g) of Pi(X) and its d_inf distance to a query pair.
struct PiWitness {
  Vector y;
  Functional g;
  double distance = 0.0;
};

/// A sampled value together with a conservative bound on the sampling error.
struct Estimate {
  double value = 0.0;
  double mesh_error = 0.0;
};

enum class ModulusMode { Ball, Sphere };

bool is_in_pi(const NormedSpace& space, const PairState& p, double tol);

/// max(||x - y||, ||f - g||*).
double d_inf(const NormedSpace& space, const Vector& x, const Functional& f, const Vector& y, const Functional& g);

/// Sampled Pi(X): (y, supporting functional of y) for every sphere sample y,
/// and (norming point of g, g) for every dual sphere sample g. The second
/// family meshes the dual faces at the vertices of a polytope ball.
std::vector<std::pair<Vector, Functional>> sample_pi(const NormedSpace& space, const EstimatorConfig& config);

/// Sampled Pi(X) prepared for repeated nearest-pair queries.
class PiCloud {
 public:
  PiCloud(const NormedSpace& space, const EstimatorConfig& config);

  const NormedSpace& space() const { return space_; }
  const std::vector<std::pair<Vector, Functional>>& samples() const { return samples_; }

  /// Largest d_inf between neighbouring samples along Pi(X) (planar spaces),
  /// or the largest nearest-neighbour distance (dimension >= 3).
  double mesh_gap() const { return gap_; }

  /// min over samples of d_inf, with the index of the first minimiser.
  std::pair<double, std::size_t> coarse(const Vector& x, const Functional& f) const;

  /// Coarse minimum followed by local refinement along Pi(X). In the plane
  /// every sampled basin within two mesh gaps of the coarse minimum is
  /// refined. The result is an attained pair, so its distance is an upper
  /// bound on the true one.
  PiWitness nearest(const Vector& x, const Functional& f) const;

  /// Objective on Pi(X) to be minimised by local_min.
  using Objective = std::function<double(const Vector&, const Functional&)>;

  /// Local minimisation of objective along Pi(X) starting from sample i.
  /// Planar spaces search the arcs between the neighbours of i, once through
  /// points (y, supporting functional) and once through functionals
  /// (norming point, g); higher dimensions use coordinate descent with both
  /// moves. The distance field of the result holds the objective value,
  /// and the result is never worse than start.
  PiWitness local_min(std::size_t i, const Objective& objective, PiWitness start) const;

 private:
  PiWitness descent(const Objective& objective, PiWitness best) const;

  NormedSpace space_;
  EstimatorConfig config_;
  std::vector<std::pair<Vector, Functional>> samples_;
  std::vector<double> primal_angle_;
  std::vector<double> dual_angle_;
  double gap_ = 0.0;
};

/// Distance from p to Pi(X) with the refined minimiser.
PiWitness distance_to_pi(const NormedSpace& space, const PairState& p, const EstimatorConfig& config);

/// Sampling estimator of Phi_X(delta) (ball) or Phi_X^S(delta) (sphere).
Estimate hausdorff_modulus_set(const NormedSpace& space, double delta, ModulusMode mode, const EstimatorConfig& config);

}  // namespace bpb
