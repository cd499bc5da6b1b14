#pragma once

#include <utility>

#include "bpb/closed_forms.hpp"
#include "bpb/pi_set.hpp"
#include "bpb/space.hpp"

namespace bpb {

/// An extremal pair and its predicted distance to Pi(X).
struct Witness {
  PairState pair;
  double predicted = 0.0;
  /// 1, 2, 3 for the three l_inf^2 constructions, 0 otherwise.
  int construction = 0;
};

using Pin = std::pair<Vector, Functional>;

/// (e1 / ||e1||, its supporting functional): the first-coordinate pair for
/// Lp components.
Pin canonical_pin(const NormedSpace& space);

/// Pair in l_inf^2 at distance min{Psi, 1 + mu, 1 + theta}. Ties go to the
/// Psi construction.
Witness linf2_witness(const ModulusQuery& q);

/// Pair in sum1(A, B) at distance Psi. Requires regime_sum and pins in Pi.
Witness sum1_witness(const NormedSpace& a, const NormedSpace& b, const ModulusQuery& q, const Pin& pin_a,
                     const Pin& pin_b);

/// Pair in suminf(A, B) at distance Psi. Same requirements as sum1_witness.
Witness suminf_witness(const NormedSpace& a, const NormedSpace& b, const ModulusQuery& q, const Pin& pin_a,
                       const Pin& pin_b);

/// Pair in R realising the real-line modulus.
Witness real_witness(const ModulusQuery& q);

}  // namespace bpb
