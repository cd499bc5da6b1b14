#pragma once

#include <cstdint>
#include <vector>

#include "bpb/config.hpp"
#include "bpb/space.hpp"

namespace bpb {

/// Deterministic sample of the unit sphere S_X.
///
/// Planar spaces: directions at angles 2 pi i / resolution (exact at
/// multiples of pi/4), merged with the extreme points of the ball when it is
/// a polytope, renormalised by the norm and ordered by polar angle in
/// [0, 2 pi). One-dimensional spaces give {1, -1} up to scale. Higher
/// dimensions use a grid on the surface of the cube plus `resolution` seeded
/// random directions. Throws Error(InvalidConfig) for resolution < 4 and
/// Error(InvalidSpace) for dim > 4.
std::vector<Vector> sphere_sample(const NormedSpace& space, std::size_t resolution, std::uint64_t seed);
std::vector<Vector> sphere_sample(const NormedSpace& space, const EstimatorConfig& config);

/// The same construction on the dual sphere S_{X*}.
std::vector<Functional> dual_sphere_sample(const NormedSpace& space, std::size_t resolution, std::uint64_t seed);

/// Polar angle of the first two coordinates, in [0, 2 pi).
double polar_angle(double x, double y);
template <class Tag>
double polar_angle(const Coords<Tag>& v) {
  return polar_angle(v[0], v[1]);
}

/// Unit-norm point of a planar space in direction angle t.
Vector sphere_point(const NormedSpace& space, double t);
/// Unit-dual-norm functional of a planar space in direction angle t.
Functional dual_sphere_point(const NormedSpace& space, double t);

/// Largest distance between cyclically consecutive points of a planar sphere
/// sample, measured in the norm of the space.
double planar_gap(const NormedSpace& space, const std::vector<Vector>& ring);
double planar_dual_gap(const NormedSpace& space, const std::vector<Functional>& ring);

}  // namespace bpb
