#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "bpb/coords.hpp"

namespace bpb {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class SpaceKind { Lp, Polytope, Sum1, SumInf };

/// A finite-dimensional real normed space, given by a norm oracle together
/// with its exact dual norm and supporting functionals.
///
/// Values are immutable and cheap to copy (components are shared). Every
/// member is a pure function, so a space may be used concurrently.
class NormedSpace {
 public:
  /// l_p^n with p in [1, inf]; p = 1 and p = inf are handled natively.
  static NormedSpace lp(double p, std::size_t n);
  static NormedSpace l1(std::size_t n) { return lp(1.0, n); }
  static NormedSpace l2(std::size_t n) { return lp(2.0, n); }
  static NormedSpace linf(std::size_t n) { return lp(kInfinity, n); }
  /// The scalar field as a one-dimensional space.
  static NormedSpace real_line() { return lp(2.0, 1); }
  /// Unit ball = convex hull of a centrally symmetric, spanning vertex list.
  static NormedSpace polytope(std::vector<Vector> vertices);
  /// Regular hexagon with a vertex at (1, 0).
  static NormedSpace hexagon();
  static NormedSpace sum1(NormedSpace a, NormedSpace b);
  static NormedSpace suminf(NormedSpace a, NormedSpace b);

  std::size_t dim() const;
  SpaceKind kind() const;

  /// Exponent for Lp spaces.
  double p() const;
  /// Input vertex list for polytope spaces.
  const std::vector<Vector>& vertices() const;
  /// Facet functionals a with {a(u) <= 1} describing a polytope ball; these
  /// are the vertices of the polar (dual) ball.
  const std::vector<Functional>& facets() const;
  /// Components of a direct sum.
  const NormedSpace& first() const;
  const NormedSpace& second() const;

  double norm(const Vector& v) const;
  double dual_norm(const Functional& f) const;

  /// f with dual_norm(f) = 1 and f(v) = norm(v). At non-smooth points the
  /// subdifferential is a face of the dual sphere and the barycentre of its
  /// vertices is returned.
  Functional support_functional(const Vector& v) const;

  /// y with norm(y) = 1 and f(y) = dual_norm(f); the barycentre of the
  /// exposed face when it is not a single point.
  Vector norming_point(const Functional& f) const;

  /// The dual space, with functionals written in the same coordinates.
  NormedSpace dual() const;

  /// Extreme points of the unit ball when the ball is a polytope
  /// (l1, linf, polytope spaces, one-dimensional spaces and sums of those).
  std::optional<std::vector<Vector>> extreme_points() const;

  /// True for l2^n with n >= 2.
  bool is_euclidean() const;

  struct Node;

 private:
  explicit NormedSpace(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static double norm_of(const Node& n, std::span<const double> v);
  static double dual_norm_of(const Node& n, std::span<const double> f);
  std::shared_ptr<const Node> node_;
};

bool operator==(const NormedSpace& a, const NormedSpace& b);

namespace detail {

/// Relative tolerance for deciding which facets / coordinates are active at
/// a point when building barycentric subgradients.
inline constexpr double kActiveTol = 1e-12;

/// Hull vertices of a centrally symmetric planar point set, counter-clockwise
/// starting from the smallest polar angle in [0, 2pi).
std::vector<Vector> planar_hull(const std::vector<Vector>& points);

/// Facet functionals of the convex hull of a symmetric spanning point set.
/// Planar sets use edge arithmetic; dimensions 3 and 4 enumerate supporting
/// hyperplanes through affinely independent vertex subsets.
std::vector<Functional> polytope_facets(const std::vector<Vector>& vertices);

}  // namespace detail

}  // namespace bpb
