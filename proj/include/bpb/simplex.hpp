#pragma once

#include <vector>

#include "bpb/coords.hpp"

namespace bpb {

/// max c.u subject to a_i.u <= 1 for every row a_i, with u free.
///
/// Dense tableau simplex with Bland's rule. The origin is feasible, so no
/// phase one is needed. Throws Error(InvalidSpace) when the program is
/// unbounded, which happens exactly when the rows do not span.
double lp_max_unit_rows(const std::vector<std::vector<double>>& rows, const std::vector<double>& c);

/// Minkowski gauge of hull(points) at v, computed by LP duality as
/// max{f(v) : f(w) <= 1 for all w in points}.
double gauge_lp(const std::vector<Vector>& points, const Vector& v);

/// Dual norm of a polytope ball written through its facets:
/// max{f(u) : a(u) <= 1 for all facets a}.
double dual_gauge_lp(const std::vector<Functional>& facets, const Functional& f);

}  // namespace bpb
