#include "bpb/space.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Dense>

namespace bpb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::InvalidSpace: return "invalid_space";
    case ErrorKind::ZeroVector: return "zero_vector";
    case ErrorKind::Regime: return "regime_violation";
    case ErrorKind::EmptySample: return "empty_sample";
    case ErrorKind::NotFound: return "not_found";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::InvalidConfig: return "invalid_config";
  }
  return "unknown";
}

struct NormedSpace::Node {
  SpaceKind kind = SpaceKind::Lp;
  std::size_t dim = 0;
  double p = 2.0;
  std::vector<Vector> vertices;
  std::vector<Vector> extreme;  // polytope hull vertices
  std::vector<Functional> facets;
  std::vector<NormedSpace> parts;
};

namespace {

double conjugate_exponent(double p) {
  if (p == 1.0) return kInfinity;
  if (std::isinf(p)) return 1.0;
  if (p == 2.0) return 2.0;
  return p / (p - 1.0);
}

double lp_norm(double p, std::span<const double> v) {
  if (v.size() == 1) return std::abs(v[0]);
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Barycentric subgradient of the l_p norm at v != 0, as raw coordinates.
template <class Out, class In>
Out lp_support(double p, const In& v) {
  const std::size_t n = v.dim();
  Out f(n);
  if (p == 1.0) {
    for (std::size_t i = 0; i < n; ++i) f[i] = sign(v[i]);
    return f;
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
    std::size_t active = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v[i]) >= m * (1.0 - detail::kActiveTol)) ++active;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v[i]) >= m * (1.0 - detail::kActiveTol)) f[i] = sign(v[i]) / static_cast<double>(active);
    }
    return f;
  }
  const double r = lp_norm(p, v.values());
  if (p == 2.0) {
    for (std::size_t i = 0; i < n; ++i) f[i] = v[i] / r;
    return f;
  }
  for (std::size_t i = 0; i < n; ++i) f[i] = sign(v[i]) * std::pow(std::abs(v[i]) / r, p - 1.0);
  return f;
}

[[noreturn, gnu::cold]] void dimension_mismatch() { throw Error(ErrorKind::DimensionMismatch, "dimension mismatch"); }

inline void check_dim(std::size_t expected, std::size_t got) {
  if (expected != got) [[unlikely]] dimension_mismatch();
}

bool all_finite(const std::vector<Vector>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Vector& v) { return v.all_finite(); });
}

void check_symmetric(const std::vector<Vector>& vs) {
  for (const auto& v : vs) {
    double scale = 1.0;
    for (double x : v.values()) scale = std::max(scale, std::abs(x));
    const bool mirrored = std::any_of(vs.begin(), vs.end(), [&](const Vector& w) {
      double d = 0.0;
      for (std::size_t i = 0; i < v.dim(); ++i) d = std::max(d, std::abs(v[i] + w[i]));
      return d <= 1e-12 * scale;
    });
    if (!mirrored) throw Error(ErrorKind::InvalidSpace, "non-symmetric vertex list");
  }
}

void check_spanning(const std::vector<Vector>& vs, std::size_t n) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(vs.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < vs.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vs[r][c];
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (lu.rank() < static_cast<Eigen::Index>(n)) {
    throw Error(ErrorKind::InvalidSpace, "polytope vertices do not span the space");
  }
}

// Extreme points among the input vertices: those at which the active facets
// have full rank.
std::vector<Vector> extreme_vertices(const std::vector<Vector>& vs, const std::vector<Functional>& facets) {
  const std::size_t n = vs.front().dim();
  if (n == 2) return detail::planar_hull(vs);
  std::vector<Vector> out;
  for (const auto& v : vs) {
    std::vector<const Functional*> active;
    for (const auto& a : facets) {
      if (std::abs(action(a, v) - 1.0) <= 1e-9) active.push_back(&a);
    }
    if (active.size() < n) continue;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(active.size()), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < active.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*active[r])[c];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (lu.rank() == static_cast<Eigen::Index>(n) && std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

NormedSpace NormedSpace::lp(double p, std::size_t n) {
  if (!(p >= 1.0)) throw Error(ErrorKind::InvalidSpace, "lp exponent must be in [1, inf]");
  if (n == 0 || n > kMaxDim) throw Error(ErrorKind::InvalidSpace, "lp dimension must be in [1, 16]");
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::Lp;
  node->dim = n;
  node->p = p;
  return NormedSpace(std::move(node));
}

NormedSpace NormedSpace::polytope(std::vector<Vector> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidSpace, "empty vertex list");
  const std::size_t n = vertices.front().dim();
  for (const auto& v : vertices) check_dim(n, v.dim());
  if (!all_finite(vertices)) throw Error(ErrorKind::InvalidSpace, "non-finite vertex coordinates");
  check_symmetric(vertices);
  check_spanning(vertices, n);
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::Polytope;
  node->dim = n;
  node->facets = detail::polytope_facets(vertices);
  node->extreme = extreme_vertices(vertices, node->facets);
  node->vertices = std::move(vertices);
  return NormedSpace(std::move(node));
}

NormedSpace NormedSpace::hexagon() {
  const double s = std::sqrt(3.0) / 2.0;
  return polytope({Vector{1.0, 0.0}, Vector{0.5, s}, Vector{-0.5, s}, Vector{-1.0, 0.0}, Vector{-0.5, -s},
                   Vector{0.5, -s}});
}

NormedSpace NormedSpace::sum1(NormedSpace a, NormedSpace b) {
  if (a.dim() + b.dim() > kMaxDim) throw Error(ErrorKind::InvalidSpace, "sum dimension exceeds 16");
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::Sum1;
  node->dim = a.dim() + b.dim();
  node->parts = {std::move(a), std::move(b)};
  return NormedSpace(std::move(node));
}

NormedSpace NormedSpace::suminf(NormedSpace a, NormedSpace b) {
  if (a.dim() + b.dim() > kMaxDim) throw Error(ErrorKind::InvalidSpace, "sum dimension exceeds 16");
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::SumInf;
  node->dim = a.dim() + b.dim();
  node->parts = {std::move(a), std::move(b)};
  return NormedSpace(std::move(node));
}

std::size_t NormedSpace::dim() const { return node_->dim; }
SpaceKind NormedSpace::kind() const { return node_->kind; }
double NormedSpace::p() const { return node_->p; }
const std::vector<Vector>& NormedSpace::vertices() const { return node_->vertices; }
const std::vector<Functional>& NormedSpace::facets() const { return node_->facets; }
const NormedSpace& NormedSpace::first() const { return node_->parts.at(0); }
const NormedSpace& NormedSpace::second() const { return node_->parts.at(1); }

bool NormedSpace::is_euclidean() const { return kind() == SpaceKind::Lp && p() == 2.0 && dim() >= 2; }

double NormedSpace::norm_of(const Node& n, std::span<const double> v) {
  switch (n.kind) {
    case SpaceKind::Lp:
      return lp_norm(n.p, v);
    case SpaceKind::Polytope: {
      double m = 0.0;
      for (const auto& a : n.facets) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += a[i] * v[i];
        m = std::max(m, s);
      }
      return m;
    }
    case SpaceKind::Sum1:
    case SpaceKind::SumInf: {
      const std::size_t da = n.parts[0].dim();
      const double na = norm_of(*n.parts[0].node_, v.first(da));
      const double nb = norm_of(*n.parts[1].node_, v.subspan(da));
      return n.kind == SpaceKind::Sum1 ? na + nb : std::max(na, nb);
    }
  }
  return 0.0;
}

double NormedSpace::dual_norm_of(const Node& n, std::span<const double> f) {
  switch (n.kind) {
    case SpaceKind::Lp:
      return lp_norm(conjugate_exponent(n.p), f);
    case SpaceKind::Polytope: {
      double m = 0.0;
      for (const auto& w : n.extreme) {
        double s = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * w[i];
        m = std::max(m, s);
      }
      return m;
    }
    case SpaceKind::Sum1:
    case SpaceKind::SumInf: {
      const std::size_t da = n.parts[0].dim();
      const double na = dual_norm_of(*n.parts[0].node_, f.first(da));
      const double nb = dual_norm_of(*n.parts[1].node_, f.subspan(da));
      return n.kind == SpaceKind::Sum1 ? std::max(na, nb) : na + nb;
    }
  }
  return 0.0;
}

double NormedSpace::norm(const Vector& v) const {
  check_dim(dim(), v.dim());
  return norm_of(*node_, v.values());
}

double NormedSpace::dual_norm(const Functional& f) const {
  check_dim(dim(), f.dim());
  return dual_norm_of(*node_, f.values());
}

Functional NormedSpace::support_functional(const Vector& v) const {
  check_dim(dim(), v.dim());
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "supporting functional of the zero vector");
  switch (kind()) {
    case SpaceKind::Lp:
      return lp_support<Functional>(node_->p, v);
    case SpaceKind::Polytope: {
      const double r = norm(v);
      Functional f(dim());
      std::size_t active = 0;
      for (const auto& a : node_->facets) {
        if (action(a, v) >= r * (1.0 - detail::kActiveTol)) {
          f += a;
          ++active;
        }
      }
      return f / static_cast<double>(active);
    }
    case SpaceKind::Sum1:
    case SpaceKind::SumInf: {
      const std::size_t da = first().dim();
      const Vector a = v.slice(0, da);
      const Vector b = v.slice(da, dim() - da);
      const double na = first().norm(a);
      const double nb = second().norm(b);
      Functional fa(da);
      Functional fb(dim() - da);
      if (kind() == SpaceKind::Sum1) {
        if (na > 0.0) fa = first().support_functional(a);
        if (nb > 0.0) fb = second().support_functional(b);
      } else {
        const double m = std::max(na, nb);
        const bool use_a = na >= m * (1.0 - detail::kActiveTol);
        const bool use_b = nb >= m * (1.0 - detail::kActiveTol);
        const double w = (use_a && use_b) ? 0.5 : 1.0;
        if (use_a) fa = first().support_functional(a) * w;
        if (use_b) fb = second().support_functional(b) * w;
      }
      return Functional::concat(fa, fb);
    }
  }
  return Functional(dim());
}

Vector NormedSpace::norming_point(const Functional& f) const {
  check_dim(dim(), f.dim());
  if (f.is_zero()) throw Error(ErrorKind::ZeroVector, "norming point of the zero functional");
  switch (kind()) {
    case SpaceKind::Lp:
      return lp_support<Vector>(conjugate_exponent(node_->p), f);
    case SpaceKind::Polytope: {
      const double r = dual_norm(f);
      Vector y(dim());
      std::size_t active = 0;
      for (const auto& w : node_->extreme) {
        if (action(f, w) >= r * (1.0 - detail::kActiveTol)) {
          y += w;
          ++active;
        }
      }
      return y / static_cast<double>(active);
    }
    case SpaceKind::Sum1:
    case SpaceKind::SumInf: {
      const std::size_t da = first().dim();
      const Functional a = f.slice(0, da);
      const Functional b = f.slice(da, dim() - da);
      const double na = first().dual_norm(a);
      const double nb = second().dual_norm(b);
      Vector ya(da);
      Vector yb(dim() - da);
      if (kind() == SpaceKind::SumInf) {
        if (na > 0.0) ya = first().norming_point(a);
        if (nb > 0.0) yb = second().norming_point(b);
      } else {
        const double m = std::max(na, nb);
        const bool use_a = na >= m * (1.0 - detail::kActiveTol);
        const bool use_b = nb >= m * (1.0 - detail::kActiveTol);
        const double w = (use_a && use_b) ? 0.5 : 1.0;
        if (use_a) ya = first().norming_point(a) * w;
        if (use_b) yb = second().norming_point(b) * w;
      }
      return Vector::concat(ya, yb);
    }
  }
  return Vector(dim());
}

NormedSpace NormedSpace::dual() const {
  switch (kind()) {
    case SpaceKind::Lp:
      return lp(conjugate_exponent(node_->p), dim());
    case SpaceKind::Polytope: {
      std::vector<Vector> polar;
      polar.reserve(node_->facets.size());
      for (const auto& a : node_->facets) polar.push_back(as_vector(a));
      return polytope(std::move(polar));
    }
    case SpaceKind::Sum1:
      return suminf(first().dual(), second().dual());
    case SpaceKind::SumInf:
      return sum1(first().dual(), second().dual());
  }
  return *this;
}

std::optional<std::vector<Vector>> NormedSpace::extreme_points() const {
  const std::size_t n = dim();
  switch (kind()) {
    case SpaceKind::Lp: {
      if (n == 1) return std::vector<Vector>{Vector{1.0}, Vector{-1.0}};
      if (node_->p == 1.0) {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < n; ++i) {
          for (double s : {1.0, -1.0}) {
            Vector e(n);
            e[i] = s;
            out.push_back(e);
          }
        }
        return out;
      }
      if (std::isinf(node_->p) && n <= 10) {
        std::vector<Vector> out;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          Vector e(n);
          for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1U ? -1.0 : 1.0;
          out.push_back(e);
        }
        return out;
      }
      return std::nullopt;
    }
    case SpaceKind::Polytope:
      return node_->extreme;
    case SpaceKind::Sum1:
    case SpaceKind::SumInf: {
      auto ea = first().extreme_points();
      auto eb = second().extreme_points();
      if (!ea || !eb) return std::nullopt;
      const Vector za(first().dim());
      const Vector zb(second().dim());
      std::vector<Vector> out;
      if (kind() == SpaceKind::Sum1) {
        for (const auto& a : *ea) out.push_back(Vector::concat(a, zb));
        for (const auto& b : *eb) out.push_back(Vector::concat(za, b));
      } else {
        if (ea->size() * eb->size() > 4096) return std::nullopt;
        for (const auto& a : *ea) {
          for (const auto& b : *eb) out.push_back(Vector::concat(a, b));
        }
      }
      return out;
    }
  }
  return std::nullopt;
}

bool operator==(const NormedSpace& a, const NormedSpace& b) {
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  switch (a.kind()) {
    case SpaceKind::Lp:
      return a.p() == b.p();
    case SpaceKind::Polytope:
      return a.vertices() == b.vertices();
    case SpaceKind::Sum1:
    case SpaceKind::SumInf:
      return a.first() == b.first() && a.second() == b.second();
  }
  return false;
}

}  // namespace bpb
