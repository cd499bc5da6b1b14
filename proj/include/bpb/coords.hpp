#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "bpb/error.hpp"

namespace bpb {

/// Upper bound on the ambient dimension. Coordinates live inline so that
/// norm evaluations in the estimator loops never touch the heap.
inline constexpr std::size_t kMaxDim = 16;

/// Fixed-capacity coordinate list. The tag separates points from
/// functionals at the type level; the two never mix without an explicit
/// conversion.
template <class Tag>
class Coords {
 public:
  Coords() = default;

  explicit Coords(std::size_t n) : n_(n) {
    if (n == 0 || n > kMaxDim) {
      throw Error(ErrorKind::DimensionMismatch, "dimension must be in [1, 16]");
    }
  }

  Coords(std::initializer_list<double> values) : Coords(values.size()) {
    std::copy(values.begin(), values.end(), c_.begin());
  }

  static Coords from(std::span<const double> values) {
    Coords out(values.size());
    std::copy(values.begin(), values.end(), out.c_.begin());
    return out;
  }

  std::size_t dim() const { return n_; }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  std::span<const double> values() const { return {c_.data(), n_}; }
  std::span<double> values() { return {c_.data(), n_}; }

  bool all_finite() const {
    return std::all_of(c_.begin(), c_.begin() + n_, [](double v) { return std::isfinite(v); });
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + n_, [](double v) { return v == 0.0; });
  }

  /// Coordinates [offset, offset + count).
  Coords slice(std::size_t offset, std::size_t count) const {
    Coords out(count);
    std::copy_n(c_.begin() + offset, count, out.c_.begin());
    return out;
  }

  static Coords concat(const Coords& a, const Coords& b) {
    Coords out(a.n_ + b.n_);
    std::copy_n(a.c_.begin(), a.n_, out.c_.begin());
    std::copy_n(b.c_.begin(), b.n_, out.c_.begin() + a.n_);
    return out;
  }

  Coords& operator+=(const Coords& o) {
    check_same(o);
    for (std::size_t i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    check_same(o);
    for (std::size_t i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Coords& operator*=(double s) {
    for (std::size_t i = 0; i < n_; ++i) c_[i] *= s;
    return *this;
  }
  Coords& operator/=(double s) {
    for (std::size_t i = 0; i < n_; ++i) c_[i] /= s;
    return *this;
  }

  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(Coords a, double s) { return a *= s; }
  friend Coords operator*(double s, Coords a) { return a *= s; }
  friend Coords operator/(Coords a, double s) { return a /= s; }
  friend Coords operator-(Coords a) { return a *= -1.0; }

  friend bool operator==(const Coords& a, const Coords& b) {
    return a.n_ == b.n_ && std::equal(a.c_.begin(), a.c_.begin() + a.n_, b.c_.begin());
  }

 private:
  void check_same(const Coords& o) const {
    if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "coordinate dimensions differ");
  }

  std::array<double, kMaxDim> c_{};
  std::size_t n_ = 0;
};

struct VectorTag {};
struct FunctionalTag {};

using Vector = Coords<VectorTag>;
using Functional = Coords<FunctionalTag>;

/// f(v): the coordinate dot product.
inline double action(const Functional& f, const Vector& v) {
  if (f.dim() != v.dim()) throw Error(ErrorKind::DimensionMismatch, "functional and vector dimensions differ");
  double s = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) s += f[i] * v[i];
  return s;
}

/// Riesz identification, used wherever a point is read as a functional
/// (Hilbert spaces, polar polytopes).
inline Functional as_functional(const Vector& v) { return Functional::from(v.values()); }
inline Vector as_vector(const Functional& f) { return Vector::from(f.values()); }

template <class Tag>
double dot(const Coords<Tag>& a, const Coords<Tag>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

template <class Tag>
double euclidean_norm(const Coords<Tag>& a) {
  return std::sqrt(dot(a, a));
}

}  // namespace bpb
