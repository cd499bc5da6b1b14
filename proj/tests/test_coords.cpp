#include <limits>

#include <doctest.h>

#include "bpb/coords.hpp"

using namespace bpb;

TEST_SUITE("coords") {

TEST_CASE("arithmetic and slicing") {
  const Vector a{1.0, 2.0, 3.0};
  const Vector b{0.5, -1.0, 4.0};
  CHECK((a + b) == Vector{1.5, 1.0, 7.0});
  CHECK((a - b) == Vector{0.5, 3.0, -1.0});
  CHECK((2.0 * a) == Vector{2.0, 4.0, 6.0});
  CHECK((a / 2.0) == Vector{0.5, 1.0, 1.5});
  CHECK((-a) == Vector{-1.0, -2.0, -3.0});
  CHECK(a.slice(1, 2) == Vector{2.0, 3.0});
  CHECK(Vector::concat(a.slice(0, 1), b.slice(1, 2)) == Vector{1.0, -1.0, 4.0});
  CHECK(dot(a, b) == doctest::Approx(10.5));
  CHECK(euclidean_norm(Vector{3.0, 4.0}) == doctest::Approx(5.0));
}

TEST_CASE("pairing and identification") {
  const Vector v{1.0, -2.0};
  const Functional f{3.0, 0.5};
  CHECK(action(f, v) == doctest::Approx(2.0));
  CHECK(as_vector(as_functional(v)) == v);
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(Vector(0), Error);
  CHECK_THROWS_AS(Vector(kMaxDim + 1), Error);
  try {
    (void)(Vector{1.0, 2.0} + Vector{1.0});
    FAIL("expected a dimension error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  CHECK_THROWS_AS(action(Functional{1.0}, Vector{1.0, 2.0}), Error);
}

TEST_CASE("predicates") {
  CHECK(Vector{0.0, 0.0}.is_zero());
  CHECK_FALSE(Vector{0.0, 1e-300}.is_zero());
  CHECK(Vector{1.0, 2.0}.all_finite());
  CHECK_FALSE(Vector{1.0, std::numeric_limits<double>::quiet_NaN()}.all_finite());
}

}
