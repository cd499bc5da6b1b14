#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "bpb/simplex.hpp"
#include "bpb/space.hpp"
#include "oracles.hpp"

using namespace bpb;

namespace {

struct Named {
  std::string name;
  NormedSpace space;
};

std::vector<Vector> cube3() {
  std::vector<Vector> v;
  for (int i = 0; i < 8; ++i) v.push_back(Vector{i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
  return v;
}

std::vector<Vector> cuboctahedron() {
  std::vector<Vector> v;
  for (int a = 0; a < 3; ++a) {
    for (double s : {-1.0, 1.0}) {
      for (double t : {-1.0, 1.0}) {
        Vector p(3);
        p[a] = s;
        p[(a + 1) % 3] = t;
        v.push_back(p);
      }
    }
  }
  return v;
}

std::vector<Named> zoo() {
  const NormedSpace r = NormedSpace::real_line();
  return {
      {"l1:2", NormedSpace::l1(2)},
      {"l2:2", NormedSpace::l2(2)},
      {"linf:2", NormedSpace::linf(2)},
      {"lp:2:p=1.5", NormedSpace::lp(1.5, 2)},
      {"lp:3:p=3", NormedSpace::lp(3.0, 3)},
      {"l2:4", NormedSpace::l2(4)},
      {"hex", NormedSpace::hexagon()},
      {"cube", NormedSpace::polytope(cube3())},
      {"cuboct", NormedSpace::polytope(cuboctahedron())},
      {"sum1(r,r)", NormedSpace::sum1(r, r)},
      {"suminf(r,r)", NormedSpace::suminf(r, r)},
      {"sum1(l2:2,hex)", NormedSpace::sum1(NormedSpace::l2(2), NormedSpace::hexagon())},
      {"suminf(l1:2,r)", NormedSpace::suminf(NormedSpace::l1(2), r)},
  };
}

template <class Tag>
Coords<Tag> gaussian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Coords<Tag> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

}  // namespace

TEST_SUITE("spaces") {

TEST_CASE("closed-form norms") {
  CHECK(NormedSpace::l1(3).norm(Vector{1, -2, 3}) == 6.0);
  CHECK(NormedSpace::linf(3).norm(Vector{1, -2, 3}) == 3.0);
  CHECK(NormedSpace::l2(2).norm(Vector{3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(NormedSpace::lp(3.0, 2).norm(Vector{1, 1}) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
  CHECK(NormedSpace::lp(3.0, 2).dual_norm(Functional{1, 1}) == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-14));
  CHECK(NormedSpace::hexagon().norm(Vector{0, 1}) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));
  // extreme scales do not overflow
  CHECK(NormedSpace::lp(7.0, 2).norm(Vector{1e200, 1e200}) == doctest::Approx(1e200 * std::pow(2.0, 1.0 / 7.0)));
}

TEST_CASE("duals") {
  CHECK(NormedSpace::l1(2).dual() == NormedSpace::linf(2));
  CHECK(NormedSpace::linf(2).dual() == NormedSpace::l1(2));
  CHECK(NormedSpace::lp(3.0, 2).dual().p() == doctest::Approx(1.5));
  const NormedSpace r = NormedSpace::real_line();
  CHECK(NormedSpace::sum1(r, r).dual().kind() == SpaceKind::SumInf);
  CHECK(NormedSpace::suminf(r, r).dual().kind() == SpaceKind::Sum1);
  CHECK(NormedSpace::hexagon().dual().kind() == SpaceKind::Polytope);
}

TEST_CASE("Hoelder pairing, homogeneity and triangle inequality") {
  std::mt19937_64 rng(11);
  for (const auto& [name, x] : zoo()) {
    CAPTURE(name);
    const NormedSpace dual = x.dual();
    for (int i = 0; i < 300; ++i) {
      const Vector u = gaussian<VectorTag>(rng, x.dim());
      const Vector v = gaussian<VectorTag>(rng, x.dim());
      const Functional f = gaussian<FunctionalTag>(rng, x.dim());
      REQUIRE(std::abs(action(f, u)) <= x.dual_norm(f) * x.norm(u) * (1 + 1e-12) + 1e-14);
      REQUIRE(x.norm(u + v) <= x.norm(u) + x.norm(v) + 1e-12);
      REQUIRE(x.norm(-2.5 * u) == doctest::Approx(2.5 * x.norm(u)).epsilon(1e-13));
      REQUIRE(dual.norm(as_vector(f)) == doctest::Approx(x.dual_norm(f)).epsilon(1e-12));
    }
  }
}

TEST_CASE("supporting functionals and norming points") {
  std::mt19937_64 rng(12);
  for (const auto& [name, x] : zoo()) {
    CAPTURE(name);
    std::vector<Vector> probes;
    for (int i = 0; i < 200; ++i) probes.push_back(gaussian<VectorTag>(rng, x.dim()));
    if (auto ext = x.extreme_points()) probes.insert(probes.end(), ext->begin(), ext->end());
    for (const Vector& v : probes) {
      const Functional f = x.support_functional(v);
      REQUIRE(action(f, v) >= x.norm(v) - 1e-12);
      REQUIRE(x.dual_norm(f) <= 1.0 + 1e-12);
    }
    for (int i = 0; i < 200; ++i) {
      const Functional f = gaussian<FunctionalTag>(rng, x.dim());
      const Vector y = x.norming_point(f);
      REQUIRE(x.norm(y) == doctest::Approx(1.0).epsilon(1e-12));
      REQUIRE(action(f, y) == doctest::Approx(x.dual_norm(f)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(NormedSpace::l2(2).support_functional(Vector{0, 0}), Error);
}

TEST_CASE("non-smooth points give the barycentre of the face") {
  const Functional f = NormedSpace::linf(2).support_functional(Vector{1, 1});
  CHECK(f[0] == doctest::Approx(0.5));
  CHECK(f[1] == doctest::Approx(0.5));
  const Vector y = NormedSpace::l1(2).norming_point(Functional{1, 1});
  CHECK(y[0] == doctest::Approx(0.5));
  CHECK(y[1] == doctest::Approx(0.5));
}

TEST_CASE("polytope gauges agree with the linear-programming route") {
  std::mt19937_64 rng(13);
  const std::vector<std::vector<Vector>> shapes = {
      cube3(), cuboctahedron(), {Vector{1, 0}, Vector{0.3, 1}, Vector{-1, 0}, Vector{-0.3, -1}}};
  for (const auto& verts : shapes) {
    const NormedSpace x = NormedSpace::polytope(verts);
    const NormedSpace bidual = x.dual().dual();
    for (int i = 0; i < 100; ++i) {
      const Vector v = gaussian<VectorTag>(rng, x.dim());
      const Functional f = gaussian<FunctionalTag>(rng, x.dim());
      REQUIRE(gauge_lp(verts, v) == doctest::Approx(x.norm(v)).epsilon(1e-10));
      REQUIRE(dual_gauge_lp(x.facets(), f) == doctest::Approx(x.dual_norm(f)).epsilon(1e-10));
      REQUIRE(bidual.norm(v) == doctest::Approx(x.norm(v)).epsilon(1e-10));
    }
  }
}

TEST_CASE("planar polytopes match the hand-built polygon") {
  std::mt19937_64 rng(14);
  const oracle::Polygon hex = oracle::regular_hexagon();
  const NormedSpace x = NormedSpace::hexagon();
  for (int i = 0; i < 200; ++i) {
    const Vector v = gaussian<VectorTag>(rng, 2);
    const Functional f = gaussian<FunctionalTag>(rng, 2);
    REQUIRE(x.norm(v) == doctest::Approx(hex.norm({v[0], v[1]})).epsilon(1e-13));
    REQUIRE(x.dual_norm(f) == doctest::Approx(hex.dual_norm({f[0], f[1]})).epsilon(1e-13));
  }
}

TEST_CASE("direct sums are exact") {
  std::mt19937_64 rng(15);
  const NormedSpace a = NormedSpace::l2(2), b = NormedSpace::hexagon();
  const NormedSpace s1 = NormedSpace::sum1(a, b), si = NormedSpace::suminf(a, b);
  for (int i = 0; i < 200; ++i) {
    const Vector v = gaussian<VectorTag>(rng, 4);
    const Functional f = gaussian<FunctionalTag>(rng, 4);
    const Vector va = v.slice(0, 2), vb = v.slice(2, 2);
    const Functional fa = f.slice(0, 2), fb = f.slice(2, 2);
    REQUIRE(s1.norm(v) == a.norm(va) + b.norm(vb));
    REQUIRE(si.norm(v) == std::max(a.norm(va), b.norm(vb)));
    REQUIRE(s1.dual_norm(f) == std::max(a.dual_norm(fa), b.dual_norm(fb)));
    REQUIRE(si.dual_norm(f) == a.dual_norm(fa) + b.dual_norm(fb));
  }
}

TEST_CASE("extreme points") {
  CHECK(NormedSpace::linf(2).extreme_points()->size() == 4);
  CHECK(NormedSpace::l1(3).extreme_points()->size() == 6);
  CHECK(NormedSpace::hexagon().extreme_points()->size() == 6);
  CHECK(NormedSpace::polytope(cuboctahedron()).extreme_points()->size() == 12);
  CHECK_FALSE(NormedSpace::l2(2).extreme_points().has_value());
  // interior and edge points of the vertex list are dropped
  const NormedSpace sq = NormedSpace::polytope({Vector{1, 1}, Vector{-1, 1}, Vector{-1, -1}, Vector{1, -1},
                                                Vector{1, 0}, Vector{-1, 0}, Vector{0.2, 0.1}, Vector{-0.2, -0.1}});
  CHECK(sq.extreme_points()->size() == 4);
  CHECK(sq.norm(Vector{0.5, 2}) == doctest::Approx(2.0));
}

TEST_CASE("invalid spaces") {
  auto kind_of = [](auto&& make) {
    try {
      make();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::NotFound;
  };
  CHECK(kind_of([] { NormedSpace::lp(0.5, 2); }) == ErrorKind::InvalidSpace);
  CHECK(kind_of([] { NormedSpace::polytope({Vector{1, 0}, Vector{0, 1}, Vector{-1, 0}}); }) == ErrorKind::InvalidSpace);
  CHECK(kind_of([] { NormedSpace::polytope({Vector{1, 1}, Vector{-1, -1}}); }) == ErrorKind::InvalidSpace);
  CHECK(kind_of([] { NormedSpace::l2(2).norm(Vector{1, 2, 3}); }) == ErrorKind::DimensionMismatch);
}

}
