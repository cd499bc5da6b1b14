#include <algorithm>
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "bpb/parallel.hpp"
#include "bpb/sampling.hpp"

using namespace bpb;

TEST_SUITE("sampling") {

TEST_CASE("four points on the Euclidean circle") {
  const auto s = sphere_sample(NormedSpace::l2(2), 4, 1);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == Vector{1.0, 0.0});
  CHECK(s[1] == Vector{0.0, 1.0});
  for (const auto& v : s) CHECK(NormedSpace::l2(2).norm(v) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("angular mesh on the square") {
  const NormedSpace x = NormedSpace::linf(2);
  const auto s = sphere_sample(x, 400, 1);
  double gap = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double a = polar_angle(s[i]);
    const double b = i + 1 < s.size() ? polar_angle(s[i + 1]) : polar_angle(s[0]) + 2 * std::numbers::pi;
    REQUIRE(b > a);
    gap = std::max(gap, b - a);
    REQUIRE(x.norm(s[i]) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(gap <= 2 * std::numbers::pi / 400 + 1e-12);
  // the corners of the square are on the mesh
  for (const Vector& c : {Vector{1, 1}, Vector{-1, 1}, Vector{-1, -1}, Vector{1, -1}}) {
    CHECK(std::find(s.begin(), s.end(), c) != s.end());
  }
}

TEST_CASE("sum of two lines") {
  const NormedSpace r = NormedSpace::real_line();
  for (const auto& v : sphere_sample(NormedSpace::sum1(r, r), 100, 1)) {
    REQUIRE(std::abs(v[0]) + std::abs(v[1]) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("gaps shrink with resolution") {
  const NormedSpace x = NormedSpace::hexagon();
  const double g1 = planar_gap(x, sphere_sample(x, 100, 1));
  const double g2 = planar_gap(x, sphere_sample(x, 400, 1));
  CHECK(g2 < g1);
  CHECK(g2 < 0.02);
  const NormedSpace y = NormedSpace::l1(2);
  // the dual sphere is the square, whose sup-norm arc length is at most twice the angle
  CHECK(planar_dual_gap(y, dual_sphere_sample(y, 400, 1)) <= 4 * std::numbers::pi / 400);
}

TEST_CASE("higher dimensions are seeded and normalised") {
  const NormedSpace x = NormedSpace::lp(3.0, 3);
  const auto a = sphere_sample(x, 200, 7);
  const auto b = sphere_sample(x, 200, 7);
  const auto c = sphere_sample(x, 200, 8);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& v : a) REQUIRE(x.norm(v) == doctest::Approx(1.0).epsilon(1e-13));
  for (const auto& g : dual_sphere_sample(x, 200, 7)) REQUIRE(x.dual_norm(g) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("sphere parametrisation") {
  const NormedSpace x = NormedSpace::hexagon();
  for (double t = 0.0; t < 6.28; t += 0.1) {
    const Vector v = sphere_point(x, t);
    REQUIRE(x.norm(v) == doctest::Approx(1.0).epsilon(1e-14));
    REQUIRE(polar_angle(v) == doctest::Approx(t).epsilon(1e-12));
    REQUIRE(x.dual_norm(dual_sphere_point(x, t)) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(sphere_sample(NormedSpace::l2(2), 3, 1), Error);
  CHECK_THROWS_AS(sphere_sample(NormedSpace::l2(5), 100, 1), Error);
  EstimatorConfig c;
  c.resolution = 7;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.tol = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("parallel argmax breaks ties toward the lowest index") {
  std::vector<double> v(10000, 1.0);
  v[17] = 3.0;
  v[9000] = 3.0;
  for (std::size_t threads : {1, 2, 4}) {
    const auto best = parallel_argmax(v.size(), threads, [&](std::size_t i) { return v[i]; });
    CHECK(best == 17);
  }
}

}
