#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "vlnaug/error.hpp"
#include "vlnaug/view_geometry.hpp"

using namespace vlnaug;
using namespace vlnaug::geometry;

TEST_CASE("heading") {
  CHECK(heading_to({0, 0, 0}, {0, 1, 0}).value == 0.0);
  CHECK(heading_to({0, 0, 0}, {1, 0, 0}).value == doctest::Approx(kPi / 2));
  // atan2(−1, −1) = −3π/4, shifted by 2π.
  CHECK(heading_to({0, 0, 0}, {-1, -1, 0}).value == doctest::Approx(5 * kPi / 4));
  const auto d = heading_to({1, 2, 0}, {1, 2, 5});
  CHECK(d.degenerate);
  CHECK(d.value == 0.0);
  CHECK_FALSE(heading_to({0, 0, 0}, {0, 1, 0}).degenerate);
}

TEST_CASE("elevation") {
  CHECK(elevation_to({0, 0, 0}, {0, 1, 1}) == doctest::Approx(kPi / 4));
  CHECK(elevation_to({0, 0, 0}, {3, 4, 0}) == 0.0);
  CHECK(elevation_to({0, 0, 0}, {0, 0, -2}) == doctest::Approx(-kPi / 2));
  CHECK(elevation_to({1, 1, 1}, {1, 1, 1}) == 0.0);
}

TEST_CASE("wrap_angle") {
  CHECK(wrap_angle(3 * kPi / 2) == doctest::Approx(-kPi / 2));
  CHECK(wrap_angle(-kPi) == kPi);
  CHECK(wrap_angle(kPi) == kPi);
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(7 * kPi) == doctest::Approx(kPi));
  CHECK_THROWS_AS(wrap_angle(std::numeric_limits<double>::infinity()), Error);
  CHECK_THROWS_AS(wrap_angle(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST_CASE("relative bearing") {
  CHECK(relative_bearing(0, kPi / 2) == doctest::Approx(kPi / 2));
  CHECK(relative_bearing(kPi / 2, 0) == doctest::Approx(-kPi / 2));
  // wrap(π/4 − 7π/4) = wrap(−3π/2) = π/2.
  CHECK(relative_bearing(7 * kPi / 4, kPi / 4) == doctest::Approx(kPi / 2));
}

TEST_CASE("projected area") {
  CHECK(projected_area({0.5, 0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(projected_area({1.0, 0.6, 0.1}) == doctest::Approx(2.4));
  CHECK(projected_area({0, 0, 0}) == 0.0);
}

TEST_CASE("field of view") {
  const FovConfig fov;
  CHECK(in_fov(0, 0, fov));
  CHECK_FALSE(in_fov(kPi, 0, fov));
  CHECK(in_fov(kPi / 3, 0, fov));
  CHECK(in_fov(-kPi / 3, kPi / 6, fov));
  CHECK_FALSE(in_fov(0, kPi / 6 + 1e-9, fov));
  CHECK_THROWS_AS(validate(FovConfig{0.0, -0.1, 0.1}), Error);
  CHECK_THROWS_AS(validate(FovConfig{1.0, 0.1, 0.1}), Error);
  CHECK_NOTHROW(validate(FovConfig{kPi, -0.1, 0.1}));
}

TEST_CASE("angle properties") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coord(-10, 10);
  std::uniform_real_distribution<double> ang(-20, 20);
  std::uniform_real_distribution<double> rad(0, 3);
  for (int i = 0; i < 2000; ++i) {
    const Vec3 a{coord(rng), coord(rng), coord(rng)}, b{coord(rng), coord(rng), coord(rng)};
    const double ab = heading_to(a, b).value, ba = heading_to(b, a).value;
    CHECK(ab >= 0.0);
    CHECK(ab < kTwoPi);
    CHECK(std::abs(wrap_angle(ab - ba)) == doctest::Approx(kPi));

    const double x = ang(rng);
    const double w = wrap_angle(x);
    CHECK(w > -kPi);
    CHECK(w <= kPi);
    CHECK(wrap_angle(w) == w);
    if (std::abs(w) < kPi) CHECK(wrap_angle(-x) == doctest::Approx(-w));

    const double h = normalize_heading(x);
    CHECK(relative_bearing(h, h) == 0.0);

    const double r0 = rad(rng), r1 = rad(rng), r2 = rad(rng);
    const double area = projected_area({r0, r1, r2});
    CHECK(projected_area({r2, r0, r1}) == area);
    CHECK(projected_area({r1, r2, r0}) == area);
    CHECK(projected_area({r0, r2, r1}) == area);
  }
}
