#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "guardian/geometry.hpp"
#include "guardian/observation.hpp"
#include "oracles.hpp"

using namespace guardian;

TEST_CASE("error vector is attacker minus defender") {
  CHECK(error_vector({4, 0}, {1, 0}) == Vec2{3, 0});
  CHECK(error_vector({0, 0}, {0, 0}) == Vec2{0, 0});
  CHECK(error_vector({3, 4}, {1, 1}) == Vec2{2, 3});
}

TEST_CASE("capture distance is inclusive") {
  CHECK(is_captured({2, 0}, {0, 0}, 2.0));
  CHECK_FALSE(is_captured({2.001, 0}, {0, 0}, 2.0));
  CHECK(is_captured({1, 1}, {0, 0}, 2.0));
}

TEST_CASE("closest safe reachable point") {
  SUBCASE("axis-aligned bisectors") {
    const Vec2 a = closest_safe_reachable_point({4, 0}, {0, 0});
    CHECK(a.x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(a.y == doctest::Approx(0.0));
    const Vec2 b = closest_safe_reachable_point({0, 6}, {0, 2});
    CHECK(b.x == doctest::Approx(0.0));
    CHECK(b.y == doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("oblique pair against the bisector scan") {
    const Vec2 got = closest_safe_reachable_point({5, 3}, {1, 1});
    const Vec2 want = oracle::closest_point({5, 3}, {1, 1});
    CHECK(norm(got - want) <= 1e-3);
  }
  SUBCASE("origin is returned when the attacker reaches it first") {
    CHECK(closest_safe_reachable_point({1, 0}, {5, 0}) == Vec2{0, 0});
    CHECK(closest_safe_reachable_point({3, 4}, {0, 5}) == Vec2{0, 0});
  }
}

TEST_CASE("defense margin values") {
  CHECK(defense_margin({4, 0}, {0, 0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(defense_margin({6, 0}, {2, 0}) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(defense_margin({5, 3}, {1, 1}) - norm(closest_safe_reachable_point({5, 3}, {1, 1}))) <=
        1e-9);
  CHECK(defense_margin({1, 0}, {5, 0}) < 0.0);
  CHECK_THROWS_AS(defense_margin({1, 1}, {1, 1}), CoincidentAgentsError);
}

TEST_CASE("margin equals the oracle point distance on random pairs") {
  Rng rng(11);
  int checked = 0;
  while (checked < 2000) {
    const Vec2 xa = oracle::uniform_in_disk(rng, 50.0);
    const Vec2 xd = oracle::uniform_in_disk(rng, 50.0);
    if (!(norm(xa) > norm(xd))) continue;
    ++checked;
    const double m = defense_margin(xa, xd);
    CHECK(std::abs(m - norm(closest_safe_reachable_point(xa, xd))) <= 1e-9);
    CHECK(std::abs(m - oracle::margin(xa, xd)) <= 1e-6);
  }
}

TEST_CASE("closest point lies on the bisector and in the reachable set") {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 xa = oracle::uniform_in_disk(rng, 50.0);
    const Vec2 xd = oracle::uniform_in_disk(rng, 50.0);
    const Vec2 l = closest_safe_reachable_point(xa, xd);
    if (norm(xa) > norm(xd)) {
      CHECK(std::abs(norm(l - xa) - norm(l - xd)) <= 1e-9);
    } else {
      CHECK(l == Vec2{0, 0});
    }
    CHECK(norm(l - xa) <= norm(l - xd) + 1e-9);
  }
}

TEST_CASE("margin is invariant under rotation and point map is equivariant") {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const Vec2 xa = oracle::uniform_in_disk(rng, 50.0);
    const Vec2 xd = oracle::uniform_in_disk(rng, 50.0);
    const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const double m = defense_margin(xa, xd);
    CHECK(defense_margin(rotated(xa, angle), rotated(xd, angle)) ==
          doctest::Approx(m).epsilon(1e-9).scale(1.0));
    const Vec2 l = rotated(closest_safe_reachable_point(xa, xd), angle);
    CHECK(norm(l - closest_safe_reachable_point(rotated(xa, angle), rotated(xd, angle))) <= 1e-9);
  }
}

TEST_CASE("margin sign tracks which agent is nearer the origin") {
  Rng rng(14);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 xa = oracle::uniform_in_disk(rng, 50.0);
    const Vec2 xd = oracle::uniform_in_disk(rng, 50.0);
    const double m = defense_margin(xa, xd);
    CHECK((m > 0.0) == (norm(xa) > norm(xd)));
  }
}

TEST_CASE("zones validation") {
  CHECK_NOTHROW(Zones{}.validate());
  CHECK_THROWS_AS((Zones{10.0, 10.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Zones{50.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Zones{-1.0, -2.0}.validate()), std::invalid_argument);
}
