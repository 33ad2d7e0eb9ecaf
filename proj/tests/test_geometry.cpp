#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "mgrrt/geometry.hpp"

using namespace mgrrt;

namespace {

// Brute-force oracle: minimum distance from a segment to a point, sampled
// over 1e4 points along the segment. Independent of the closed-form test.
double sampled_min_distance(const Segment& s, const Vec2& center) {
  constexpr int kSamples = 10000;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSamples; ++i) {
    const double t = static_cast<double>(i) / kSamples;
    const Vec2 p = s.a + (s.b - s.a) * t;
    best = std::min(best, distance(p, center));
  }
  return best;
}

Vec2 rotate(const Vec2& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace

TEST_CASE("turning_angle on analytic configurations") {
  CHECK(turning_angle({0, 0}, {1, 0}, {2, 0}) == Catch::Approx(0.0).margin(1e-12));
  CHECK(turning_angle({0, 0}, {1, 0}, {1, 1}) ==
        Catch::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK(turning_angle({0, 0}, {1, 0}, {2, 1}) ==
        Catch::Approx(std::numbers::pi / 4).epsilon(1e-12));
}

TEST_CASE("turning_angle rejects degenerate segments") {
  CHECK_THROWS_AS(turning_angle({1, 1}, {1, 1}, {2, 2}), DegenerateSegment);
  CHECK_THROWS_AS(turning_angle({0, 0}, {1, 1}, {1, 1}), DegenerateSegment);
  CHECK_THROWS_AS(turning_angle({0, 0}, {1e-10, 0}, {1, 1}), DegenerateSegment);
}

TEST_CASE("turning_angle is invariant under rigid rotation and uniform scaling") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> scale(0.1, 50.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec2 a{coord(rng), coord(rng)};
    const Vec2 b{coord(rng), coord(rng)};
    const Vec2 c{coord(rng), coord(rng)};
    if (distance(a, b) < 1e-3 || distance(b, c) < 1e-3) continue;
    const double base = turning_angle(a, b, c);
    const double theta = ang(rng);
    const double s = scale(rng);
    const Vec2 shift{coord(rng), coord(rng)};
    const auto xf = [&](const Vec2& p) { return rotate(p, theta) * s + shift; };
    CHECK(turning_angle(xf(a), xf(b), xf(c)) == Catch::Approx(base).margin(1e-9));
  }
}

TEST_CASE("distance basics") {
  CHECK(distance({0, 0}, {3, 4}) == Catch::Approx(5.0).epsilon(1e-15));
  CHECK(distance({7.5, -2.25}, {7.5, -2.25}) == 0.0);
  CHECK(distance({-1, -1}, {2, 3}) == Catch::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("distance satisfies the triangle inequality") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coord(-1000.0, 1000.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec2 a{coord(rng), coord(rng)};
    const Vec2 b{coord(rng), coord(rng)};
    const Vec2 c{coord(rng), coord(rng)};
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
    CHECK(distance(a, b) == Catch::Approx(distance(b, a)).margin(1e-12));
  }
}

TEST_CASE("segment_circle_hit on axis-aligned cases") {
  const Segment s{{0, 0}, {10, 0}};
  CHECK_FALSE(segment_circle_hit(s, {5, 5}, 1.0));
  CHECK(segment_circle_hit(s, {5, 0}, 1.0));
  // Tangency counts as a hit (closed obstacle sets).
  CHECK(segment_circle_hit(s, {5, 1}, 1.0));
}

TEST_CASE("segment_circle_hit matches the sampled-distance oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-50.0, 50.0);
  std::uniform_real_distribution<double> rad(0.1, 30.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Segment s{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
    if (distance(s.a, s.b) < 1e-6) continue;
    const Vec2 center{coord(rng), coord(rng)};
    const double r = rad(rng);
    const double sampled = sampled_min_distance(s, center);
    // The sampled minimum over 1e4 subdivisions overshoots the true minimum
    // by at most the half chord step; 1e-6 relative slack absorbs it.
    if (segment_circle_hit(s, center, r)) {
      CHECK(sampled <= r + distance(s.a, s.b) / 10000.0 + 1e-6);
    } else {
      CHECK(sampled > r);
    }
  }
}

TEST_CASE("segment_rect_hit with and without inflation") {
  const Rect rect{{4, 0}, {6, 1}};
  CHECK_FALSE(segment_rect_hit({{0, 5}, {10, 5}}, rect, 0.0));
  CHECK(segment_rect_hit({{0, 0.5}, {10, 0.5}}, rect, 0.0));
  // Touches the inflated boundary exactly: closed-set convention.
  CHECK(segment_rect_hit({{0, 2}, {10, 2}}, rect, 1.0));
  CHECK_FALSE(segment_rect_hit({{0, 2.0000001}, {10, 2.0000001}}, rect, 1.0));
}

TEST_CASE("segment_rect_hit handles containment and corners") {
  const Rect rect{{0, 0}, {10, 10}};
  CHECK(segment_rect_hit({{4, 4}, {6, 6}}, rect, 0.0));       // fully inside
  CHECK(segment_rect_hit({{-5, -5}, {15, 15}}, rect, 0.0));   // straddles
  CHECK(segment_rect_hit({{11, 11}, {12, 12}}, rect, 2.0));   // near corner, inflated
  CHECK_FALSE(segment_rect_hit({{11.5, 11.5}, {12, 12}}, rect, 2.0));
}

TEST_CASE("point_segment_distance clamps to endpoints") {
  const Segment s{{0, 0}, {10, 0}};
  CHECK(point_segment_distance({-3, 4}, s) == Catch::Approx(5.0));
  CHECK(point_segment_distance({13, 4}, s) == Catch::Approx(5.0));
  CHECK(point_segment_distance({5, 2}, s) == Catch::Approx(2.0));
}
