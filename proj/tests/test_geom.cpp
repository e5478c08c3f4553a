#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "yao4/geom.hpp"

using namespace yao4;

namespace {

Point rotate90_about(Point center, Point p) {
  const Point rel{p.x - center.x, p.y - center.y};
  const Point rot = rotate90(rel);
  return {center.x + rot.x, center.y + rot.y};
}

coord_t small_coord(std::mt19937_64& rng) {
  return coord_t(rng() % 2001) - 1000;
}

}  // namespace

TEST_CASE("quadrant classification follows the half-open convention") {
  const Point origin{0, 0};
  CHECK(classify_quadrant(origin, {1, 2}) == Quadrant(0));
  CHECK(classify_quadrant(origin, {3, 0}) == Quadrant(0));   // +x axis closed into Q0
  CHECK(classify_quadrant(origin, {0, 5}) == Quadrant(1));   // +y axis into Q1
  CHECK(classify_quadrant(origin, {-1, -1}) == Quadrant(2));
  CHECK(classify_quadrant(origin, {0, -4}) == Quadrant(3));  // -y axis into Q3
  CHECK(classify_quadrant(origin, {-7, 0}) == Quadrant(2));  // -x axis into Q2
  CHECK_THROWS_AS(classify_quadrant(origin, origin), degenerate_pair_error);
}

TEST_CASE("squared distances are exact") {
  CHECK(dist2({0, 0}, {3, 4}) == wide_t(25));
  CHECK(dist2({0, 0}, {0, 0}) == wide_t(0));
  CHECK(dist2({-1, 2}, {2, -2}) == wide_t(25));
  // Near the coordinate limit the square exceeds 64 bits.
  const coord_t big = kCoordLimit;
  CHECK(dist2({-big, 0}, {big, 0}) == wide_t(2 * big) * wide_t(2 * big));
}

TEST_CASE("proper crossing predicate") {
  const Segment diag1{{0, 0}, {2, 2}};
  const Segment diag2{{0, 2}, {2, 0}};
  CHECK(properly_cross(diag1, diag2));

  const Segment shares_endpoint{{2, 2}, {4, 0}};
  CHECK_FALSE(properly_cross(diag1, shares_endpoint));

  CHECK_FALSE(properly_cross({{0, 0}, {1, 1}}, {{5, 5}, {6, 7}}));

  SUBCASE("collinear interior overlap counts") {
    CHECK(properly_cross({{0, 0}, {4, 4}}, {{2, 2}, {6, 6}}));
    CHECK(properly_cross({{0, 0}, {4, 4}}, {{1, 1}, {3, 3}}));  // containment
    CHECK_FALSE(properly_cross({{0, 0}, {2, 2}}, {{2, 2}, {4, 4}}));  // endpoint touch
    CHECK_FALSE(properly_cross({{0, 0}, {2, 2}}, {{3, 3}, {5, 5}}));  // disjoint
  }
  SUBCASE("endpoint in the other segment's interior is not a proper cross") {
    CHECK_FALSE(properly_cross({{0, 0}, {4, 0}}, {{2, 0}, {2, 3}}));
    CHECK_FALSE(properly_cross({{0, 0}, {4, 0}}, {{2, -3}, {2, 0}}));
  }
}

TEST_CASE("closed rectangle membership") {
  const Rect r{{0, 0}, {2, 2}};
  CHECK(in_rect({1, 1}, r));
  CHECK(in_rect({0, 2}, r));  // boundary is closed
  CHECK_FALSE(in_rect({3, 1}, r));
  // Corner order must not matter.
  CHECK(in_rect({1, 1}, Rect{{2, 2}, {0, 0}}));
}

TEST_CASE("sector membership") {
  const Point a{0, 0}, b{4, 4};
  CHECK(in_sector(a, b, {1, 1}));
  CHECK_FALSE(in_sector(a, b, {5, 5}));   // outside the disk
  CHECK_FALSE(in_sector(a, b, {-1, 1}));  // wrong quadrant
  CHECK(in_sector(a, b, b));              // the reach point itself, closed disk
  CHECK_THROWS_AS(in_sector(a, a, {1, 1}), degenerate_pair_error);
  CHECK_THROWS_AS(in_sector(a, b, a), degenerate_pair_error);
}

TEST_CASE("rotate90 is the exact quarter turn") {
  CHECK(rotate90({1, 0}) == Point{0, 1});
  CHECK(rotate90({0, 0}) == Point{0, 0});
  Point p{123, -456};
  Point q = p;
  for (int i = 0; i < 4; ++i) q = rotate90(q);
  CHECK(q == p);
}

TEST_CASE("quadrants partition the punctured plane") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Point a{small_coord(rng), small_coord(rng)};
    const Point b{small_coord(rng), small_coord(rng)};
    if (a == b) continue;
    const Quadrant q = classify_quadrant(a, b);
    // Exactly one of the four membership conditions holds.
    const coord_t dx = b.x - a.x, dy = b.y - a.y;
    const bool m[4] = {dx > 0 && dy >= 0, dx <= 0 && dy > 0, dx < 0 && dy <= 0,
                       dx >= 0 && dy < 0};
    int holds = 0;
    for (int i = 0; i < 4; ++i) holds += m[i] ? 1 : 0;
    CHECK(holds == 1);
    CHECK(m[q.index()]);
  }
}

TEST_CASE("classification is rotationally consistent and antipodal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Point a{small_coord(rng), small_coord(rng)};
    const Point b{small_coord(rng), small_coord(rng)};
    if (a == b) continue;
    const Quadrant q = classify_quadrant(a, b);
    CHECK(classify_quadrant(a, rotate90_about(a, b)) == q.next());
    CHECK(classify_quadrant(b, a) == q.opposite());
  }
}

TEST_CASE("predicates are translation and scaling invariant") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Point pts[4];
    for (Point& p : pts) p = {small_coord(rng), small_coord(rng)};
    if (pts[0] == pts[1] || pts[2] == pts[3]) continue;
    const Segment s1{pts[0], pts[1]}, s2{pts[2], pts[3]};
    const bool crossed = properly_cross(s1, s2);
    // Swap arguments and endpoints.
    CHECK(properly_cross(s2, s1) == crossed);
    CHECK(properly_cross({s1.q, s1.p}, {s2.q, s2.p}) == crossed);

    const coord_t tx = small_coord(rng), ty = small_coord(rng);
    const coord_t k = 1 + coord_t(rng() % 5);
    auto shift = [&](Point p) { return Point{p.x + tx, p.y + ty}; };
    auto scale = [&](Point p) { return Point{p.x * k, p.y * k}; };
    CHECK(properly_cross({shift(pts[0]), shift(pts[1])}, {shift(pts[2]), shift(pts[3])}) ==
          crossed);
    CHECK(properly_cross({scale(pts[0]), scale(pts[1])}, {scale(pts[2]), scale(pts[3])}) ==
          crossed);
    if (pts[0] != pts[1]) {
      const Quadrant q = classify_quadrant(pts[0], pts[1]);
      CHECK(classify_quadrant(shift(pts[0]), shift(pts[1])) == q);
      CHECK(classify_quadrant(scale(pts[0]), scale(pts[1])) == q);
    }
  }
}

TEST_CASE("crossing witness lies on both segments") {
  std::mt19937_64 rng(17);
  int found = 0;
  for (int trial = 0; trial < 4000 && found < 200; ++trial) {
    Point pts[4];
    for (Point& p : pts) p = {small_coord(rng), small_coord(rng)};
    if (pts[0] == pts[1] || pts[2] == pts[3]) continue;
    const Segment s1{pts[0], pts[1]}, s2{pts[2], pts[3]};
    if (!properly_cross(s1, s2)) continue;
    const CrossingWitness w = crossing_witness(s1, s2);
    if (w.collinear_overlap) continue;
    ++found;
    // Exact incidence: (q-p) x (w - p) == 0 with w scaled by its denominator.
    for (const Segment& s : {s1, s2}) {
      const wide_t rx = w.at.num_x - wide_t(s.p.x) * w.at.den;
      const wide_t ry = w.at.num_y - wide_t(s.p.y) * w.at.den;
      const wide_t cross = (wide_t(s.q.x) - s.p.x) * ry - (wide_t(s.q.y) - s.p.y) * rx;
      CHECK(cross == wide_t(0));
    }
    CHECK(w.at.den > 0);
  }
  CHECK(found >= 100);  // the sampler must actually exercise the witness path
}

TEST_CASE("wide integer helpers") {
  CHECK(wide_to_string(wide_t(0)) == "0");
  CHECK(wide_to_string(wide_t(-12345)) == "-12345");
  const wide_t big = wide_t(1) << 100;
  CHECK(wide_to_string(big) == "1267650600228229401496703205376");
  CHECK(wide_gcd(wide_t(12), wide_t(-18)) == wide_t(6));
  CHECK(wide_gcd(wide_t(0), wide_t(7)) == wide_t(7));
}
