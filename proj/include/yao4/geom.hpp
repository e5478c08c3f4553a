#pragma once
/**
 * Exact planar primitives on an integer grid.
 *
 * Coordinates are signed 64-bit grid ticks and every predicate is evaluated
 * in 128-bit integer arithmetic, so all comparisons are exact provided |x|
 * and |y| stay within kCoordLimit (2^40 ticks). That bound keeps the largest
 * intermediate product (coordinate times a cross product, used by rational
 * crossing witnesses) inside the signed 128-bit range.
 *
 * Quadrant convention: Q_i covers direction angles [90°·i, 90°·(i+1)), i.e.
 * each quadrant is closed on its lower bounding ray and open on the upper
 * one. The +x axis lies in Q0, +y in Q1, -x in Q2, -y in Q3. Equivalently:
 *
 *   Q0: dx > 0 and dy >= 0        Q1: dx <= 0 and dy > 0
 *   Q2: dx < 0 and dy <= 0        Q3: dx >= 0 and dy < 0
 *
 * This assignment is rotationally consistent: rotating the target point by
 * +90° about the apex moves it from Q_i to Q_{i+1}.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace yao4 {

using coord_t = std::int64_t;
using wide_t = __int128;

// Largest admissible |coordinate|, in grid ticks.
inline constexpr coord_t kCoordLimit = coord_t{1} << 40;

struct Point {
  coord_t x = 0;
  coord_t y = 0;
  friend constexpr bool operator==(const Point&, const Point&) = default;
};

// (x, y) -> (-y, x): rotation by +90° about the origin, exact.
constexpr Point rotate90(Point p) { return {-p.y, p.x}; }

// One of the four 90° cones; arithmetic wraps mod 4.
class Quadrant {
 public:
  constexpr Quadrant() = default;
  constexpr explicit Quadrant(int index) : index_(((index % 4) + 4) % 4) {}
  constexpr int index() const { return index_; }
  constexpr Quadrant next() const { return Quadrant(index_ + 1); }
  constexpr Quadrant prev() const { return Quadrant(index_ + 3); }
  constexpr Quadrant opposite() const { return Quadrant(index_ + 2); }
  friend constexpr bool operator==(const Quadrant&, const Quadrant&) = default;

 private:
  int index_ = 0;
};

struct Segment {
  Point p;
  Point q;  // p != q at every call site that builds one
};

// Closed axis-aligned rectangle spanned by two opposite corners.
struct Rect {
  Point corner1;
  Point corner2;
};

struct degenerate_pair_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr wide_t wide_abs(wide_t v) { return v < 0 ? -v : v; }

constexpr int sign_of(wide_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

wide_t wide_gcd(wide_t a, wide_t b);
std::string wide_to_string(wide_t v);

// Exact squared Euclidean distance in grid ticks².
constexpr wide_t dist2(Point a, Point b) {
  const wide_t dx = wide_t(b.x) - wide_t(a.x);
  const wide_t dy = wide_t(b.y) - wide_t(a.y);
  return dx * dx + dy * dy;
}

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
constexpr int orient_sign(Point a, Point b, Point c) {
  const wide_t lhs = (wide_t(b.x) - a.x) * (wide_t(c.y) - a.y);
  const wide_t rhs = (wide_t(b.y) - a.y) * (wide_t(c.x) - a.x);
  return sign_of(lhs - rhs);
}

// Quadrant of b as seen from a. Throws degenerate_pair_error when a == b.
Quadrant classify_quadrant(Point a, Point b);

// True iff the relative interiors of the two segments share a point.
// Shared endpoints alone do not count; collinear interior overlap does.
bool properly_cross(const Segment& s1, const Segment& s2);

bool in_rect(Point p, const Rect& r);

// p ∈ Q(a,b): same quadrant as b about a and within the closed disk |ab|.
bool in_sector(Point a, Point b, Point p);

// Exact rational point (num_x/den, num_y/den); den > 0 and gcd-reduced.
struct RationalPoint {
  wide_t num_x = 0;
  wide_t num_y = 0;
  wide_t den = 1;
  std::string x_string() const;
  std::string y_string() const;
  double x_approx() const;
  double y_approx() const;
};

// Witness for a proper crossing: either a transversal intersection point or
// a collinear-overlap flag. Precondition: properly_cross(s1, s2).
struct CrossingWitness {
  bool collinear_overlap = false;
  RationalPoint at;  // meaningful only when !collinear_overlap
};

CrossingWitness crossing_witness(const Segment& s1, const Segment& s2);

}  // namespace yao4
