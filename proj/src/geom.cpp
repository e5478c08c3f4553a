#include "yao4/geom.hpp"

#include <algorithm>
#include <utility>

namespace yao4 {

wide_t wide_gcd(wide_t a, wide_t b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    const wide_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::string wide_to_string(wide_t v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Peel digits from |v|; negate digit-wise to survive the most negative value.
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string out;
  while (u != 0) {
    out.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Quadrant classify_quadrant(Point a, Point b) {
  if (a == b) throw degenerate_pair_error("classify_quadrant: points coincide");
  const coord_t dx = b.x - a.x;
  const coord_t dy = b.y - a.y;
  if (dx > 0 && dy >= 0) return Quadrant(0);
  if (dx <= 0 && dy > 0) return Quadrant(1);
  if (dx < 0 && dy <= 0) return Quadrant(2);
  return Quadrant(3);  // dx >= 0 && dy < 0
}

namespace {

// Lexicographic (x, y) order; along a common line this orders points by
// position on the line (or its reverse), which is all the collinear-overlap
// test needs.
bool lex_less(Point a, Point b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

}  // namespace

bool properly_cross(const Segment& s1, const Segment& s2) {
  const int d1 = orient_sign(s2.p, s2.q, s1.p);
  const int d2 = orient_sign(s2.p, s2.q, s1.q);
  const int d3 = orient_sign(s1.p, s1.q, s2.p);
  const int d4 = orient_sign(s1.p, s1.q, s2.q);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // All four points on one line: interiors overlap iff the open intervals
    // intersect. A single shared point would be an endpoint touch.
    Point lo1 = s1.p, hi1 = s1.q;
    if (lex_less(hi1, lo1)) std::swap(lo1, hi1);
    Point lo2 = s2.p, hi2 = s2.q;
    if (lex_less(hi2, lo2)) std::swap(lo2, hi2);
    const Point lo = lex_less(lo1, lo2) ? lo2 : lo1;
    const Point hi = lex_less(hi1, hi2) ? hi1 : hi2;
    return lex_less(lo, hi);
  }
  return false;
}

bool in_rect(Point p, const Rect& r) {
  const coord_t xlo = std::min(r.corner1.x, r.corner2.x);
  const coord_t xhi = std::max(r.corner1.x, r.corner2.x);
  const coord_t ylo = std::min(r.corner1.y, r.corner2.y);
  const coord_t yhi = std::max(r.corner1.y, r.corner2.y);
  return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

bool in_sector(Point a, Point b, Point p) {
  if (a == b) throw degenerate_pair_error("in_sector: apex pair coincides");
  if (p == a) throw degenerate_pair_error("in_sector: query point equals apex");
  return classify_quadrant(a, p) == classify_quadrant(a, b) &&
         dist2(a, p) <= dist2(a, b);
}

std::string RationalPoint::x_string() const {
  return den == 1 ? wide_to_string(num_x)
                  : wide_to_string(num_x) + "/" + wide_to_string(den);
}

std::string RationalPoint::y_string() const {
  return den == 1 ? wide_to_string(num_y)
                  : wide_to_string(num_y) + "/" + wide_to_string(den);
}

double RationalPoint::x_approx() const {
  return double((long double)num_x / (long double)den);
}

double RationalPoint::y_approx() const {
  return double((long double)num_y / (long double)den);
}

CrossingWitness crossing_witness(const Segment& s1, const Segment& s2) {
  const wide_t d1x = wide_t(s1.q.x) - s1.p.x;
  const wide_t d1y = wide_t(s1.q.y) - s1.p.y;
  const wide_t d2x = wide_t(s2.q.x) - s2.p.x;
  const wide_t d2y = wide_t(s2.q.y) - s2.p.y;
  const wide_t den = d1x * d2y - d1y * d2x;
  if (den == 0) {
    // properly_cross only admits zero denominators for collinear overlap.
    return CrossingWitness{true, {}};
  }
  const wide_t ex = wide_t(s2.p.x) - s1.p.x;
  const wide_t ey = wide_t(s2.p.y) - s1.p.y;
  const wide_t t_num = ex * d2y - ey * d2x;
  wide_t nx = wide_t(s1.p.x) * den + t_num * d1x;
  wide_t ny = wide_t(s1.p.y) * den + t_num * d1y;
  wide_t d = den;
  if (d < 0) {
    d = -d;
    nx = -nx;
    ny = -ny;
  }
  const wide_t g = wide_gcd(wide_gcd(nx, ny), d);
  if (g > 1) {
    nx /= g;
    ny /= g;
    d /= g;
  }
  return CrossingWitness{false, {nx, ny, d}};
}

}  // namespace yao4
