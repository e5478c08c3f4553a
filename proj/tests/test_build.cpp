#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "yao4/build.hpp"
#include "yao4/generate.hpp"
#include "yao4/point_set.hpp"

using namespace yao4;

namespace {

// Raw random points with distinct coordinates but no other cleanup; small
// grids produce plenty of distance ties, which the builders must agree on.
PointSet messy_points(int n, std::uint64_t seed, coord_t range) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<coord_t, coord_t>> seen;
  std::vector<Point> pts;
  while (int(pts.size()) < n) {
    const Point p{coord_t(rng() % std::uint64_t(range)), coord_t(rng() % std::uint64_t(range))};
    if (seen.insert({p.x, p.y}).second) pts.push_back(p);
  }
  return make_point_set(std::move(pts), 0, /*skip_validation=*/true);
}

}  // namespace

TEST_CASE("general position validation") {
  SUBCASE("clean triple") {
    const auto report = validate_general_position({{0, 0}, {1, 2}, {4, 1}});
    CHECK(report.clean);
    CHECK(report.distance_ties.empty());
    CHECK(report.shared_x.empty());
    CHECK(report.shared_y.empty());
  }
  SUBCASE("equidistant pairs are flagged") {
    // (0,0)-(1,2) and (1,2)-(3,1) are both at squared distance 5.
    const auto report = validate_general_position({{0, 0}, {1, 2}, {3, 1}});
    CHECK_FALSE(report.clean);
    CHECK(report.distance_ties.size() == 1);
  }
  SUBCASE("shared column") {
    const auto report = validate_general_position({{0, 0}, {0, 3}});
    CHECK_FALSE(report.clean);
    REQUIRE(report.shared_x.size() == 1);
    CHECK(report.shared_x[0] == std::pair{0, 1});
    CHECK(report.shared_y.empty());
  }
  SUBCASE("constructed distance tie") {
    const auto report = validate_general_position({{0, 0}, {3, 4}, {0, 5}, {3, -1}});
    CHECK_FALSE(report.clean);
    CHECK(report.distance_ties.size() >= 1);
    CHECK(report.shared_x.size() == 2);  // x=0 and x=3 both repeat
  }
  SUBCASE("duplicates are a hard error") {
    CHECK_THROWS_AS(validate_general_position({{1, 1}, {2, 2}, {1, 1}}),
                    std::invalid_argument);
  }
  SUBCASE("coordinates beyond the exact range are rejected") {
    CHECK_THROWS_AS(make_point_set({{kCoordLimit + 1, 0}}, 0), std::invalid_argument);
  }
}

TEST_CASE("reference builder on tiny inputs") {
  SUBCASE("single point has no edges") {
    const PointSet ps = make_point_set({{0, 0}}, 0);
    const DirectedYaoGraph g = build_reference(ps, QuadrantSet::all());
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("two points connect in opposite quadrants") {
    const PointSet ps = make_point_set({{0, 0}, {2, 3}}, 0);
    const DirectedYaoGraph g = build_reference(ps, QuadrantSet::all());
    CHECK(g.edge_count() == 2);
    CHECK(g.target(0, Quadrant(0)) == 1);
    CHECK(g.target(1, Quadrant(2)) == 0);
    CHECK(g.target(0, Quadrant(1)) == -1);
  }
  SUBCASE("a negative-slope line leaves Q0 empty") {
    const PointSet ps = make_point_set({{0, 0}, {10, -11}, {25, -27}, {33, -41}, {47, -55}}, 0,
                                       /*skip_validation=*/true);
    const DirectedYaoGraph g = build_reference(ps, QuadrantSet{0});
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("distance ties break toward the lower index") {
    // Targets 1 and 2 are both at squared distance 25 inside Q0 of vertex 0.
    const PointSet ps = make_point_set({{0, 0}, {3, 4}, {5, 0}}, 0, /*skip_validation=*/true);
    const DirectedYaoGraph g = build_reference(ps, QuadrantSet{0});
    CHECK(g.target(0, Quadrant(0)) == 1);
  }
}

TEST_CASE("optimized builder equals the reference bit for bit") {
  SUBCASE("clean random instances") {
    for (const std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
      const GeneratedInstance inst = gen_random(120, seed, default_random_bbox());
      const DirectedYaoGraph ref = build_reference(inst.point_set, QuadrantSet::all());
      const DirectedYaoGraph opt = build_optimized(inst.point_set, QuadrantSet::all());
      CHECK(opt.same_edges(ref));
    }
  }
  SUBCASE("tie-heavy grids") {
    for (const std::uint64_t seed : {10ull, 11ull, 12ull}) {
      const PointSet ps = messy_points(150, seed, 25);
      for (const QuadrantSet lambda :
           {QuadrantSet{0}, QuadrantSet{1, 2}, QuadrantSet::all()}) {
        const DirectedYaoGraph ref = build_reference(ps, lambda);
        const DirectedYaoGraph opt = build_optimized(ps, lambda);
        CHECK(opt.same_edges(ref));
      }
    }
  }
  SUBCASE("collinear and axis-aligned degeneracies") {
    std::vector<Point> pts;
    for (coord_t i = 0; i < 10; ++i) {
      pts.push_back({i * 3, i * 3});
      pts.push_back({i * 3 + 1, 0});
      pts.push_back({0, i * 3 + 2});
    }
    const PointSet ps = make_point_set(std::move(pts), 0, /*skip_validation=*/true);
    const DirectedYaoGraph ref = build_reference(ps, QuadrantSet::all());
    const DirectedYaoGraph opt = build_optimized(ps, QuadrantSet::all());
    CHECK(opt.same_edges(ref));
  }
}

TEST_CASE("restriction drops quadrants and nothing else") {
  const GeneratedInstance inst = gen_random(60, 21, default_random_bbox());
  const DirectedYaoGraph full = build_optimized(inst.point_set, QuadrantSet::all());
  SUBCASE("restriction equals building directly") {
    for (const QuadrantSet lambda : {QuadrantSet{0}, QuadrantSet{0, 1}, QuadrantSet{2, 3}}) {
      const DirectedYaoGraph direct = build_optimized(inst.point_set, lambda);
      CHECK(restrict_graph(full, lambda).same_edges(direct));
    }
  }
  SUBCASE("identity restriction") {
    CHECK(restrict_graph(full, full.lambda()).same_edges(full));
  }
  SUBCASE("supersets are rejected") {
    const DirectedYaoGraph narrow = build_optimized(inst.point_set, QuadrantSet{0});
    CHECK_THROWS_AS(restrict_graph(narrow, QuadrantSet{0, 1}), subset_error);
  }
}

TEST_CASE("undirected view collapses multiplicity") {
  SUBCASE("mutual pair becomes one edge") {
    const PointSet ps = make_point_set({{0, 0}, {2, 3}}, 0);
    const DirectedYaoGraph g = build_reference(ps, QuadrantSet::all());
    const UndirectedGraph u = undirected_view(g, ps);
    REQUIRE(u.edges.size() == 1);
    CHECK(u.edges[0].u == 0);
    CHECK(u.edges[0].v == 1);
    CHECK(u.edges[0].length2 == wide_t(13));
  }
  SUBCASE("single vertex is empty") {
    const PointSet ps = make_point_set({{5, 5}}, 0);
    const UndirectedGraph u = undirected_view(build_reference(ps, QuadrantSet::all()), ps);
    CHECK(u.edges.empty());
  }
}

TEST_CASE("structural invariants on clean instances") {
  const GeneratedInstance inst = gen_random(150, 33, default_random_bbox());
  const PointSet& ps = inst.point_set;
  const DirectedYaoGraph g = build_optimized(ps, QuadrantSet::all());

  SUBCASE("sector emptiness: nothing strictly closer inside any edge's sector") {
    for (const YaoEdge& e : g.edges(ps)) {
      for (int p = 0; p < ps.size(); ++p) {
        if (p == e.from || p == e.to) continue;
        if (in_sector(ps[e.from], ps[e.to], ps[p])) {
          CHECK(dist2(ps[e.from], ps[p]) >= e.length2);
        }
      }
    }
  }
  SUBCASE("out-degree law: edge exists iff the quadrant is inhabited") {
    for (int v = 0; v < ps.size(); ++v) {
      for (int qi = 0; qi < 4; ++qi) {
        bool inhabited = false;
        for (int p = 0; p < ps.size() && !inhabited; ++p) {
          inhabited = p != v && classify_quadrant(ps[v], ps[p]) == Quadrant(qi);
        }
        CHECK(g.has_edge(v, Quadrant(qi)) == inhabited);
      }
    }
  }
  SUBCASE("point-reflection duality") {
    for (const YaoEdge& e : g.edges(ps)) {
      const Quadrant back = e.quadrant.opposite();
      REQUIRE(g.has_edge(e.to, back));
      CHECK(dist2(ps[e.to], ps[g.target(e.to, back)]) <= e.length2);
    }
  }
  SUBCASE("upward graphs climb strictly") {
    const DirectedYaoGraph g01 = restrict_graph(g, QuadrantSet{0, 1});
    for (const YaoEdge& e : g01.edges(ps)) {
      CHECK(ps[e.to].y > ps[e.from].y);
    }
    const DirectedYaoGraph g0 = restrict_graph(g, QuadrantSet{0});
    for (const YaoEdge& e : g0.edges(ps)) {
      CHECK(ps[e.to].x > ps[e.from].x);
      CHECK(ps[e.to].y > ps[e.from].y);
    }
  }
}

TEST_CASE("rotation equivariance of the builders") {
  const GeneratedInstance inst = gen_random(80, 44, default_random_bbox());
  const PointSet& ps = inst.point_set;
  const PointSet rotated = rotated90(ps);
  for (int i = 0; i < 4; ++i) {
    const DirectedYaoGraph g = build_optimized(ps, QuadrantSet::single(Quadrant(i)));
    const DirectedYaoGraph gr = build_optimized(rotated, QuadrantSet::single(Quadrant(i + 1)));
    for (int v = 0; v < ps.size(); ++v) {
      CHECK(g.target(v, Quadrant(i)) == gr.target(v, Quadrant(i + 1)));
    }
  }
}

TEST_CASE("removing the topmost point can change surviving edges") {
  // Vertex 1 is the unique topmost point and vertex 0's Q1 neighbor; once it
  // is gone, vertex 0 reconnects to vertex 2 instead.
  const PointSet ps = make_point_set({{0, 0}, {-1, 10}, {-10, 2}}, 0);
  REQUIRE(ps.clean());
  const DirectedYaoGraph before = build_reference(ps, QuadrantSet{0, 1});
  CHECK(before.target(0, Quadrant(1)) == 1);

  const PointSet without_top = make_point_set({{0, 0}, {-10, 2}}, 0);
  const DirectedYaoGraph after = build_reference(without_top, QuadrantSet{0, 1});
  CHECK(after.target(0, Quadrant(1)) == 1);  // now the old vertex 2
  // Among the surviving pair there was no edge before, so the edge set on
  // the remaining points changed.
  CHECK(before.target(0, Quadrant(1)) != 2);
}
