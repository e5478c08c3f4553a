#include "yao4/point_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace yao4 {

namespace {

void check_coord(coord_t v) {
  if (v > kCoordLimit || v < -kCoordLimit) {
    throw std::invalid_argument(
        "coordinate " + std::to_string(v) + " exceeds the exact-arithmetic limit of ±" +
        std::to_string(kCoordLimit) + " grid ticks");
  }
}

}  // namespace

GeneralPositionReport validate_general_position(const std::vector<Point>& points) {
  const int n = int(points.size());
  GeneralPositionReport report;
  report.computed = true;

  // Duplicates and shared coordinates via sorted index passes.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[std::size_t(i)] = i;

  auto by_xy = [&](int a, int b) {
    const Point& pa = points[std::size_t(a)];
    const Point& pb = points[std::size_t(b)];
    return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
  };
  std::sort(order.begin(), order.end(), by_xy);
  for (int k = 0; k + 1 < n; ++k) {
    const int i = order[std::size_t(k)];
    const int j = order[std::size_t(k + 1)];
    if (points[std::size_t(i)] == points[std::size_t(j)]) {
      throw std::invalid_argument("duplicate point at indices " + std::to_string(std::min(i, j)) +
                                  " and " + std::to_string(std::max(i, j)));
    }
  }

  auto collect_shared = [&](auto key, std::vector<std::pair<int, int>>& out) {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const coord_t ka = key(points[std::size_t(a)]);
      const coord_t kb = key(points[std::size_t(b)]);
      return ka != kb ? ka < kb : a < b;
    });
    for (int k = 0; k + 1 < n; ++k) {
      const int i = order[std::size_t(k)];
      const int j = order[std::size_t(k + 1)];
      if (key(points[std::size_t(i)]) == key(points[std::size_t(j)])) {
        out.emplace_back(std::min(i, j), std::max(i, j));
      }
    }
  };
  collect_shared([](const Point& p) { return p.x; }, report.shared_x);
  collect_shared([](const Point& p) { return p.y; }, report.shared_y);

  // Distance ties: sort all n(n-1)/2 squared distances, report adjacent equals.
  struct PairDist {
    wide_t d2;
    int i, j;
  };
  std::vector<PairDist> dists;
  dists.reserve(std::size_t(n) * std::size_t(n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dists.push_back({dist2(points[std::size_t(i)], points[std::size_t(j)]), i, j});
    }
  }
  std::sort(dists.begin(), dists.end(), [](const PairDist& a, const PairDist& b) {
    if (a.d2 != b.d2) return a.d2 < b.d2;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  for (std::size_t k = 0; k + 1 < dists.size(); ++k) {
    if (dists[k].d2 == dists[k + 1].d2) {
      report.distance_ties.push_back(
          {std::pair{dists[k].i, dists[k].j}, std::pair{dists[k + 1].i, dists[k + 1].j}});
    }
  }

  report.clean = report.distance_ties.empty() && report.shared_x.empty() &&
                 report.shared_y.empty();
  return report;
}

PointSet make_point_set(std::vector<Point> points, int scale, bool skip_validation) {
  if (scale < 0 || scale > 18) {
    throw std::invalid_argument("scale must be in [0, 18]");
  }
  for (const Point& p : points) {
    check_coord(p.x);
    check_coord(p.y);
  }
  PointSet ps;
  ps.points = std::move(points);
  ps.scale = scale;
  if (skip_validation) {
    // Distinctness still matters for index identity.
    std::vector<Point> sorted = ps.points;
    std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate point");
    }
  } else {
    ps.validation = validate_general_position(ps.points);
  }
  return ps;
}

PointSet rotated90(const PointSet& ps, int times) {
  PointSet out = ps;
  const int k = ((times % 4) + 4) % 4;
  for (Point& p : out.points) {
    for (int t = 0; t < k; ++t) p = rotate90(p);
  }
  // Rotation preserves cleanliness and distance ties; an odd number of
  // quarter turns swaps which coordinate the shared-axis pairs refer to.
  if (k == 1 || k == 3) std::swap(out.validation.shared_x, out.validation.shared_y);
  return out;
}

}  // namespace yao4
