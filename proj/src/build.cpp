#include "yao4/build.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "yao4/parallel.hpp"

namespace yao4 {

std::optional<YaoEdge> DirectedYaoGraph::edge_at(int v, Quadrant q, const PointSet& ps) const {
  const std::int32_t to = target(v, q);
  if (to < 0) return std::nullopt;
  return YaoEdge{std::int32_t(v), to, q, dist2(ps[v], ps[to])};
}

std::vector<YaoEdge> DirectedYaoGraph::edges(const PointSet& ps) const {
  std::vector<YaoEdge> out;
  out.reserve(edge_count());
  for (int v = 0; v < vertex_count(); ++v) {
    for (int qi = 0; qi < 4; ++qi) {
      if (auto e = edge_at(v, Quadrant(qi), ps)) out.push_back(*e);
    }
  }
  return out;
}

std::size_t DirectedYaoGraph::edge_count() const {
  std::size_t c = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    for (int qi = 0; qi < 4; ++qi) {
      if (has_edge(v, Quadrant(qi))) ++c;
    }
  }
  return c;
}

namespace {

// Quadrant membership as closed box constraints on the integer grid.
// Q0: x >= a.x+1, y >= a.y    Q1: x <= a.x,   y >= a.y+1
// Q2: x <= a.x-1, y <= a.y    Q3: x >= a.x,   y <= a.y-1
// The query point itself never satisfies its own quadrant box.
struct QuadrantBox {
  coord_t xlo, xhi, ylo, yhi;
};

constexpr coord_t kNoBound = std::numeric_limits<coord_t>::max() / 4;

QuadrantBox quadrant_box(Point a, Quadrant q) {
  switch (q.index()) {
    case 0: return {a.x + 1, kNoBound, a.y, kNoBound};
    case 1: return {-kNoBound, a.x, a.y + 1, kNoBound};
    case 2: return {-kNoBound, a.x - 1, -kNoBound, a.y};
    default: return {a.x, kNoBound, -kNoBound, a.y - 1};
  }
}

struct Candidate {
  wide_t d2;
  std::int32_t index;
  bool better_than(const Candidate& o) const {
    return d2 != o.d2 ? d2 < o.d2 : index < o.index;
  }
};

constexpr Candidate kNoCandidate{std::numeric_limits<wide_t>::max() / 2, -1};

// Static kd-tree over the point set, answering exact nearest-neighbor
// queries restricted to an axis-aligned box. Candidates are compared by
// (squared distance, index), matching the reference tie-break; pruning is
// strict-only so an equal-distance lower index can never be skipped.
class KdTree {
 public:
  explicit KdTree(const std::vector<Point>& pts) : pts_(pts) {
    const int n = int(pts.size());
    idx_.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) idx_[std::size_t(i)] = i;
    nodes_.reserve(std::size_t(2 * n + 1));
    if (n > 0) root_ = build(0, n, 0);
  }

  Candidate nearest_in_box(Point a, const QuadrantBox& box) const {
    Candidate best = kNoCandidate;
    if (root_ >= 0) search(root_, a, box, best);
    return best;
  }

 private:
  struct Node {
    coord_t xlo, xhi, ylo, yhi;  // bounding box of the points in [lo, hi)
    int lo, hi;                  // idx_ span
    int left = -1, right = -1;
    int axis = 0;
  };

  static constexpr int kLeafSize = 8;

  int build(int lo, int hi, int axis) {
    Node node;
    node.lo = lo;
    node.hi = hi;
    node.axis = axis;
    node.xlo = node.ylo = std::numeric_limits<coord_t>::max();
    node.xhi = node.yhi = std::numeric_limits<coord_t>::min();
    for (int k = lo; k < hi; ++k) {
      const Point& p = pts_[std::size_t(idx_[std::size_t(k)])];
      node.xlo = std::min(node.xlo, p.x);
      node.xhi = std::max(node.xhi, p.x);
      node.ylo = std::min(node.ylo, p.y);
      node.yhi = std::max(node.yhi, p.y);
    }
    const int self = int(nodes_.size());
    nodes_.push_back(node);
    if (hi - lo > kLeafSize) {
      const int mid = lo + (hi - lo) / 2;
      auto cmp = [&](std::int32_t a, std::int32_t b) {
        const Point& pa = pts_[std::size_t(a)];
        const Point& pb = pts_[std::size_t(b)];
        if (axis == 0) return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
        return pa.y != pb.y ? pa.y < pb.y : pa.x < pb.x;
      };
      std::nth_element(idx_.begin() + lo, idx_.begin() + mid, idx_.begin() + hi, cmp);
      const int l = build(lo, mid, axis ^ 1);
      const int r = build(mid, hi, axis ^ 1);
      nodes_[std::size_t(self)].left = l;
      nodes_[std::size_t(self)].right = r;
    }
    return self;
  }

  // Minimum squared distance from a to (node box ∩ query box); the box pair
  // is disjoint when the clipped range is empty.
  static bool clipped_min_dist2(const Node& nd, Point a, const QuadrantBox& box, wide_t& out) {
    const coord_t xlo = std::max(nd.xlo, box.xlo);
    const coord_t xhi = std::min(nd.xhi, box.xhi);
    const coord_t ylo = std::max(nd.ylo, box.ylo);
    const coord_t yhi = std::min(nd.yhi, box.yhi);
    if (xlo > xhi || ylo > yhi) return false;
    wide_t dx = 0, dy = 0;
    if (a.x < xlo) dx = wide_t(xlo) - a.x;
    else if (a.x > xhi) dx = wide_t(a.x) - xhi;
    if (a.y < ylo) dy = wide_t(ylo) - a.y;
    else if (a.y > yhi) dy = wide_t(a.y) - yhi;
    out = dx * dx + dy * dy;
    return true;
  }

  void search(int ni, Point a, const QuadrantBox& box, Candidate& best) const {
    const Node& nd = nodes_[std::size_t(ni)];
    wide_t bound;
    if (!clipped_min_dist2(nd, a, box, bound)) return;
    if (bound > best.d2) return;  // strict: equal distance may still win on index
    if (nd.left < 0) {
      for (int k = nd.lo; k < nd.hi; ++k) {
        const std::int32_t i = idx_[std::size_t(k)];
        const Point& p = pts_[std::size_t(i)];
        if (p.x < box.xlo || p.x > box.xhi || p.y < box.ylo || p.y > box.yhi) continue;
        const Candidate c{dist2(a, p), i};
        if (c.better_than(best)) best = c;
      }
      return;
    }
    // Visit the child nearer to the query first.
    wide_t dl = 0, dr = 0;
    const bool okl = clipped_min_dist2(nodes_[std::size_t(nd.left)], a, box, dl);
    const bool okr = clipped_min_dist2(nodes_[std::size_t(nd.right)], a, box, dr);
    if (okl && okr) {
      if (dl <= dr) {
        search(nd.left, a, box, best);
        search(nd.right, a, box, best);
      } else {
        search(nd.right, a, box, best);
        search(nd.left, a, box, best);
      }
    } else if (okl) {
      search(nd.left, a, box, best);
    } else if (okr) {
      search(nd.right, a, box, best);
    }
  }

  const std::vector<Point>& pts_;
  std::vector<std::int32_t> idx_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace

DirectedYaoGraph build_reference(const PointSet& ps, QuadrantSet lambda) {
  const int n = ps.size();
  DirectedYaoGraph g(n, lambda);
  const auto quads = lambda.quadrants();
  for (int a = 0; a < n; ++a) {
    std::array<Candidate, 4> best;
    best.fill(kNoCandidate);
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      const Quadrant q = classify_quadrant(ps[a], ps[b]);
      if (!lambda.contains(q)) continue;
      const Candidate c{dist2(ps[a], ps[b]), std::int32_t(b)};
      if (c.better_than(best[std::size_t(q.index())])) best[std::size_t(q.index())] = c;
    }
    for (Quadrant q : quads) {
      g.set_target(a, q, best[std::size_t(q.index())].index);
    }
  }
  return g;
}

DirectedYaoGraph build_optimized(const PointSet& ps, QuadrantSet lambda) {
  const int n = ps.size();
  DirectedYaoGraph g(n, lambda);
  if (n == 0) return g;
  const KdTree tree(ps.points);
  const auto quads = lambda.quadrants();
  parallel_for(std::size_t(n), [&](std::size_t a) {
    for (Quadrant q : quads) {
      const Candidate c = tree.nearest_in_box(ps[int(a)], quadrant_box(ps[int(a)], q));
      g.set_target(int(a), q, c.index);
    }
  });
  return g;
}

DirectedYaoGraph restrict_graph(const DirectedYaoGraph& g, QuadrantSet lambda2) {
  if (!lambda2.subset_of(g.lambda())) {
    throw subset_error("restrict_graph: requested quadrants are not a subset of the built ones");
  }
  DirectedYaoGraph out(g.vertex_count(), lambda2);
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int qi = 0; qi < 4; ++qi) {
      const Quadrant q(qi);
      if (lambda2.contains(q)) out.set_target(v, q, g.target(v, q));
    }
  }
  return out;
}

UndirectedGraph undirected_view(const DirectedYaoGraph& g, const PointSet& ps) {
  UndirectedGraph u;
  u.vertex_count = g.vertex_count();
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  pairs.reserve(g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int qi = 0; qi < 4; ++qi) {
      const std::int32_t to = g.target(v, Quadrant(qi));
      if (to < 0) continue;
      pairs.emplace_back(std::min<std::int32_t>(v, to), std::max<std::int32_t>(v, to));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  u.edges.reserve(pairs.size());
  u.adjacency.assign(std::size_t(u.vertex_count), {});
  for (const auto& [a, b] : pairs) {
    u.edges.push_back({a, b, dist2(ps[a], ps[b])});
    u.adjacency[std::size_t(a)].push_back(b);
    u.adjacency[std::size_t(b)].push_back(a);
  }
  return u;
}

}  // namespace yao4
