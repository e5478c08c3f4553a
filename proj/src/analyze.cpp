#include "yao4/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "yao4/parallel.hpp"

namespace yao4 {

namespace {

constexpr long double kUnreached = -1.0L;

long double edge_length(const PointSet& ps, int a, int b) {
  return sqrtl((long double)dist2(ps[a], ps[b]));
}

// Quarter-turns that map g's quadrant set onto the upward {0,1} frame:
// (4-i)%4 for the singleton {i} or the adjacent pair {i,i+1}, 0 otherwise.
int normalization_turns(QuadrantSet lambda) {
  for (int i = 0; i < 4; ++i) {
    const Quadrant q(i);
    if (lambda == QuadrantSet::single(q) || lambda == QuadrantSet::adjacent_pair(q)) {
      return (4 - i) % 4;
    }
  }
  return 0;
}

// y-coordinate of the point after `turns` quarter-turns, without rotating.
coord_t up_key(Point p, int turns) {
  switch (turns) {
    case 0: return p.y;
    case 1: return p.x;
    case 2: return -p.y;
    default: return -p.x;
  }
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(std::size_t(n)) {
    for (int i = 0; i < n; ++i) parent[std::size_t(i)] = i;
  }
  int find(int v) {
    while (parent[std::size_t(v)] != v) {
      parent[std::size_t(v)] = parent[std::size_t(parent[std::size_t(v)])];
      v = parent[std::size_t(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::size_t(b)] = a;
    return true;
  }
};

}  // namespace

CrossingReport find_crossings(const DirectedYaoGraph& g, const PointSet& ps) {
  const std::vector<YaoEdge> edges = g.edges(ps);
  const std::size_t m = edges.size();
  CrossingReport report;
  if (m < 2) return report;

  std::vector<Segment> segs(m);
  for (std::size_t i = 0; i < m; ++i) {
    segs[i] = Segment{ps[edges[i].from], ps[edges[i].to]};
  }
  std::vector<std::vector<CrossingPair>> found(m);
  parallel_for(m, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (properly_cross(segs[i], segs[j])) {
        found[i].push_back({edges[i], edges[j], crossing_witness(segs[i], segs[j])});
      }
    }
  });
  for (auto& part : found) {
    for (auto& pair : part) report.crossing_pairs.push_back(std::move(pair));
  }
  report.count = report.crossing_pairs.size();
  return report;
}

ConnectivityReport connected_components(const DirectedYaoGraph& g, const PointSet& ps) {
  const int n = g.vertex_count();
  ConnectivityReport report;
  if (n == 0) return report;

  Dsu dsu(n);
  for (int v = 0; v < n; ++v) {
    for (int qi = 0; qi < 4; ++qi) {
      const std::int32_t to = g.target(v, Quadrant(qi));
      if (to >= 0) dsu.unite(v, to);
    }
  }
  report.component_of.assign(std::size_t(n), -1);
  std::vector<int> label(std::size_t(n), -1);
  int next_id = 0;
  for (int v = 0; v < n; ++v) {
    const int root = dsu.find(v);
    if (label[std::size_t(root)] < 0) label[std::size_t(root)] = next_id++;
    report.component_of[std::size_t(v)] = label[std::size_t(root)];
  }
  report.component_count = next_id;

  const int turns = normalization_turns(g.lambda());
  int top = 0;
  for (int v = 1; v < n; ++v) {
    if (up_key(ps[v], turns) > up_key(ps[top], turns)) top = v;
  }
  report.top_vertex = top;
  const std::vector<bool> reach = reaches_vertex(g, top);
  report.top_reachable_from_all =
      std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
  return report;
}

std::vector<bool> reaches_vertex(const DirectedYaoGraph& g, int target) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::int32_t>> rev(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int qi = 0; qi < 4; ++qi) {
      const std::int32_t to = g.target(v, Quadrant(qi));
      if (to >= 0) rev[std::size_t(to)].push_back(std::int32_t(v));
    }
  }
  std::vector<bool> seen(std::size_t(n), false);
  std::vector<int> stack{target};
  seen[std::size_t(target)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const std::int32_t u : rev[std::size_t(v)]) {
      if (!seen[std::size_t(u)]) {
        seen[std::size_t(u)] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

PlanarForestReport is_planar_forest(const DirectedYaoGraph& g, const PointSet& ps) {
  if (!g.lambda().is_singleton()) {
    throw std::invalid_argument("is_planar_forest: lambda must be a single quadrant");
  }
  PlanarForestReport report;
  const UndirectedGraph u = undirected_view(g, ps);

  Dsu dsu(u.vertex_count);
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(u.vertex_count));
  for (const auto& e : u.edges) {
    if (!dsu.unite(e.u, e.v)) {
      // Cycle certificate: path e.u → e.v through edges added so far.
      std::vector<int> prev(std::size_t(u.vertex_count), -1);
      std::queue<int> bfs;
      bfs.push(e.u);
      prev[std::size_t(e.u)] = e.u;
      while (!bfs.empty()) {
        const int v = bfs.front();
        bfs.pop();
        if (v == e.v) break;
        for (const std::int32_t w : adj[std::size_t(v)]) {
          if (prev[std::size_t(w)] < 0) {
            prev[std::size_t(w)] = v;
            bfs.push(int(w));
          }
        }
      }
      std::vector<int> cycle;
      for (int v = e.v; v != e.u; v = prev[std::size_t(v)]) cycle.push_back(v);
      cycle.push_back(e.u);
      std::reverse(cycle.begin(), cycle.end());
      report.cycle = std::move(cycle);
      break;
    }
    adj[std::size_t(e.u)].push_back(e.v);
    adj[std::size_t(e.v)].push_back(e.u);
  }

  CrossingReport crossings = find_crossings(g, ps);
  if (crossings.count > 0) report.crossing = std::move(crossings.crossing_pairs.front());
  report.planar_forest = !report.cycle && !report.crossing;
  return report;
}

std::vector<long double> shortest_path_lengths(const UndirectedGraph& u,
                                               const PointSet& ps, int source) {
  const int n = u.vertex_count;
  std::vector<long double> dist(std::size_t(n), kUnreached);
  using Item = std::pair<long double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[std::size_t(source)] = 0.0L;
  heap.push({0.0L, source});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[std::size_t(v)]) continue;
    for (const std::int32_t w : u.adjacency[std::size_t(v)]) {
      const long double nd = d + edge_length(ps, v, w);
      if (dist[std::size_t(w)] < 0.0L || nd < dist[std::size_t(w)]) {
        dist[std::size_t(w)] = nd;
        heap.push({nd, int(w)});
      }
    }
  }
  return dist;
}

StretchReport undirected_stretch(const DirectedYaoGraph& g, const PointSet& ps) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("undirected_stretch: need at least two points");
  const UndirectedGraph u = undirected_view(g, ps);

  struct PerSource {
    long double best = 0.0L;
    int best_t = -1;
    std::int64_t disconnected = 0;
  };
  std::vector<PerSource> slot(static_cast<std::size_t>(n));
  parallel_for(std::size_t(n), [&](std::size_t s) {
    const std::vector<long double> dist = shortest_path_lengths(u, ps, int(s));
    PerSource& out = slot[s];
    for (int t = int(s) + 1; t < n; ++t) {
      if (dist[std::size_t(t)] < 0.0L) {
        ++out.disconnected;
        continue;
      }
      const long double ratio = dist[std::size_t(t)] / edge_length(ps, int(s), t);
      if (out.best_t < 0 || ratio > out.best) {
        out.best = ratio;
        out.best_t = t;
      }
    }
  });
  StretchReport report;
  long double best = 0.0L;
  for (int s = 0; s < n; ++s) {
    report.disconnected_pairs += slot[std::size_t(s)].disconnected;
    if (slot[std::size_t(s)].best_t >= 0 &&
        (report.argmax_pair.first < 0 || slot[std::size_t(s)].best > best)) {
      best = slot[std::size_t(s)].best;
      report.argmax_pair = {s, slot[std::size_t(s)].best_t};
    }
  }
  report.max_stretch = double(best);
  return report;
}

std::optional<std::vector<int>> topological_order(const DirectedYaoGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> indeg(std::size_t(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int qi = 0; qi < 4; ++qi) {
      const std::int32_t to = g.target(v, Quadrant(qi));
      if (to >= 0) ++indeg[std::size_t(to)];
    }
  }
  std::vector<int> order;
  order.reserve(std::size_t(n));
  std::vector<int> ready;
  for (int v = n - 1; v >= 0; --v) {
    if (indeg[std::size_t(v)] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int qi = 0; qi < 4; ++qi) {
      const std::int32_t to = g.target(v, Quadrant(qi));
      if (to >= 0 && --indeg[std::size_t(to)] == 0) ready.push_back(int(to));
    }
  }
  if (int(order.size()) != n) return std::nullopt;
  return order;
}

namespace {

std::vector<long double> longest_paths_in_order(const DirectedYaoGraph& g, const PointSet& ps,
                                                const std::vector<int>& topo, int source) {
  std::vector<long double> dist(std::size_t(g.vertex_count()), kUnreached);
  dist[std::size_t(source)] = 0.0L;
  for (const int v : topo) {
    if (dist[std::size_t(v)] < 0.0L) continue;
    for (int qi = 0; qi < 4; ++qi) {
      const std::int32_t to = g.target(v, Quadrant(qi));
      if (to < 0) continue;
      const long double nd = dist[std::size_t(v)] + edge_length(ps, v, int(to));
      if (nd > dist[std::size_t(to)]) dist[std::size_t(to)] = nd;
    }
  }
  return dist;
}

}  // namespace

std::vector<long double> longest_path_lengths(const DirectedYaoGraph& g,
                                              const PointSet& ps, int source) {
  const auto topo = topological_order(g);
  if (!topo) throw not_a_dag_error("longest_path_lengths: graph has a directed cycle");
  return longest_paths_in_order(g, ps, *topo, source);
}

DilationReport directed_path_dilation(const DirectedYaoGraph& g, const PointSet& ps) {
  DilationReport report;
  const auto topo = topological_order(g);
  if (!topo) return report;  // is_dag stays false
  report.is_dag = true;
  const int n = g.vertex_count();

  struct PerSource {
    long double best = 0.0L;
    int best_t = -1;
  };
  std::vector<PerSource> slot(static_cast<std::size_t>(n));
  parallel_for(std::size_t(n), [&](std::size_t s) {
    const std::vector<long double> dist = longest_paths_in_order(g, ps, *topo, int(s));
    PerSource& out = slot[s];
    for (int t = 0; t < n; ++t) {
      if (t == int(s) || dist[std::size_t(t)] < 0.0L) continue;
      const long double ratio = dist[std::size_t(t)] / edge_length(ps, int(s), t);
      if (out.best_t < 0 || ratio > out.best) {
        out.best = ratio;
        out.best_t = t;
      }
    }
  });
  long double best = 0.0L;
  for (int s = 0; s < n; ++s) {
    if (slot[std::size_t(s)].best_t >= 0 &&
        (report.argmax_pair.first < 0 || slot[std::size_t(s)].best > best)) {
      best = slot[std::size_t(s)].best;
      report.argmax_pair = {s, slot[std::size_t(s)].best_t};
    }
  }
  report.max_path_dilation = double(best);
  return report;
}

std::uint64_t count_directed_paths(const DirectedYaoGraph& g, int s, int t) {
  const auto topo = topological_order(g);
  if (!topo) throw not_a_dag_error("count_directed_paths: graph has a directed cycle");
  std::vector<std::uint64_t> ways(std::size_t(g.vertex_count()), 0);
  ways[std::size_t(s)] = 1;
  auto saturating_add = [](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t sum = a + b;
    return (sum < a || sum > kPathCountCap) ? kPathCountCap : sum;
  };
  for (const int v : *topo) {
    if (ways[std::size_t(v)] == 0 || v == t) continue;
    for (int qi = 0; qi < 4; ++qi) {
      const std::int32_t to = g.target(v, Quadrant(qi));
      if (to >= 0) {
        ways[std::size_t(to)] = saturating_add(ways[std::size_t(to)], ways[std::size_t(v)]);
      }
    }
  }
  return ways[std::size_t(t)];
}

MonotoneReport check_monotone_containment(const DirectedYaoGraph& g, const PointSet& ps) {
  if (!g.lambda().is_singleton()) {
    throw std::invalid_argument("check_monotone_containment: lambda must be a single quadrant");
  }
  // Normalize to Q0 so every step must satisfy dx > 0, dy >= 0.
  const int turns = normalization_turns(g.lambda());
  std::vector<Point> pts(static_cast<std::size_t>(ps.size()));
  for (int i = 0; i < ps.size(); ++i) {
    Point p = ps[i];
    for (int k = 0; k < turns; ++k) p = rotate90(p);
    pts[std::size_t(i)] = p;
  }
  const Quadrant q = g.lambda().first();

  MonotoneReport report;
  for (int start = 0; start < g.vertex_count(); ++start) {
    std::vector<int> chain{start};
    int v = start;
    while (true) {
      const std::int32_t to = g.target(v, q);
      if (to < 0) break;
      const Point& pv = pts[std::size_t(v)];
      const Point& pt = pts[std::size_t(to)];
      chain.push_back(int(to));
      // Monotone: x strictly increases, y never decreases.
      if (!(pt.x > pv.x && pt.y >= pv.y)) {
        report.violating_path = std::move(chain);
        return report;
      }
      // Every vertex of the prefix must sit in the closed rectangle spanned
      // by its endpoints. Checked exhaustively: this is the oracle side.
      const Rect box{pts[std::size_t(start)], pt};
      for (const int w : chain) {
        if (!in_rect(pts[std::size_t(w)], box)) {
          report.violating_path = std::move(chain);
          return report;
        }
      }
      v = int(to);
    }
  }
  report.ok = true;
  return report;
}

Table1Report property_matrix(const PointSet& ps, bool include_full) {
  Table1Report report;
  std::vector<QuadrantSet> lambdas;
  for (int i = 0; i < 4; ++i) lambdas.push_back(QuadrantSet::single(Quadrant(i)));
  for (int i = 0; i < 4; ++i) lambdas.push_back(QuadrantSet::adjacent_pair(Quadrant(i)));
  if (include_full) lambdas.push_back(QuadrantSet::all());

  for (const QuadrantSet lambda : lambdas) {
    const int turns = normalization_turns(lambda);
    const PointSet frame = turns == 0 ? ps : rotated90(ps, turns);
    const QuadrantSet built = lambda.rotated(turns);
    const DirectedYaoGraph g = build_optimized(frame, built);

    Table1Entry entry;
    entry.lambda = lambda;
    const CrossingReport crossings = find_crossings(g, frame);
    entry.crossing_count = crossings.count;
    entry.planar = crossings.count == 0;
    const ConnectivityReport conn = connected_components(g, frame);
    entry.component_count = conn.component_count;
    entry.connected = conn.component_count <= 1;
    entry.top_reachable_from_all = conn.top_reachable_from_all;
    if (ps.size() >= 2) {
      const StretchReport stretch = undirected_stretch(g, frame);
      entry.max_stretch = stretch.max_stretch;
      entry.disconnected_pairs = stretch.disconnected_pairs;
    }
    const DilationReport dilation = directed_path_dilation(g, frame);
    entry.is_dag = dilation.is_dag;
    entry.dilation = dilation.max_path_dilation;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace yao4
