#pragma once
/**
 * Directed Yao graph construction for k = 4.
 *
 * Every vertex gets at most one out-edge per quadrant in the requested
 * subset λ: the exact nearest neighbor inside that quadrant, ties broken by
 * (squared distance, target index) lexicographically so builds are
 * deterministic and comparable bit-for-bit.
 *
 * Two builders share that contract: build_reference scans all pairs (the
 * oracle), build_optimized answers each quadrant query with a kd-tree.
 * Their outputs are identical on every input, which the test suite checks
 * differentially.
 */

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "yao4/geom.hpp"
#include "yao4/point_set.hpp"

namespace yao4 {

// Subset of the four quadrants, e.g. {0,1}.
class QuadrantSet {
 public:
  constexpr QuadrantSet() = default;
  constexpr QuadrantSet(std::initializer_list<int> quadrants) {
    for (int q : quadrants) mask_ |= std::uint8_t(1u << (((q % 4) + 4) % 4));
  }
  static constexpr QuadrantSet all() { return QuadrantSet{0, 1, 2, 3}; }
  static constexpr QuadrantSet single(Quadrant q) { return QuadrantSet{q.index()}; }
  static constexpr QuadrantSet adjacent_pair(Quadrant q) {
    return QuadrantSet{q.index(), q.next().index()};
  }

  constexpr bool contains(Quadrant q) const { return (mask_ >> q.index()) & 1u; }
  constexpr bool subset_of(QuadrantSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr int count() const {
    int c = 0;
    for (int q = 0; q < 4; ++q) c += int((mask_ >> q) & 1u);
    return c;
  }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool is_singleton() const { return count() == 1; }
  // Lowest quadrant index present; only meaningful when !empty().
  constexpr Quadrant first() const {
    for (int q = 0; q < 4; ++q) {
      if ((mask_ >> q) & 1u) return Quadrant(q);
    }
    return Quadrant(0);
  }
  // Image of the set under rotation by +90°·times.
  constexpr QuadrantSet rotated(int times) const {
    const int k = ((times % 4) + 4) % 4;
    QuadrantSet out;
    for (int q = 0; q < 4; ++q) {
      if ((mask_ >> q) & 1u) out.mask_ |= std::uint8_t(1u << ((q + k) % 4));
    }
    return out;
  }
  std::vector<Quadrant> quadrants() const {
    std::vector<Quadrant> out;
    for (int q = 0; q < 4; ++q) {
      if ((mask_ >> q) & 1u) out.push_back(Quadrant(q));
    }
    return out;
  }
  friend constexpr bool operator==(const QuadrantSet&, const QuadrantSet&) = default;

 private:
  std::uint8_t mask_ = 0;
};

struct YaoEdge {
  std::int32_t from = -1;
  std::int32_t to = -1;
  Quadrant quadrant;
  wide_t length2 = 0;
};

struct subset_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class DirectedYaoGraph {
 public:
  DirectedYaoGraph() = default;
  DirectedYaoGraph(int vertex_count, QuadrantSet lambda)
      : lambda_(lambda), out_(std::size_t(vertex_count), {-1, -1, -1, -1}) {}

  int vertex_count() const { return int(out_.size()); }
  QuadrantSet lambda() const { return lambda_; }

  std::int32_t target(int v, Quadrant q) const {
    return out_[std::size_t(v)][std::size_t(q.index())];
  }
  bool has_edge(int v, Quadrant q) const { return target(v, q) >= 0; }
  void set_target(int v, Quadrant q, std::int32_t to) {
    out_[std::size_t(v)][std::size_t(q.index())] = to;
  }

  std::optional<YaoEdge> edge_at(int v, Quadrant q, const PointSet& ps) const;
  // All edges, ordered by (from, quadrant); deterministic.
  std::vector<YaoEdge> edges(const PointSet& ps) const;
  std::size_t edge_count() const;

  // Bit-for-bit equality of the out-edge tables (and λ).
  bool same_edges(const DirectedYaoGraph& other) const {
    return lambda_ == other.lambda_ && out_ == other.out_;
  }

 private:
  QuadrantSet lambda_;
  std::vector<std::array<std::int32_t, 4>> out_;
};

// O(n²·|λ|) all-pairs scan; the normative definition.
DirectedYaoGraph build_reference(const PointSet& ps, QuadrantSet lambda);

// kd-tree backed nearest-in-quadrant queries; identical output, O(n log n)
// build plus near-logarithmic queries on typical inputs.
DirectedYaoGraph build_optimized(const PointSet& ps, QuadrantSet lambda);

// Drops out-edges whose quadrant is outside lambda2. Throws subset_error
// unless lambda2 ⊆ g.lambda().
DirectedYaoGraph restrict_graph(const DirectedYaoGraph& g, QuadrantSet lambda2);

// Undirected view: direction forgotten, parallel edges collapsed.
struct UndirectedGraph {
  int vertex_count = 0;
  struct Edge {
    std::int32_t u, v;  // u < v
    wide_t length2;
  };
  std::vector<Edge> edges;             // sorted by (u, v), unique
  std::vector<std::vector<std::int32_t>> adjacency;
};

UndirectedGraph undirected_view(const DirectedYaoGraph& g, const PointSet& ps);

}  // namespace yao4
