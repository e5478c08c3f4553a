#pragma once
/**
 * Property measurements over built graphs: proper crossings, connectivity
 * and directed reachability, undirected stretch, directed path dilation,
 * plus the structural checks (forest, xy-monotone chains) and the summary
 * property matrix.
 *
 * Graph distances are accumulated in long double (x87 80-bit) from exact
 * squared lengths; stretch and dilation comparisons carry a relative slack
 * well under 1e-12, which is the documented tolerance for those reals.
 * Everything combinatorial (crossings, components, path counts) is exact.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "yao4/build.hpp"
#include "yao4/geom.hpp"
#include "yao4/point_set.hpp"

namespace yao4 {

struct not_a_dag_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CrossingPair {
  YaoEdge e1, e2;
  CrossingWitness witness;
};

struct CrossingReport {
  std::vector<CrossingPair> crossing_pairs;
  std::size_t count = 0;
};

// Exhaustive exact test over all unordered edge pairs.
CrossingReport find_crossings(const DirectedYaoGraph& g, const PointSet& ps);

struct ConnectivityReport {
  int component_count = 0;
  std::vector<int> component_of;  // dense ids in first-seen order
  int top_vertex = -1;            // extreme vertex in the λ-normalized "up" direction
  bool top_reachable_from_all = false;
};

// Components of the undirected view plus directed reachability to the top
// vertex. "Top" is taken in the frame that maps g's quadrant set onto {0,1}
// (plain max-y for λ = {0,1}, max-x for {3,0}, and so on); reachability is
// only a structural guarantee for adjacent pairs on clean sets.
ConnectivityReport connected_components(const DirectedYaoGraph& g, const PointSet& ps);

struct PlanarForestReport {
  bool planar_forest = false;
  std::optional<std::vector<int>> cycle;      // vertex loop if acyclicity fails
  std::optional<CrossingPair> crossing;       // witness if planarity fails
};

// Requires g.lambda() to be a singleton; throws std::invalid_argument otherwise.
PlanarForestReport is_planar_forest(const DirectedYaoGraph& g, const PointSet& ps);

struct StretchReport {
  double max_stretch = 0.0;  // over connected pairs; 0 when no such pair
  std::pair<int, int> argmax_pair{-1, -1};
  std::int64_t disconnected_pairs = 0;
};

// All-pairs shortest paths on the weighted undirected view. Throws
// std::invalid_argument when n < 2.
StretchReport undirected_stretch(const DirectedYaoGraph& g, const PointSet& ps);

// Single-source shortest-path lengths on the undirected view; unreachable
// vertices get a negative sentinel. Used directly as the stretch oracle for
// named landmark pairs.
std::vector<long double> shortest_path_lengths(const UndirectedGraph& u,
                                               const PointSet& ps, int source);

struct DilationReport {
  bool is_dag = false;
  double max_path_dilation = 0.0;  // only meaningful when is_dag
  std::pair<int, int> argmax_pair{-1, -1};
};

// Maximum over ordered pairs (s,t) of (longest directed path length s→t)
// divided by |st|; the "every directed path" reading of the spanner bound.
// Cyclic inputs yield is_dag = false and no value.
DilationReport directed_path_dilation(const DirectedYaoGraph& g, const PointSet& ps);

// Longest directed path length from source to every vertex (negative when
// unreachable). Throws not_a_dag_error on cyclic graphs.
std::vector<long double> longest_path_lengths(const DirectedYaoGraph& g,
                                              const PointSet& ps, int source);

inline constexpr std::uint64_t kPathCountCap = std::uint64_t(1) << 62;

// Number of distinct directed paths s→t, saturating at kPathCountCap.
// Throws not_a_dag_error on cyclic graphs.
std::uint64_t count_directed_paths(const DirectedYaoGraph& g, int s, int t);

// Topological order, or nullopt if the graph has a directed cycle.
std::optional<std::vector<int>> topological_order(const DirectedYaoGraph& g);

// Vertices from which `target` is reachable along directed edges.
std::vector<bool> reaches_vertex(const DirectedYaoGraph& g, int target);

struct MonotoneReport {
  bool ok = false;
  std::vector<int> violating_path;  // offending chain prefix when !ok
};

// For a single-quadrant graph (out-degree ≤ 1): every chain prefix must be
// monotone in both coordinates and stay inside the endpoints' rectangle.
// Throws std::invalid_argument unless g.lambda() is a singleton.
MonotoneReport check_monotone_containment(const DirectedYaoGraph& g, const PointSet& ps);

struct Table1Entry {
  QuadrantSet lambda;
  std::size_t crossing_count = 0;
  bool planar = false;
  int component_count = 0;
  bool connected = false;
  bool top_reachable_from_all = false;
  double max_stretch = 0.0;
  std::int64_t disconnected_pairs = 0;
  bool is_dag = false;
  double dilation = 0.0;
};

struct Table1Report {
  std::vector<Table1Entry> entries;
};

// Planarity / connectivity / stretch / dilation for each single quadrant and
// each adjacent pair (optionally the full set), matching the summary-table
// rows. Pairs and singles other than {0}/{0,1} are evaluated by exact
// rotation of the point set onto the {0,1} frame.
Table1Report property_matrix(const PointSet& ps, bool include_full = true);

}  // namespace yao4
