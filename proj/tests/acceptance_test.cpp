// Acceptance suite: one pass/fail line per criterion, exercised end to end
// against the library. Thresholds and seed counts are pinned here; the run
// fails (nonzero exit) if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "yao4/analyze.hpp"
#include "yao4/build.hpp"
#include "yao4/generate.hpp"
#include "yao4/io.hpp"
#include "yao4/reproduce.hpp"

using namespace yao4;

namespace {

struct Criterion {
  std::string id;
  std::string what;
  std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Shared fixture: 100 seeded random sets of 200 points.
const std::vector<GeneratedInstance>& sweep_instances() {
  static const std::vector<GeneratedInstance> instances = [] {
    std::vector<GeneratedInstance> out;
    out.reserve(100);
    for (int seed = 1; seed <= 100; ++seed) {
      out.push_back(gen_random(200, std::uint64_t(seed), default_random_bbox()));
    }
    return out;
  }();
  return instances;
}

PointSet drop_vertex(const PointSet& ps, int victim, std::vector<int>& old_index) {
  std::vector<Point> rest;
  rest.reserve(std::size_t(ps.size() - 1));
  old_index.clear();
  for (int v = 0; v < ps.size(); ++v) {
    if (v == victim) continue;
    old_index.push_back(v);
    rest.push_back(ps[v]);
  }
  return make_point_set(std::move(rest), ps.scale, /*skip_validation=*/true);
}

PointSet raw_distinct_points(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<coord_t> used_x, used_y;
  std::vector<Point> pts;
  const std::uint64_t range = 1'000'000'000'000ull;
  while (int(pts.size()) < n) {
    const Point p{coord_t(rng() % range), coord_t(rng() % range)};
    if (!used_x.insert(p.x).second) continue;
    if (!used_y.insert(p.y).second) {
      used_x.erase(p.x);
      continue;
    }
    pts.push_back(p);
  }
  return make_point_set(std::move(pts), 9, /*skip_validation=*/true);
}

bool criterion_single_quadrant_crossings(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t total = 0;
  for (const GeneratedInstance& inst : sweep_instances()) {
    for (int i = 0; i < 4; ++i) {
      const DirectedYaoGraph g =
          build_optimized(inst.point_set, QuadrantSet::single(Quadrant(i)));
      total += find_crossings(g, inst.point_set).count;
    }
  }
  const double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu crossings across 100 seeds x 4 quadrants in %.1fs (budget 30s)", total,
                elapsed);
  detail = buf;
  return total == 0 && elapsed < 30.0;
}

bool criterion_forest(std::string& detail) {
  for (const GeneratedInstance& inst : sweep_instances()) {
    const int n = inst.point_set.size();
    for (int i = 0; i < 4; ++i) {
      const DirectedYaoGraph g =
          build_optimized(inst.point_set, QuadrantSet::single(Quadrant(i)));
      const UndirectedGraph u = undirected_view(g, inst.point_set);
      const ConnectivityReport conn = connected_components(g, inst.point_set);
      const bool acyclic = int(u.edges.size()) + conn.component_count == n;
      if (!acyclic || u.edges.size() > std::size_t(n - 1)) {
        detail = "cycle or edge overflow in a single quadrant";
        return false;
      }
    }
  }
  detail = "undirected single-quadrant graphs acyclic with <= n-1 edges";
  return true;
}

bool criterion_connectivity(std::string& detail) {
  for (const GeneratedInstance& inst : sweep_instances()) {
    for (int i = 0; i < 4; ++i) {
      const PointSet frame = rotated90(inst.point_set, (4 - i) % 4);
      const DirectedYaoGraph g = build_optimized(frame, QuadrantSet{0, 1});
      const ConnectivityReport conn = connected_components(g, frame);
      if (conn.component_count != 1 || !conn.top_reachable_from_all) {
        detail = "pair {" + std::to_string(i) + "," + std::to_string((i + 1) % 4) +
                 "} violated connectivity";
        return false;
      }
      // Induction step: removing the bottom-most point must not disturb any
      // edge among the survivors.
      int bottom = 0;
      for (int v = 1; v < frame.size(); ++v) {
        if (frame[v].y < frame[bottom].y) bottom = v;
      }
      std::vector<int> old_index;
      const PointSet trimmed = drop_vertex(frame, bottom, old_index);
      const DirectedYaoGraph after = build_optimized(trimmed, QuadrantSet{0, 1});
      for (int v = 0; v < trimmed.size(); ++v) {
        for (const int qi : {0, 1}) {
          const std::int32_t nt = after.target(v, Quadrant(qi));
          const std::int32_t ot = g.target(old_index[std::size_t(v)], Quadrant(qi));
          const std::int32_t mapped = nt < 0 ? -1 : old_index[std::size_t(nt)];
          if (mapped != ot) {
            detail = "removing the bottom vertex changed a surviving edge";
            return false;
          }
        }
      }
    }
  }
  detail = "1 component, top reachable, bottom-removal invariant, all pairs and seeds";
  return true;
}

bool criterion_dilation_bound(std::string& detail) {
  const double bound = std::sqrt(2.0) + 1e-9;
  double worst = 0.0;
  for (const GeneratedInstance& inst : sweep_instances()) {
    for (int i = 0; i < 4; ++i) {
      const DirectedYaoGraph g =
          build_optimized(inst.point_set, QuadrantSet::single(Quadrant(i)));
      const DilationReport report = directed_path_dilation(g, inst.point_set);
      if (!report.is_dag) {
        detail = "single quadrant graph unexpectedly cyclic";
        return false;
      }
      worst = std::max(worst, report.max_path_dilation);
    }
  }
  if (worst > bound) {
    detail = "dilation " + std::to_string(worst) + " exceeds sqrt(2)+1e-9";
    return false;
  }
  const GeneratedInstance stairs = gen_staircase(40, 1);
  const DilationReport tight = directed_path_dilation(
      build_optimized(stairs.point_set, QuadrantSet{0}), stairs.point_set);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max random dilation %.9f <= %.9f; staircase(40) = %.9f >= 1.40",
                worst, bound, tight.max_path_dilation);
  detail = buf;
  return tight.is_dag && tight.max_path_dilation >= 1.40 && tight.max_path_dilation <= bound;
}

bool criterion_tower(std::string& detail) {
  detail.clear();
  for (const double t : {2.0, 10.0, 100.0}) {
    const auto start = std::chrono::steady_clock::now();
    const GeneratedInstance inst = gen_tower(t, 1);
    const int a = inst.landmarks.at("a");
    const int d = inst.landmarks.at("d");
    const DirectedYaoGraph g = build_optimized(inst.point_set, QuadrantSet{0, 1});
    const std::uint64_t paths = count_directed_paths(g, a, d);
    const auto len = longest_path_lengths(g, inst.point_set, a);
    const double ratio = double(
        len[std::size_t(d)] / sqrtl((long double)dist2(inst.point_set[a], inst.point_set[d])));
    const double elapsed = seconds_since(start);
    char buf[120];
    std::snprintf(buf, sizeof buf, "t=%g: paths=%llu ratio=%.2f (%.3fs) ", t,
                  (unsigned long long)paths, ratio, elapsed);
    detail += buf;
    if (paths != 1 || !(ratio > t) || elapsed >= 1.0) return false;
  }
  return true;
}

bool criterion_negline(std::string& detail) {
  const GeneratedInstance inst = gen_negative_slope_line(50, 1);
  const DirectedYaoGraph g = build_optimized(inst.point_set, QuadrantSet{0});
  const ConnectivityReport conn = connected_components(g, inst.point_set);
  char buf[96];
  std::snprintf(buf, sizeof buf, "Y[0]: %zu edges, %d components of 50", g.edge_count(),
                conn.component_count);
  detail = buf;
  return g.edge_count() == 0 && conn.component_count == 50;
}

bool criterion_lambda(std::string& detail) {
  const GeneratedInstance inst = gen_lambda(100, 1.0, 50.0, 1);
  const int bl = inst.landmarks.at("bottom_left");
  const int br = inst.landmarks.at("bottom_right");
  const int apex = inst.landmarks.at("apex");
  const DirectedYaoGraph g = build_optimized(inst.point_set, QuadrantSet{0, 1});
  if (connected_components(g, inst.point_set).component_count != 1) {
    detail = "lambda instance disconnected";
    return false;
  }
  const auto dist = shortest_path_lengths(undirected_view(g, inst.point_set), inst.point_set, bl);
  const double stretch = double(
      dist[std::size_t(br)] / sqrtl((long double)dist2(inst.point_set[bl], inst.point_set[br])));
  const auto reach = reaches_vertex(g, apex);
  char buf[96];
  std::snprintf(buf, sizeof buf, "stretch(bottom_left, bottom_right) = %.2f (>= 25)", stretch);
  detail = buf;
  return stretch >= 25.0 && reach[std::size_t(bl)] && reach[std::size_t(br)];
}

bool criterion_crossing_search(std::string& detail) {
  try {
    const GeneratedInstance inst = gen_crossing(0, 1'000'000);
    const DirectedYaoGraph g = build_optimized(inst.point_set, QuadrantSet{0, 1});
    const std::size_t on_pair = find_crossings(g, inst.point_set).count;
    const std::size_t q0 =
        find_crossings(restrict_graph(g, QuadrantSet{0}), inst.point_set).count;
    const std::size_t q1 =
        find_crossings(restrict_graph(g, QuadrantSet{1}), inst.point_set).count;
    detail = "crossings: pair=" + std::to_string(on_pair) + " q0=" + std::to_string(q0) +
             " q1=" + std::to_string(q1) + " after " + inst.params.at("attempts") + " attempts";
    return on_pair >= 1 && q0 == 0 && q1 == 0;
  } catch (const search_exhausted_error& e) {
    detail = e.what();
    return false;
  }
}

bool criterion_builder_equivalence(std::string& detail) {
  // 1000 seeded sizes spread over [2, 2000], weighted toward small sets.
  std::vector<int> sizes;
  for (int k = 0; k < 900; ++k) sizes.push_back(2 + int((std::uint64_t(k) * 2654435761u) % 99));
  for (int k = 0; k < 90; ++k) sizes.push_back(101 + int((std::uint64_t(k) * 7919u) % 400));
  for (int k = 0; k < 10; ++k) sizes.push_back(1100 + 90 * k);
  sizes.back() = 2000;

  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const GeneratedInstance inst =
        gen_random(sizes[k], std::uint64_t(k + 1), default_random_bbox());
    const DirectedYaoGraph ref = build_reference(inst.point_set, QuadrantSet::all());
    const DirectedYaoGraph opt = build_optimized(inst.point_set, QuadrantSet::all());
    if (!opt.same_edges(ref)) {
      detail = "builder mismatch at set " + std::to_string(k) + " (n=" +
               std::to_string(sizes[k]) + ")";
      return false;
    }
  }

  // Performance data point (informative, not gating).
  const PointSet big = raw_distinct_points(20000, 99);
  const auto t0 = std::chrono::steady_clock::now();
  const DirectedYaoGraph ref = build_reference(big, QuadrantSet::all());
  const double ref_time = seconds_since(t0);
  const auto t1 = std::chrono::steady_clock::now();
  const DirectedYaoGraph opt = build_optimized(big, QuadrantSet::all());
  const double opt_time = seconds_since(t1);
  if (!opt.same_edges(ref)) {
    detail = "builder mismatch at n=20000";
    return false;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "1000 sets bit-identical; n=20000: reference %.2fs vs optimized %.2fs "
                "(%.0fx, goal >= 5x informative)",
                ref_time, opt_time, opt_time > 0 ? ref_time / opt_time : 0.0);
  detail = buf;
  return true;
}

bool criterion_rotation_equivariance(std::string& detail) {
  for (int seed = 1; seed <= 50; ++seed) {
    const GeneratedInstance inst = gen_random(100, std::uint64_t(seed), default_random_bbox());
    const PointSet rotated = rotated90(inst.point_set);
    for (int i = 0; i < 4; ++i) {
      const DirectedYaoGraph g =
          build_optimized(inst.point_set, QuadrantSet::single(Quadrant(i)));
      const DirectedYaoGraph gr = build_optimized(rotated, QuadrantSet::single(Quadrant(i + 1)));
      for (int v = 0; v < inst.point_set.size(); ++v) {
        if (g.target(v, Quadrant(i)) != gr.target(v, Quadrant(i + 1))) {
          detail = "edge mismatch under rotation, seed " + std::to_string(seed);
          return false;
        }
      }
    }
  }
  detail = "edges map index-wise under rotate90, 50 seeds, all quadrants";
  return true;
}

bool criterion_reproduce(std::string& detail) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "yao4_acceptance_reproduce";
  fs::remove_all(base);
  ReproduceOptions options;
  options.seeds = 100;
  options.n = 200;
  options.echo = false;

  options.out_dir = (base / "run1").string();
  const ReproduceResult first = run_reproduce(options);
  options.out_dir = (base / "run2").string();
  const ReproduceResult second = run_reproduce(options);

  if (!first.all_ok || !second.all_ok) {
    for (const ReproduceCheck& c : first.checks) {
      if (!c.ok) detail += c.name + ": " + c.detail + "; ";
    }
    if (detail.empty()) detail = "reproduction run reported failures";
    return false;
  }
  if (first.files_written.size() != second.files_written.size()) {
    detail = "runs wrote different file sets";
    return false;
  }
  for (std::size_t i = 0; i < first.files_written.size(); ++i) {
    if (read_text_file(first.files_written[i]) != read_text_file(second.files_written[i])) {
      detail = "byte mismatch in " + first.files_written[i];
      return false;
    }
  }
  detail = std::to_string(first.checks.size()) +
           " matrix checks confirmed; reports byte-identical across runs";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "single-quadrant graphs have no proper crossings", criterion_single_quadrant_crossings},
      {"AC2", "single-quadrant graphs are forests", criterion_forest},
      {"AC3", "adjacent pairs are connected with reachable top", criterion_connectivity},
      {"AC4", "directed dilation bounded by sqrt(2), staircase tight", criterion_dilation_bound},
      {"AC5", "tower gadgets give a unique arbitrarily-long path", criterion_tower},
      {"AC6", "negative-slope line fully disconnects one quadrant", criterion_negline},
      {"AC7", "lambda shape separates its bottom corners", criterion_lambda},
      {"AC8", "crossing search finds an adjacent-pair witness", criterion_crossing_search},
      {"AC9", "optimized builder bit-identical to reference", criterion_builder_equivalence},
      {"AC10", "builds are rotation-equivariant", criterion_rotation_equivariance},
      {"AC11", "reproduction suite confirms the property matrix deterministically",
       criterion_reproduce},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s%s%s\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
