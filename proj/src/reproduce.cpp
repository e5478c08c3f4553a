#include "yao4/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "yao4/analyze.hpp"
#include "yao4/generate.hpp"
#include "yao4/io.hpp"
#include "yao4/report.hpp"

namespace yao4 {

namespace {

constexpr double kSqrt2Slack = 1e-9;

struct SweepOutcome {
  bool singles_planar = true;
  bool singles_forest = true;
  bool singles_dilation_bounded = true;
  bool pairs_connected = true;
  bool pairs_top_reachable = true;
  double max_single_dilation = 0.0;
  std::string first_failure;
};

SweepOutcome run_random_sweep(int seeds, int n) {
  SweepOutcome out;
  const double bound = std::sqrt(2.0) + kSqrt2Slack;
  for (int seed = 1; seed <= seeds; ++seed) {
    const GeneratedInstance inst = gen_random(n, std::uint64_t(seed), default_random_bbox());
    for (int i = 0; i < 4; ++i) {
      const PointSet frame = rotated90(inst.point_set, (4 - i) % 4);
      const DirectedYaoGraph single = build_optimized(frame, QuadrantSet{0});
      if (find_crossings(single, frame).count != 0) {
        out.singles_planar = false;
        out.first_failure = "crossing in single quadrant, seed " + std::to_string(seed);
      }
      const UndirectedGraph view = undirected_view(single, frame);
      const ConnectivityReport conn = connected_components(single, frame);
      const std::size_t max_forest_edges = std::size_t(frame.size() - 1);
      const bool forest = view.edges.size() <= max_forest_edges &&
                          int(view.edges.size()) + conn.component_count == frame.size();
      if (!forest) {
        out.singles_forest = false;
        out.first_failure = "single quadrant not a forest, seed " + std::to_string(seed);
      }
      const DilationReport dilation = directed_path_dilation(single, frame);
      if (!dilation.is_dag || dilation.max_path_dilation > bound) {
        out.singles_dilation_bounded = false;
        out.first_failure = "single-quadrant dilation above bound, seed " + std::to_string(seed);
      }
      out.max_single_dilation = std::max(out.max_single_dilation, dilation.max_path_dilation);

      const DirectedYaoGraph pair = build_optimized(frame, QuadrantSet{0, 1});
      const ConnectivityReport pair_conn = connected_components(pair, frame);
      if (pair_conn.component_count != 1) {
        out.pairs_connected = false;
        out.first_failure = "adjacent pair disconnected, seed " + std::to_string(seed);
      }
      if (!pair_conn.top_reachable_from_all) {
        out.pairs_top_reachable = false;
        out.first_failure = "top vertex unreachable, seed " + std::to_string(seed);
      }
    }
  }
  return out;
}

std::string report_for_instance(const GeneratedInstance& inst, QuadrantSet lambda,
                                bool with_matrix) {
  const PointSet& ps = inst.point_set;
  const DirectedYaoGraph g = build_optimized(ps, lambda);
  AnalysisBundle analyses;
  analyses.crossings = find_crossings(g, ps);
  analyses.components = connected_components(g, ps);
  if (ps.size() >= 2) analyses.stretch = undirected_stretch(g, ps);
  analyses.dilation = directed_path_dilation(g, ps);
  if (with_matrix) analyses.matrix = property_matrix(ps, true);
  const VerificationResult verdict = verify_claim(inst);
  return render_graph_report(ps, g, analyses, &inst, &verdict);
}

}  // namespace

ReproduceResult run_reproduce(const ReproduceOptions& options) {
  ReproduceResult result;
  std::filesystem::create_directories(options.out_dir);
  auto emit = [&](const std::string& name, const std::string& content) {
    const std::string path = options.out_dir + "/" + name;
    write_text_file(path, content);
    result.files_written.push_back(path);
  };
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    result.checks.push_back({name, ok, detail});
    if (options.echo) {
      std::printf("%s %s: %s\n", ok ? "ok  " : "FAIL", name.c_str(), detail.c_str());
      std::fflush(stdout);
    }
  };

  // Random sweeps: the positive guarantees, all quadrants and pairs.
  const SweepOutcome sweep = run_random_sweep(options.seeds, options.n);
  check("single-quadrant planarity", sweep.singles_planar,
        sweep.singles_planar
            ? "no proper crossings across " + std::to_string(options.seeds) + " seeds"
            : sweep.first_failure);
  check("single-quadrant forest", sweep.singles_forest,
        sweep.singles_forest ? "acyclic with <= n-1 edges" : sweep.first_failure);
  check("adjacent-pair connectivity", sweep.pairs_connected,
        sweep.pairs_connected ? "one component for every pair and seed" : sweep.first_failure);
  check("adjacent-pair top reachability", sweep.pairs_top_reachable,
        sweep.pairs_top_reachable ? "top vertex reachable from every vertex"
                                  : sweep.first_failure);
  {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max observed dilation %.12f <= sqrt(2)+1e-9",
                  sweep.max_single_dilation);
    check("single-quadrant directed dilation", sweep.singles_dilation_bounded,
          sweep.singles_dilation_bounded ? buf : sweep.first_failure);
  }

  // Witness families, fixed seeds.
  const GeneratedInstance random_inst = gen_random(options.n, 1, default_random_bbox());
  emit("random.json", report_for_instance(random_inst, QuadrantSet{0, 1}, true));

  const GeneratedInstance negline = gen_negative_slope_line(50, 1);
  {
    const DirectedYaoGraph g0 = build_optimized(negline.point_set, QuadrantSet{0});
    const ConnectivityReport conn = connected_components(g0, negline.point_set);
    const StretchReport stretch = undirected_stretch(g0, negline.point_set);
    const bool isolated = g0.edge_count() == 0 && conn.component_count == negline.point_set.size();
    check("negative-slope line isolation", isolated,
          std::to_string(conn.component_count) + " components, " +
              std::to_string(g0.edge_count()) + " edges in a single quadrant");
    check("single-quadrant disconnection breaks spanner", stretch.disconnected_pairs > 0,
          std::to_string(stretch.disconnected_pairs) + " disconnected pairs");
    emit("negline.json", report_for_instance(negline, QuadrantSet{0}, false));
  }

  const GeneratedInstance lambda_inst = gen_lambda(100, 1.0, 50.0, 1);
  {
    const VerificationResult verdict = verify_claim(lambda_inst);
    check("lambda-shape unbounded stretch", verdict.ok, verdict.detail);
    emit("lambda.json", report_for_instance(lambda_inst, QuadrantSet{0, 1}, false));
  }

  bool towers_ok = true;
  std::string tower_detail;
  for (const double t : {2.0, 10.0, 100.0}) {
    const GeneratedInstance tower = gen_tower(t, 1);
    const VerificationResult verdict = verify_claim(tower);
    towers_ok = towers_ok && verdict.ok;
    if (!tower_detail.empty()) tower_detail += "; ";
    tower_detail += "t=" + std::to_string(int(t)) + ": " + verdict.detail;
    if (t == 10.0) emit("tower.json", report_for_instance(tower, QuadrantSet{0, 1}, false));
  }
  check("tower unbounded directed dilation", towers_ok, tower_detail);

  bool crossing_ok = false;
  std::string crossing_detail;
  try {
    const GeneratedInstance crossing = gen_crossing(0, 1'000'000);
    const VerificationResult verdict = verify_claim(crossing);
    crossing_ok = verdict.ok;
    crossing_detail = verdict.detail + " (attempts: " + crossing.params.at("attempts") + ")";
    emit("crossing.json", report_for_instance(crossing, QuadrantSet{0, 1}, false));
  } catch (const search_exhausted_error& e) {
    crossing_detail = e.what();
  }
  check("adjacent-pair crossing witness", crossing_ok, crossing_detail);

  const GeneratedInstance staircase = gen_staircase(40, 1);
  {
    const DirectedYaoGraph g = build_optimized(staircase.point_set, QuadrantSet{0});
    const DilationReport dilation = directed_path_dilation(g, staircase.point_set);
    char buf[128];
    std::snprintf(buf, sizeof buf, "staircase dilation %.12f within (1.40, sqrt(2)+1e-9]",
                  dilation.max_path_dilation);
    check("staircase approaches sqrt(2)",
          dilation.is_dag && dilation.max_path_dilation >= 1.40 &&
              dilation.max_path_dilation <= std::sqrt(2.0) + kSqrt2Slack,
          buf);
    emit("staircase.json", report_for_instance(staircase, QuadrantSet{0}, false));
  }

  result.all_ok = true;
  for (const ReproduceCheck& c : result.checks) result.all_ok = result.all_ok && c.ok;

  // Summary matrix: observed verdict per property and column.
  auto find_ok = [&](const std::string& name) {
    for (const ReproduceCheck& c : result.checks) {
      if (c.name == name) return c.ok;
    }
    return false;
  };
  JsonWriter w;
  w.begin_object();
  w.key("schema").value("yao4-summary/1");
  w.key("seeds").value(options.seeds);
  w.key("n").value(options.n);
  w.key("table1").begin_array();
  struct Row {
    const char* property;
    const char* single_expected;
    bool single_ok;
    const char* pair_expected;
    bool pair_ok;
  };
  const Row rows[] = {
      {"planarity", "planar", find_ok("single-quadrant planarity"), "not planar",
       find_ok("adjacent-pair crossing witness")},
      {"connectedness", "not connected", find_ok("negative-slope line isolation"), "connected",
       find_ok("adjacent-pair connectivity")},
      {"undirected_spanner", "not a spanner",
       find_ok("single-quadrant disconnection breaks spanner"), "not a spanner",
       find_ok("lambda-shape unbounded stretch")},
      {"directed_spanner", "spanner", find_ok("single-quadrant directed dilation"),
       "not a spanner", find_ok("tower unbounded directed dilation")},
  };
  for (const Row& row : rows) {
    w.begin_object();
    w.key("property").value(row.property);
    w.key("single_quadrant").begin_object();
    w.key("expected").value(row.single_expected);
    w.key("confirmed").value(row.single_ok);
    w.end_object();
    w.key("adjacent_pair").begin_object();
    w.key("expected").value(row.pair_expected);
    w.key("confirmed").value(row.pair_ok);
    w.end_object();
    w.end_object();
  }
  w.end_array();
  w.key("checks").begin_array();
  for (const ReproduceCheck& c : result.checks) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("ok").value(c.ok);
    w.key("detail").value(c.detail);
    w.end_object();
  }
  w.end_array();
  w.key("all_ok").value(result.all_ok);
  w.end_object();
  emit("summary.json", w.str() + "\n");

  return result;
}

}  // namespace yao4
