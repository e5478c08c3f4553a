// Command-line front door: generate point families, build and analyze
// quadrant graphs, render SVG figures, and run the full reproduction suite.
//
// Exit codes: 0 success, 1 assertion/verification failure, 2 usage or parse
// errors.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "yao4/analyze.hpp"
#include "yao4/build.hpp"
#include "yao4/generate.hpp"
#include "yao4/io.hpp"
#include "yao4/report.hpp"
#include "yao4/reproduce.hpp"
#include "yao4/svg.hpp"

namespace {

using namespace yao4;

QuadrantSet parse_lambda_spec(const std::string& spec) {
  std::vector<int> quadrants;
  std::string token;
  auto flush = [&] {
    if (token.empty()) {
      throw CLI::ValidationError("--lambda", "malformed quadrant spec '" + spec + "'");
    }
    const int q = std::stoi(token);
    if (q < 0 || q > 3) {
      throw CLI::ValidationError("--lambda", "quadrant must be in 0..3, got '" + token + "'");
    }
    quadrants.push_back(q);
    token.clear();
  };
  for (const char c : spec) {
    if (c == ',') {
      flush();
    } else if (c >= '0' && c <= '9') {
      token.push_back(c);
    } else {
      throw CLI::ValidationError("--lambda", "malformed quadrant spec '" + spec + "'");
    }
  }
  flush();
  switch (quadrants.size()) {
    case 1: return QuadrantSet{quadrants[0]};
    case 2: return QuadrantSet{quadrants[0], quadrants[1]};
    case 3: return QuadrantSet{quadrants[0], quadrants[1], quadrants[2]};
    default: return QuadrantSet{quadrants[0], quadrants[1], quadrants[2], quadrants[3]};
  }
}

void emit_general_position_warnings(const PointSet& ps) {
  if (ps.clean()) return;
  std::fprintf(stderr,
               "warning: input violates general position (%zu distance ties, %zu shared x, "
               "%zu shared y); structural guarantees are not asserted\n",
               ps.validation.distance_ties.size(), ps.validation.shared_x.size(),
               ps.validation.shared_y.size());
}

int write_generated(const GeneratedInstance& inst, const std::string& out_path) {
  write_point_set_file(out_path, inst.point_set);
  write_landmarks_file(landmarks_sidecar_path(out_path), inst.landmarks);
  const VerificationResult verdict = verify_claim(inst);
  std::printf("family: %s\n", inst.family.c_str());
  std::printf("claim: %s\n", inst.claim.c_str());
  std::printf("verdict: %s (%s)\n", verdict.ok ? "verified" : "FAILED", verdict.detail.c_str());
  std::printf("wrote %s (%d points) and %s\n", out_path.c_str(), inst.point_set.size(),
              landmarks_sidecar_path(out_path).c_str());
  return verdict.ok ? 0 : 1;
}

int run_analyze(const std::string& in_path, const std::string& lambda_spec,
                const std::string& out_path, bool check_builders, bool with_matrix) {
  const PointSet ps = read_point_set_file(in_path);
  emit_general_position_warnings(ps);
  const QuadrantSet lambda = parse_lambda_spec(lambda_spec);

  const DirectedYaoGraph g = build_optimized(ps, lambda);
  if (check_builders) {
    const DirectedYaoGraph ref = build_reference(ps, lambda);
    if (!g.same_edges(ref)) {
      std::fprintf(stderr, "builder mismatch: optimized and reference disagree\n");
      return 1;
    }
    std::printf("builder cross-check: optimized matches reference (%zu edges)\n", g.edge_count());
  }

  AnalysisBundle analyses;
  analyses.crossings = find_crossings(g, ps);
  analyses.components = connected_components(g, ps);
  if (ps.size() >= 2) analyses.stretch = undirected_stretch(g, ps);
  analyses.dilation = directed_path_dilation(g, ps);
  if (with_matrix && ps.size() >= 2) analyses.matrix = property_matrix(ps, true);

  const std::string report = render_graph_report(ps, g, analyses, nullptr, nullptr);
  if (out_path.empty()) {
    std::fputs(report.c_str(), stdout);
  } else {
    write_text_file(out_path, report);
    std::printf("wrote %s\n", out_path.c_str());
  }
  return 0;
}

int run_render(const std::string& in_path, const std::vector<std::string>& lambda_specs,
               const std::string& out_path) {
  const PointSet ps = read_point_set_file(in_path);
  emit_general_position_warnings(ps);
  std::vector<QuadrantSet> panels;
  if (lambda_specs.empty()) {
    panels = {QuadrantSet{0}, QuadrantSet{1}, QuadrantSet{0, 1}};
  } else {
    for (const std::string& spec : lambda_specs) panels.push_back(parse_lambda_spec(spec));
  }
  std::map<std::string, int> landmarks;
  const std::string sidecar = landmarks_sidecar_path(in_path);
  if (std::filesystem::exists(sidecar)) landmarks = read_landmarks_file(sidecar);

  const std::string svg =
      render_svg(ps, panels, landmarks.empty() ? nullptr : &landmarks, RenderOptions{});
  write_text_file(out_path, svg);
  std::printf("wrote %s (%zu panels)\n", out_path.c_str(), panels.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed Yao graph (k=4) builder, analyzer and counterexample generator"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a point family and write it to disk");
  gen->require_subcommand(1);
  std::string gen_out;

  int rand_n = 40;
  std::uint64_t rand_seed = 1;
  std::vector<double> rand_bbox{0.0, 0.0, 1000.0, 1000.0};
  auto* gen_random_cmd = gen->add_subcommand("random", "uniform points in general position");
  gen_random_cmd->add_option("--n", rand_n, "point count")->capture_default_str();
  gen_random_cmd->add_option("--seed", rand_seed, "RNG seed")->capture_default_str();
  gen_random_cmd->add_option("--bbox", rand_bbox, "sampling box x0 y0 x1 y1 (input units)")
      ->expected(4);
  gen_random_cmd->add_option("--out", gen_out, "output point file")->required();

  int negline_n = 50;
  std::uint64_t negline_seed = 1;
  auto* gen_negline_cmd = gen->add_subcommand("negline", "points on a negative-slope line");
  gen_negline_cmd->add_option("--n", negline_n, "point count")->capture_default_str();
  gen_negline_cmd->add_option("--seed", negline_seed, "RNG seed")->capture_default_str();
  gen_negline_cmd->add_option("--out", gen_out, "output point file")->required();

  int lambda_n = 100;
  double lambda_w = 1.0, lambda_h = 50.0;
  std::uint64_t lambda_seed = 1;
  auto* gen_lambda_cmd = gen->add_subcommand("lambda", "Λ shape with far-apart bottom corners");
  gen_lambda_cmd->set_help_flag("--help", "print help");  // frees -h for the height option
  gen_lambda_cmd->add_option("--n", lambda_n, "points per arm (apex included)")
      ->capture_default_str();
  gen_lambda_cmd->add_option("--w", lambda_w, "half width")->capture_default_str();
  gen_lambda_cmd->add_option("-h,--h", lambda_h, "height")->capture_default_str();
  gen_lambda_cmd->add_option("--seed", lambda_seed, "RNG seed")->capture_default_str();
  gen_lambda_cmd->add_option("--out", gen_out, "output point file")->required();

  double tower_t = 10.0;
  std::uint64_t tower_seed = 1;
  auto* gen_tower_cmd = gen->add_subcommand("tower", "unique long-path tower gadget");
  gen_tower_cmd->add_option("--t", tower_t, "target dilation ratio")->capture_default_str();
  gen_tower_cmd->add_option("--seed", tower_seed, "RNG seed")->capture_default_str();
  gen_tower_cmd->add_option("--out", gen_out, "output point file")->required();

  std::uint64_t crossing_seed = 0;
  std::uint64_t crossing_tries = 1'000'000;
  auto* gen_crossing_cmd = gen->add_subcommand("crossing", "search for a proper-crossing witness");
  gen_crossing_cmd->add_option("--seed", crossing_seed, "RNG seed")->capture_default_str();
  gen_crossing_cmd->add_option("--max-tries", crossing_tries, "search budget")
      ->capture_default_str();
  gen_crossing_cmd->add_option("--out", gen_out, "output point file")->required();

  int staircase_m = 40;
  std::uint64_t staircase_seed = 1;
  auto* gen_staircase_cmd = gen->add_subcommand("staircase", "chain approaching the sqrt(2) bound");
  gen_staircase_cmd->add_option("--m", staircase_m, "step count")->capture_default_str();
  gen_staircase_cmd->add_option("--seed", staircase_seed, "RNG seed")->capture_default_str();
  gen_staircase_cmd->add_option("--out", gen_out, "output point file")->required();

  // --- analyze -------------------------------------------------------------
  std::string analyze_in, analyze_lambda = "0,1", analyze_out;
  bool analyze_check = false, analyze_matrix = false;
  auto* analyze = app.add_subcommand("analyze", "build a quadrant graph and measure properties");
  analyze->add_option("input", analyze_in, "point file")->required();
  analyze->add_option("--lambda", analyze_lambda, "quadrant subset, e.g. 0 or 0,1")
      ->capture_default_str();
  analyze->add_option("--out", analyze_out, "report path (stdout when omitted)");
  analyze->add_flag("--check", analyze_check, "cross-check optimized against reference builder");
  analyze->add_flag("--matrix", analyze_matrix, "include the full property matrix");

  // --- render --------------------------------------------------------------
  std::string render_in, render_out;
  std::vector<std::string> render_lambdas;
  auto* render = app.add_subcommand("render", "draw the graph(s) as SVG panels");
  render->add_option("input", render_in, "point file")->required();
  render->add_option("--lambda", render_lambdas,
                     "quadrant subset per panel (repeatable; default 0, 1, 0,1)");
  render->add_option("--out", render_out, "output SVG path")->required();

  // --- reproduce -----------------------------------------------------------
  ReproduceOptions repro;
  repro.out_dir = "reproduce-out";
  auto* reproduce = app.add_subcommand("reproduce", "run the full property suite and emit reports");
  reproduce->add_option("--out-dir", repro.out_dir, "report directory")->capture_default_str();
  reproduce->add_option("--seeds", repro.seeds, "random sweep seed count")->capture_default_str();
  reproduce->add_option("--n", repro.n, "points per random set")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_random_cmd->parsed()) {
      const coord_t unit = 1'000'000'000;
      const Rect bbox{{coord_t(llround(rand_bbox[0] * double(unit))),
                       coord_t(llround(rand_bbox[1] * double(unit)))},
                      {coord_t(llround(rand_bbox[2] * double(unit))),
                       coord_t(llround(rand_bbox[3] * double(unit)))}};
      return write_generated(gen_random(rand_n, rand_seed, bbox), gen_out);
    }
    if (gen_negline_cmd->parsed()) {
      return write_generated(gen_negative_slope_line(negline_n, negline_seed), gen_out);
    }
    if (gen_lambda_cmd->parsed()) {
      return write_generated(gen_lambda(lambda_n, lambda_w, lambda_h, lambda_seed), gen_out);
    }
    if (gen_tower_cmd->parsed()) {
      return write_generated(gen_tower(tower_t, tower_seed), gen_out);
    }
    if (gen_crossing_cmd->parsed()) {
      return write_generated(gen_crossing(crossing_seed, crossing_tries), gen_out);
    }
    if (gen_staircase_cmd->parsed()) {
      return write_generated(gen_staircase(staircase_m, staircase_seed), gen_out);
    }
    if (analyze->parsed()) {
      return run_analyze(analyze_in, analyze_lambda, analyze_out, analyze_check, analyze_matrix);
    }
    if (render->parsed()) {
      return run_render(render_in, render_lambdas, render_out);
    }
    if (reproduce->parsed()) {
      const ReproduceResult result = run_reproduce(repro);
      std::printf("%s: %zu checks, reports in %s\n", result.all_ok ? "all ok" : "FAILURES",
                  result.checks.size(), repro.out_dir.c_str());
      return result.all_ok ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
