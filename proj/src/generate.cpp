#include "yao4/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "yao4/analyze.hpp"

namespace yao4 {

namespace {

constexpr coord_t kUnit = 1'000'000;  // one input unit at scale 6

// mt19937_64 output is bit-specified by the standard; the distribution
// helpers below avoid std::uniform_int_distribution, whose mapping is
// implementation-defined, so generated instances are identical everywhere.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

coord_t rng_range(std::mt19937_64& rng, coord_t lo, coord_t hi) {
  return lo + coord_t(rng_below(rng, std::uint64_t(hi - lo) + 1));
}

std::string format_double_param(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

long double euclid(const PointSet& ps, int a, int b) {
  return sqrtl((long double)dist2(ps[a], ps[b]));
}

void require_verified(GeneratedInstance& instance) {
  const VerificationResult result = verify_claim(instance);
  if (!result.ok) {
    throw construction_error("generator self-check failed for family '" + instance.family +
                             "': " + result.detail);
  }
}

}  // namespace

Rect default_random_bbox() {
  const coord_t hi = coord_t(1000) * 1'000'000'000;  // 1000 units at scale 9
  return Rect{{0, 0}, {hi, hi}};
}

GeneratedInstance gen_random(int n, std::uint64_t seed, const Rect& bbox) {
  if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
  const coord_t xlo = std::min(bbox.corner1.x, bbox.corner2.x);
  const coord_t xhi = std::max(bbox.corner1.x, bbox.corner2.x);
  const coord_t ylo = std::min(bbox.corner1.y, bbox.corner2.y);
  const coord_t yhi = std::max(bbox.corner1.y, bbox.corner2.y);
  if (xhi - xlo + 1 < n || yhi - ylo + 1 < n) {
    throw capacity_error("gen_random: bbox cannot host " + std::to_string(n) +
                         " points with distinct coordinates");
  }

  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  std::unordered_set<coord_t> used_x, used_y;
  auto draw_point = [&]() -> Point {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      const Point p{rng_range(rng, xlo, xhi), rng_range(rng, ylo, yhi)};
      if (used_x.count(p.x) || used_y.count(p.y)) continue;
      used_x.insert(p.x);
      used_y.insert(p.y);
      return p;
    }
    throw capacity_error("gen_random: could not place a point with fresh coordinates");
  };
  pts.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) pts.push_back(draw_point());

  // Distance ties are too rare to track online; detect and repair instead.
  for (int round = 0;; ++round) {
    const GeneralPositionReport report = validate_general_position(pts);
    if (report.clean) break;
    if (round >= 64) throw capacity_error("gen_random: unable to reach general position");
    std::set<int> offenders;
    for (const auto& tie : report.distance_ties) {
      offenders.insert(tie[0].first);
      offenders.insert(tie[0].second);
    }
    for (const int i : offenders) {
      used_x.erase(pts[std::size_t(i)].x);
      used_y.erase(pts[std::size_t(i)].y);
      pts[std::size_t(i)] = draw_point();
    }
  }

  GeneratedInstance instance;
  instance.point_set = make_point_set(std::move(pts), 9);
  instance.family = "random";
  instance.claim = "clean && components(Y[0,1]) == 1";
  instance.params = {{"n", std::to_string(n)},
                     {"seed", std::to_string(seed)},
                     {"bbox", std::to_string(xlo) + "," + std::to_string(ylo) + "," +
                                  std::to_string(xhi) + "," + std::to_string(yhi)}};
  require_verified(instance);
  return instance;
}

GeneratedInstance gen_negative_slope_line(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_negative_slope_line: n must be >= 2");
  std::mt19937_64 rng(seed);

  // Positions t_i along the line, all pairwise differences distinct so no
  // two point pairs are equidistant (uniform spacing would tie everything).
  std::vector<coord_t> t{0};
  std::set<coord_t> diffs;
  while (int(t.size()) < n) {
    for (;;) {
      const coord_t next = t.back() + rng_range(rng, 1000, 2000);
      bool fresh = true;
      for (const coord_t prev : t) {
        if (diffs.count(next - prev)) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        for (const coord_t prev : t) diffs.insert(next - prev);
        t.push_back(next);
        break;
      }
    }
  }

  std::vector<Point> pts;
  pts.reserve(std::size_t(n));
  for (const coord_t ti : t) pts.push_back(Point{2000 * ti, -3000 * ti});

  GeneratedInstance instance;
  instance.point_set = make_point_set(std::move(pts), 6);
  instance.family = "negline";
  instance.landmarks = {{"top", 0}};
  instance.claim =
      "edges(Y[0]) == 0 && edges(Y[2]) == 0 && components(Y[0]) == n && "
      "components(Y[2]) == n && edges(Y[1]) == n-1 && components(Y[1]) == 1 && "
      "edges(Y[3]) == n-1 && components(Y[3]) == 1";
  instance.params = {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}};
  require_verified(instance);
  return instance;
}

GeneratedInstance gen_lambda(int n_per_arm, double half_width, double height,
                             std::uint64_t seed) {
  if (n_per_arm < 2) throw std::invalid_argument("gen_lambda: n_per_arm must be >= 2");
  if (!(height > half_width && half_width > 0)) {
    throw std::invalid_argument("gen_lambda: need h > w > 0");
  }
  if (height > 10'000.0) throw std::invalid_argument("gen_lambda: height capped at 1e4 units");
  // Snap to multiples of 10^6 ticks: each arm direction then reduces to a
  // step vector with at least 10^6 exact lattice positions, enough jitter
  // room to keep the many structurally similar arm distances distinct.
  const coord_t snap = 1'000'000;
  const coord_t arm_w = std::max<coord_t>(1, llround(half_width * 100.0)) * snap;
  const coord_t arm_h = std::max<coord_t>(1, llround(height * 100.0)) * snap;
  if (arm_h <= arm_w) throw std::invalid_argument("gen_lambda: need h > w after snapping");
  const coord_t g = std::gcd(arm_w, arm_h);
  const coord_t ux = arm_w / g;
  const coord_t uy = arm_h / g;
  if (g < 2 * n_per_arm + 2) {
    throw std::invalid_argument("gen_lambda: arms too short for n_per_arm lattice points");
  }

  // A cross-valley edge from an arm point at parameter s (distance from the
  // apex) needs the opposite arm to be closer than the next point up the own
  // arm, i.e. the local step to exceed ~2s·w/h. Keeping the step below
  // s·w/(2h) therefore pins every crossing into the top 45% of the arms,
  // which is what drives the stretch bound. That geometric ladder needs
  // about 1.6·h/w points; below that the bottoms may connect directly and
  // only connectivity is claimed.
  const bool claim_stretch =
      double(n_per_arm - 1) >= 1.6 * height / half_width + 5.0;

  std::mt19937_64 rng(seed);
  const coord_t ladder_end = coord_t(0.45 * double(g));
  auto draw_arm = [&](coord_t bottom_s, std::mt19937_64& r) {
    std::vector<coord_t> out{bottom_s};
    coord_t s = bottom_s;
    while (int(out.size()) < n_per_arm - 1 && s > ladder_end) {
      coord_t step = std::max<coord_t>(1, coord_t(wide_t(s) * arm_w / (2 * wide_t(arm_h))));
      step += rng_range(r, 0, std::max<coord_t>(1, step / 8));
      if (s - step <= 0) break;
      s -= step;
      out.push_back(s);
    }
    // Any remaining points spread coarsely toward the apex; crossings up
    // there are expected and harmless.
    coord_t top = s;
    for (int k = n_per_arm - 1 - int(out.size()); k >= 1; --k) {
      const coord_t target = coord_t(wide_t(top) * k / (k + 1));
      const coord_t window = std::max<coord_t>(1, top / (8 * coord_t(k + 1)));
      coord_t v = target - rng_range(r, 0, window);
      if (v >= top) v = top - 1;
      if (v <= 0) break;
      out.push_back(v);
      top = v;
    }
    return out;
  };

  for (int round = 0; round < 64; ++round) {
    std::vector<coord_t> left_s = draw_arm(g, rng);
    std::vector<coord_t> right_s = draw_arm(g - 1, rng);
    if (int(left_s.size()) != n_per_arm - 1 || int(right_s.size()) != n_per_arm - 1) {
      continue;
    }
    std::sort(left_s.begin(), left_s.end());
    std::sort(right_s.begin(), right_s.end());

    std::vector<Point> pts{Point{0, arm_h}};  // apex
    std::map<std::string, int> landmarks{{"apex", 0}};
    for (const coord_t s : left_s) {
      if (s == g) landmarks["bottom_left"] = int(pts.size());
      pts.push_back(Point{-s * ux, arm_h - s * uy});
    }
    for (const coord_t s : right_s) {
      if (s == g - 1) landmarks["bottom_right"] = int(pts.size());
      pts.push_back(Point{s * ux, arm_h - s * uy});
    }

    if (!validate_general_position(pts).clean) continue;

    GeneratedInstance instance;
    instance.point_set = make_point_set(std::move(pts), 6);
    instance.family = "lambda";
    instance.landmarks = std::move(landmarks);
    instance.claim =
        claim_stretch
            ? "components(Y[0,1]) == 1 && stretch(bottom_left, bottom_right) >= 0.5*h/w && "
              "reaches(bottom_left, apex) && reaches(bottom_right, apex)"
            : "components(Y[0,1]) == 1 && reaches(bottom_left, apex) && "
              "reaches(bottom_right, apex)";
    instance.params = {{"n_per_arm", std::to_string(n_per_arm)},
                       {"seed", std::to_string(seed)},
                       {"w", format_double_param(half_width)},
                       {"h", format_double_param(height)},
                       {"w_ticks", std::to_string(arm_w)},
                       {"h_ticks", std::to_string(arm_h)},
                       {"claim_stretch", claim_stretch ? "true" : "false"}};
    require_verified(instance);
    return instance;
  }
  throw construction_error("gen_lambda: could not reach general position");
}

namespace {

// Tower geometry in ticks (scale 6, so 10^8 ticks = 100 input units).
// The a,b,c,d,e band sits well below the first tower level; both towers
// lean outward by ±kε per level with ε small enough that no tower point
// ever gets closer to d than its own next-level partners. Level heights
// carry wide independent jitter windows: with ~10^3 structurally similar
// point pairs per level gap, narrow windows would collide in squared
// distance on every attempt and assumption 1 could never be met.
struct TowerLayout {
  static constexpr coord_t eps = 2'400;
  static constexpr coord_t pitch = 140'000;       // vertical level spacing
  static constexpr coord_t window = 60'000;       // per-level y jitter range
  static constexpr coord_t pair_rise = 900;       // right twin above left twin
  static constexpr int d_levels = 50;
  static constexpr int e_levels = 200;
  static constexpr coord_t ax = 0, ay = 0;
  static constexpr coord_t by = 3'043'700;
  static constexpr coord_t cx = -5'000'000, cy = 12'024'100;
  static constexpr coord_t dx = -8'000'000, dy = 15'087'300;
  static constexpr coord_t ex = -10'000'000, ey = 1'015'900;
  static constexpr coord_t d_tower_base = dy + 57'700;
  static constexpr coord_t e_tower_base = ey;
  static constexpr coord_t unit = 100 * kUnit;    // 10^8 ticks
};

}  // namespace

GeneratedInstance gen_tower(double target_ratio, std::uint64_t seed) {
  if (!(target_ratio > 1.0)) throw std::invalid_argument("gen_tower: target ratio must exceed 1");
  if (target_ratio > 1e5) throw std::invalid_argument("gen_tower: target ratio capped at 1e5");
  using T = TowerLayout;
  // Path length ≈ 2L while |ad| ≈ 0.171 grid units, so this L clears the
  // requested ratio with margin to spare.
  const coord_t big_l = T::unit * coord_t(std::ceil(0.09 * target_ratio + 2.0));

  std::mt19937_64 rng(seed);
  for (int round = 0; round < 64; ++round) {
    auto jx = [&] { return rng_range(rng, -400, 400); };
    auto jy = [&] { return rng_range(rng, -20'000, 20'000); };

    std::vector<Point> pts;
    pts.push_back(Point{T::ax, T::ay});                    // 0: a
    pts.push_back(Point{big_l + jx(), T::by + jy()});      // 1: b
    pts.push_back(Point{T::cx + jx(), T::cy + jy()});      // 2: c
    pts.push_back(Point{T::dx + jx(), T::dy + jy()});      // 3: d
    pts.push_back(Point{T::ex + jx(), T::ey + jy()});      // 4: e
    auto push_tower = [&](coord_t x0, coord_t base, int levels) {
      for (int k = 1; k <= levels; ++k) {
        const Point left{x0 - T::eps * k + jx(),
                         base + T::pitch * k + rng_range(rng, 0, T::window)};
        // The right twin sits a sub-ε amount higher so the pair keeps
        // distinct y coordinates while still connecting near-horizontally.
        const Point right{x0 + T::eps * k + jx(), left.y + rng_range(rng, 1, T::pair_rise)};
        pts.push_back(left);
        pts.push_back(right);
      }
    };
    push_tower(T::dx, T::d_tower_base, T::d_levels);
    push_tower(T::ex, T::e_tower_base, T::e_levels);

    if (!validate_general_position(pts).clean) continue;

    GeneratedInstance instance;
    instance.point_set = make_point_set(std::move(pts), 6);
    instance.family = "tower";
    instance.landmarks = {{"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}, {"e", 4}};
    instance.claim = "paths(a, d) == 1 && dilation(a, d) > t";
    instance.params = {{"t", format_double_param(target_ratio)},
                       {"seed", std::to_string(seed)}};
    require_verified(instance);
    return instance;
  }
  throw construction_error("gen_tower: could not reach general position");
}

GeneratedInstance gen_crossing(std::uint64_t seed, std::uint64_t max_tries) {
  if (max_tries < 1) throw std::invalid_argument("gen_crossing: max_tries must be >= 1");
  std::mt19937_64 rng(seed);

  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Point> pts;
    if (attempt % 3 != 2) {
      // Clustered quadruple: a long shallow Q0 edge and a steep Q1 edge
      // through it. Jitter explores the neighborhood of the template.
      auto j = [&] { return rng_range(rng, -500, 500) * 100; };
      pts = {Point{j(), j()}, Point{1'000'000 + j(), 300'000 + j()},
             Point{820'000 + j(), -40'000 + j()}, Point{750'000 + j(), 750'000 + j()}};
    } else {
      const int n = 4 + int(rng_below(rng, 5));
      for (int i = 0; i < n; ++i) {
        pts.push_back(Point{rng_range(rng, 0, kUnit), rng_range(rng, 0, kUnit)});
      }
    }
    if (!validate_general_position(pts).clean) continue;
    const PointSet ps = make_point_set(std::move(pts), 6);
    const DirectedYaoGraph g01 = build_reference(ps, QuadrantSet{0, 1});
    const CrossingReport crossings = find_crossings(g01, ps);
    if (crossings.count == 0) continue;

    const CrossingPair& pair = crossings.crossing_pairs.front();
    GeneratedInstance instance;
    instance.point_set = ps;
    instance.family = "crossing";
    instance.landmarks = {{"a", pair.e1.from}, {"b", pair.e1.to},
                          {"c", pair.e2.from}, {"d", pair.e2.to}};
    instance.claim =
        "crossings(Y[0,1]) >= 1 && crossings(Y[0]) == 0 && crossings(Y[1]) == 0";
    instance.params = {{"seed", std::to_string(seed)},
                       {"max_tries", std::to_string(max_tries)},
                       {"attempts", std::to_string(attempt + 1)}};
    require_verified(instance);
    return instance;
  }
  throw search_exhausted_error("gen_crossing: no crossing found in " +
                               std::to_string(max_tries) + " attempts");
}

GeneratedInstance gen_staircase(int steps, std::uint64_t seed) {
  if (steps < 2) throw std::invalid_argument("gen_staircase: need at least 2 steps");
  if (steps > 100000) throw std::invalid_argument("gen_staircase: step count capped at 1e5");
  const coord_t step = kUnit;
  std::mt19937_64 rng(seed);

  for (int round = 0; round < 64; ++round) {
    std::vector<Point> pts{Point{0, 0}};
    for (int k = 1; k <= steps; ++k) {
      const coord_t run = rng_range(rng, 1, 1000);
      const coord_t rise = rng_range(rng, 1, 1000);
      const Point prev = pts.back();
      // Alternating near-horizontal and near-vertical steps, every move
      // strictly increasing in both coordinates.
      if (k % 2 == 1) {
        pts.push_back(Point{prev.x + step + run, prev.y + rise});
      } else {
        pts.push_back(Point{prev.x + run, prev.y + step + rise});
      }
    }
    if (!validate_general_position(pts).clean) continue;

    GeneratedInstance instance;
    instance.point_set = make_point_set(std::move(pts), 6);
    instance.family = "staircase";
    instance.landmarks = {{"bottom_left", 0}, {"top", steps}};
    instance.claim =
        "dilation(bottom_left, top) >= (1 - 4/m)*sqrt(2) && "
        "max_dilation(Y[0]) <= sqrt(2) + 1e-9";
    instance.params = {{"m", std::to_string(steps)}, {"seed", std::to_string(seed)}};
    require_verified(instance);
    return instance;
  }
  throw construction_error("gen_staircase: could not reach general position");
}

VerificationResult verify_claim(const GeneratedInstance& instance) {
  const PointSet& ps = instance.point_set;
  auto fail = [](std::string detail) { return VerificationResult{false, std::move(detail)}; };
  auto landmark = [&](const char* name) {
    const auto it = instance.landmarks.find(name);
    if (it == instance.landmarks.end() || it->second < 0 || it->second >= ps.size()) {
      throw construction_error(std::string("missing landmark '") + name + "'");
    }
    return it->second;
  };
  if (!ps.clean()) return fail("point set violates a general-position assumption");

  if (instance.family == "random") {
    const DirectedYaoGraph g = build_optimized(ps, QuadrantSet{0, 1});
    const ConnectivityReport conn = connected_components(g, ps);
    if (conn.component_count != 1) {
      return fail("Y[0,1] has " + std::to_string(conn.component_count) + " components");
    }
    return {true, "clean, Y[0,1] connected"};
  }

  if (instance.family == "negline") {
    const int n = ps.size();
    for (const int qi : {0, 2}) {
      const DirectedYaoGraph g = build_optimized(ps, QuadrantSet::single(Quadrant(qi)));
      if (g.edge_count() != 0) return fail("Y[" + std::to_string(qi) + "] has edges");
      if (connected_components(g, ps).component_count != n) {
        return fail("Y[" + std::to_string(qi) + "] is not fully isolated");
      }
    }
    for (const int qi : {1, 3}) {
      const DirectedYaoGraph g = build_optimized(ps, QuadrantSet::single(Quadrant(qi)));
      if (g.edge_count() != std::size_t(n - 1)) {
        return fail("Y[" + std::to_string(qi) + "] is not a single chain");
      }
      if (connected_components(g, ps).component_count != 1) {
        return fail("Y[" + std::to_string(qi) + "] chain is disconnected");
      }
    }
    return {true, "Y[0]/Y[2] isolated, Y[1]/Y[3] single chains"};
  }

  if (instance.family == "lambda") {
    const int apex = landmark("apex");
    const int bl = landmark("bottom_left");
    const int br = landmark("bottom_right");
    const DirectedYaoGraph g = build_optimized(ps, QuadrantSet{0, 1});
    if (connected_components(g, ps).component_count != 1) return fail("Y[0,1] disconnected");
    const std::vector<bool> reach = reaches_vertex(g, apex);
    if (!reach[std::size_t(bl)] || !reach[std::size_t(br)]) {
      return fail("a bottom vertex has no directed path to the apex");
    }
    if (instance.params.at("claim_stretch") != "true") {
      return {true, "connected, both bottoms reach the apex (arms too sparse for the "
                    "stretch bound)"};
    }
    const long double w = (long double)std::stoll(instance.params.at("w_ticks"));
    const long double h = (long double)std::stoll(instance.params.at("h_ticks"));
    const std::vector<long double> dist =
        shortest_path_lengths(undirected_view(g, ps), ps, bl);
    if (dist[std::size_t(br)] < 0.0L) return fail("bottoms not connected");
    const long double stretch = dist[std::size_t(br)] / euclid(ps, bl, br);
    const long double bound = 0.5L * h / w;
    if (stretch < bound) {
      return fail("stretch " + std::to_string(double(stretch)) + " below bound " +
                  std::to_string(double(bound)));
    }
    return {true, "stretch(bottom_left, bottom_right) = " + std::to_string(double(stretch)) +
                      " >= " + std::to_string(double(bound))};
  }

  if (instance.family == "tower") {
    const int a = landmark("a"), b = landmark("b"), c = landmark("c"), d = landmark("d");
    const double t = std::stod(instance.params.at("t"));
    const DirectedYaoGraph g = build_optimized(ps, QuadrantSet{0, 1});
    if (g.target(a, Quadrant(0)) != b) return fail("edge a->b missing");
    if (g.target(b, Quadrant(1)) != c) return fail("edge b->c missing");
    if (g.target(c, Quadrant(1)) != d) return fail("edge c->d missing");
    // The first level pair of the tower above d occupies indices 5 and 6;
    // the near-horizontal closed-boundary edge must link them.
    if (g.target(5, Quadrant(0)) != 6) return fail("level-1 pair above d not adjacent");
    const std::uint64_t paths = count_directed_paths(g, a, d);
    if (paths != 1) return fail("count of a->d paths is " + std::to_string(paths));
    const std::vector<long double> len = longest_path_lengths(g, ps, a);
    const long double ratio = len[std::size_t(d)] / euclid(ps, a, d);
    if (!(ratio > (long double)t)) {
      return fail("a->d dilation " + std::to_string(double(ratio)) + " not above " +
                  std::to_string(t));
    }
    return {true, "unique a->d path, dilation " + std::to_string(double(ratio)) + " > " +
                      std::to_string(t)};
  }

  if (instance.family == "crossing") {
    const DirectedYaoGraph g01 = build_optimized(ps, QuadrantSet{0, 1});
    const CrossingReport on_pair = find_crossings(g01, ps);
    if (on_pair.count == 0) return fail("Y[0,1] has no proper crossing");
    for (const int qi : {0, 1}) {
      const CrossingReport solo =
          find_crossings(restrict_graph(g01, QuadrantSet::single(Quadrant(qi))), ps);
      if (solo.count != 0) {
        return fail("single quadrant " + std::to_string(qi) + " unexpectedly crosses");
      }
    }
    return {true, "Y[0,1] crossing count = " + std::to_string(on_pair.count)};
  }

  if (instance.family == "staircase") {
    const int m = std::stoi(instance.params.at("m"));
    const int bottom = landmark("bottom_left");
    const int top = landmark("top");
    const DirectedYaoGraph g = build_optimized(ps, QuadrantSet{0});
    for (int i = 0; i < m; ++i) {
      if (g.target(i, Quadrant(0)) != i + 1) return fail("chain edge missing at " + std::to_string(i));
    }
    const std::vector<long double> len = longest_path_lengths(g, ps, bottom);
    const long double ratio = len[std::size_t(top)] / euclid(ps, bottom, top);
    const long double bound = (1.0L - 4.0L / m) * sqrtl(2.0L);
    if (ratio < bound) {
      return fail("chain dilation " + std::to_string(double(ratio)) + " below " +
                  std::to_string(double(bound)));
    }
    const DilationReport overall = directed_path_dilation(g, ps);
    if (!overall.is_dag || overall.max_path_dilation > std::sqrt(2.0) + 1e-9) {
      return fail("dilation bound violated");
    }
    return {true, "chain dilation " + std::to_string(double(ratio))};
  }

  return fail("unknown family '" + instance.family + "'");
}

}  // namespace yao4
