#pragma once
/**
 * Point-family generators: seeded random sets in general position, points on
 * a negatively sloped line, Λ shapes, the ε-offset tower gadget, a crossing
 * witness search, and a staircase family that approaches the √2 dilation
 * bound from below.
 *
 * Every generator is a pure function of (parameters, seed), emits a clean
 * point set, and self-certifies: the stated claim is re-checked with the
 * analysis routines before the instance is returned, and a construction
 * error is raised if the check fails. Landmark names identify the special
 * vertices each family talks about.
 */

#include <cstdint>
#include <map>
#include <string>

#include "yao4/build.hpp"
#include "yao4/point_set.hpp"

namespace yao4 {

struct construction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct search_exhausted_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeneratedInstance {
  PointSet point_set;
  std::string family;
  std::map<std::string, int> landmarks;            // name -> vertex index
  std::string claim;                               // property the instance witnesses
  std::map<std::string, std::string> params;       // generator parameters, echoed
};

struct VerificationResult {
  bool ok = false;
  std::string detail;
};

// Re-runs the instance's claim through the analysis routines.
VerificationResult verify_claim(const GeneratedInstance& instance);

// n uniform grid points inside the closed bbox (ticks, scale 9), resampled
// until the general-position assumptions hold. Throws capacity_error when
// the box cannot host n clean points.
GeneratedInstance gen_random(int n, std::uint64_t seed, const Rect& bbox);

// Default sampling box for gen_random: [0, 1000]² input units at scale 9.
Rect default_random_bbox();

// n collinear points on a negative-slope line, spacing jittered so that all
// pairwise distances differ. Q0/Q2 see nothing; Q1/Q3 link a single chain.
GeneratedInstance gen_negative_slope_line(int n, std::uint64_t seed);

// Λ shape: apex near (0, h), arms descending to (±w, ~0), n_per_arm points
// per arm counting the shared apex. The two bottom landmarks end up far
// apart in the graph although they are 2w apart in the plane.
GeneratedInstance gen_lambda(int n_per_arm, double half_width, double height,
                             std::uint64_t seed);

// Long-detour gadget: landmarks a..e plus two insulating towers of ±kε
// point pairs. The only directed a→d path is (a,b,c,d) and its length
// exceeds target_ratio·|ad|. Vertex layout: 0..4 = a,b,c,d,e, then the
// tower above d as (left,right) pairs per level, then the tower above e.
GeneratedInstance gen_tower(double target_ratio, std::uint64_t seed);

// Randomized search for a four-point configuration whose Y4^{0,1} contains
// a proper crossing (single-quadrant restrictions stay crossing-free).
// Throws search_exhausted_error after max_tries attempts.
GeneratedInstance gen_crossing(std::uint64_t seed, std::uint64_t max_tries);

// m alternating near-unit steps; Y4^{0} links them into one chain whose
// full-chain dilation is at least (1 - 4/m)·√2.
GeneratedInstance gen_staircase(int steps, std::uint64_t seed);

}  // namespace yao4
