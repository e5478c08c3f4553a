#pragma once
/**
 * Validated point collections.
 *
 * A PointSet owns an ordered list of grid points (indices are stable, 0-based,
 * in input order) plus the decimal scale that maps grid ticks back to input
 * units. Construction checks the two "general position" assumptions the
 * graph-level guarantees rely on:
 *
 *   1. no two point pairs determine the same distance, and
 *   2. no two points share an x or a y coordinate.
 *
 * Violations are reported, not rejected: builders and analyses run on dirty
 * sets too, but the structural guarantees (planarity, connectivity, the √2
 * dilation bound) are only asserted for clean ones.
 */

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "yao4/geom.hpp"

namespace yao4 {

struct GeneralPositionReport {
  // Each entry is two index pairs at exactly equal squared distance.
  std::vector<std::array<std::pair<int, int>, 2>> distance_ties;
  std::vector<std::pair<int, int>> shared_x;
  std::vector<std::pair<int, int>> shared_y;
  bool clean = false;
  bool computed = false;
};

// Exact detection of violated assumptions. Throws std::invalid_argument on
// duplicate points (duplicates break index identity, so they are a hard
// error rather than a report entry).
GeneralPositionReport validate_general_position(const std::vector<Point>& points);

struct PointSet {
  std::vector<Point> points;
  int scale = 6;  // decimal places: ticks = input units * 10^scale
  GeneralPositionReport validation;

  int size() const { return int(points.size()); }
  const Point& operator[](int i) const { return points[std::size_t(i)]; }
  bool clean() const { return validation.clean; }
};

// Builds a PointSet and runs validation (unless skip_validation, which still
// enforces distinctness and the coordinate limit but leaves the report
// uncomputed; meant for throwaway benchmark inputs).
PointSet make_point_set(std::vector<Point> points, int scale,
                        bool skip_validation = false);

// Index-preserving rotation of every point by +90° about the origin.
PointSet rotated90(const PointSet& ps, int times = 1);

}  // namespace yao4
