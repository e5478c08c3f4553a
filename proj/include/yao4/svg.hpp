#pragma once
// SVG rendering of point sets and their quadrant graphs: dots for points,
// arrows colored by quadrant, proper crossings highlighted. One panel per
// requested quadrant subset, laid out left to right. Output is a plain
// deterministic string.

#include <map>
#include <string>
#include <vector>

#include "yao4/build.hpp"
#include "yao4/point_set.hpp"

namespace yao4 {

struct RenderOptions {
  double panel_size = 420.0;
  double margin = 28.0;
  bool highlight_crossings = true;
};

std::string render_svg(const PointSet& ps, const std::vector<QuadrantSet>& panels,
                       const std::map<std::string, int>* landmarks,
                       const RenderOptions& options = {});

}  // namespace yao4
