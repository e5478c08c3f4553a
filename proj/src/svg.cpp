#include "yao4/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "yao4/analyze.hpp"

namespace yao4 {

namespace {

const char* const kQuadrantColor[4] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
const char* const kCrossingColor = "#ff7f0e";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double x0, y0;          // panel origin in page coordinates
  double size, pad;
  coord_t xlo, xhi, ylo, yhi;

  double sx(coord_t x) const {
    const double span = double(xhi - xlo);
    const double t = span == 0 ? 0.5 : double(x - xlo) / span;
    return x0 + pad + t * (size - 2 * pad);
  }
  double sy(coord_t y) const {
    const double span = double(yhi - ylo);
    const double t = span == 0 ? 0.5 : double(y - ylo) / span;
    return y0 + size - pad - t * (size - 2 * pad);  // flip y
  }
};

std::string lambda_label(QuadrantSet lambda) {
  std::string out = "λ = {";
  bool first = true;
  for (const Quadrant q : lambda.quadrants()) {
    if (!first) out += ",";
    out += std::to_string(q.index());
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string render_svg(const PointSet& ps, const std::vector<QuadrantSet>& panels,
                       const std::map<std::string, int>* landmarks,
                       const RenderOptions& options) {
  const double size = options.panel_size;
  const double gap = options.margin;
  const double width = gap + (size + gap) * double(panels.size());
  const double height = size + 2 * gap;

  coord_t xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  if (ps.size() > 0) {
    xlo = xhi = ps[0].x;
    ylo = yhi = ps[0].y;
    for (int i = 1; i < ps.size(); ++i) {
      xlo = std::min(xlo, ps[i].x);
      xhi = std::max(xhi, ps[i].x);
      ylo = std::min(ylo, ps[i].y);
      yhi = std::max(yhi, ps[i].y);
    }
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "<defs>\n";
  for (int q = 0; q < 4; ++q) {
    out += "<marker id=\"arrow-q" + std::to_string(q) +
           "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" +
           std::string(kQuadrantColor[q]) + "\"/></marker>\n";
  }
  out += "</defs>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t panel = 0; panel < panels.size(); ++panel) {
    const QuadrantSet lambda = panels[panel];
    const Frame frame{gap + double(panel) * (size + gap), gap, size, 18.0,
                      xlo, xhi, ylo, yhi};
    out += "<g>\n";
    out += "<rect x=\"" + fmt(frame.x0) + "\" y=\"" + fmt(frame.y0) + "\" width=\"" + fmt(size) +
           "\" height=\"" + fmt(size) + "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    out += "<text x=\"" + fmt(frame.x0 + 6) + "\" y=\"" + fmt(frame.y0 + 16) +
           "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">" +
           lambda_label(lambda) + "</text>\n";

    const DirectedYaoGraph g = build_optimized(ps, lambda);

    if (options.highlight_crossings) {
      const CrossingReport crossings = find_crossings(g, ps);
      for (const CrossingPair& pair : crossings.crossing_pairs) {
        for (const YaoEdge* e : {&pair.e1, &pair.e2}) {
          out += "<line x1=\"" + fmt(frame.sx(ps[e->from].x)) + "\" y1=\"" +
                 fmt(frame.sy(ps[e->from].y)) + "\" x2=\"" + fmt(frame.sx(ps[e->to].x)) +
                 "\" y2=\"" + fmt(frame.sy(ps[e->to].y)) + "\" stroke=\"" + kCrossingColor +
                 "\" stroke-width=\"5\" stroke-opacity=\"0.45\"/>\n";
        }
        if (!pair.witness.collinear_overlap) {
          const Frame& f = frame;
          const double span_x = double(f.xhi - f.xlo);
          const double span_y = double(f.yhi - f.ylo);
          const double tx = span_x == 0 ? 0.5 : (pair.witness.at.x_approx() - double(f.xlo)) / span_x;
          const double ty = span_y == 0 ? 0.5 : (pair.witness.at.y_approx() - double(f.ylo)) / span_y;
          out += "<circle cx=\"" + fmt(f.x0 + f.pad + tx * (size - 2 * f.pad)) + "\" cy=\"" +
                 fmt(f.y0 + size - f.pad - ty * (size - 2 * f.pad)) + "\" r=\"7\" fill=\"none\" stroke=\"" +
                 kCrossingColor + "\" stroke-width=\"2\"/>\n";
        }
      }
    }

    for (const YaoEdge& e : g.edges(ps)) {
      const int q = e.quadrant.index();
      out += "<line x1=\"" + fmt(frame.sx(ps[e.from].x)) + "\" y1=\"" + fmt(frame.sy(ps[e.from].y)) +
             "\" x2=\"" + fmt(frame.sx(ps[e.to].x)) + "\" y2=\"" + fmt(frame.sy(ps[e.to].y)) +
             "\" stroke=\"" + kQuadrantColor[q] + "\" stroke-width=\"1.2\" marker-end=\"url(#arrow-q" +
             std::to_string(q) + ")\"/>\n";
    }

    for (int i = 0; i < ps.size(); ++i) {
      out += "<circle cx=\"" + fmt(frame.sx(ps[i].x)) + "\" cy=\"" + fmt(frame.sy(ps[i].y)) +
             "\" r=\"2.2\" fill=\"#111111\"/>\n";
    }

    if (landmarks) {
      for (const auto& [name, index] : *landmarks) {
        if (index < 0 || index >= ps.size()) continue;
        out += "<text x=\"" + fmt(frame.sx(ps[index].x) + 4) + "\" y=\"" +
               fmt(frame.sy(ps[index].y) - 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555555\">" + name +
               "</text>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace yao4
