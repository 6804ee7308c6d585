#pragma once

// SVG pictures of polygons, partitions and median points.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "kmedian/geometry.hpp"
#include "kmedian/objective.hpp"
#include "kmedian/partition.hpp"
#include "kmedian/solver.hpp"

namespace kmedian::svg {

struct Options {
  double size = 800.0;  // longest side of the drawing in pixels
  bool voronoi = false;
  bool partition = true;
};

namespace detail {

// Maps a world rectangle to pixels with y pointing up.
class Canvas {
public:
  Canvas(double xmin, double ymin, double xmax, double ymax, double size) {
    const double span = std::max(xmax - xmin, ymax - ymin);
    scale_ = span > 0.0 ? (size - 2.0 * kPad) / span : 1.0;
    x0_ = xmin;
    y1_ = ymax;
    width_ = (xmax - xmin) * scale_ + 2.0 * kPad;
    height_ = (ymax - ymin) * scale_ + 2.0 * kPad;
  }

  std::string header() const {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.1f\" height=\"%.1f\" "
                  "viewBox=\"0 0 %.1f %.1f\">\n"
                  "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
                  width_, height_, width_, height_);
    return buf;
  }

  std::string polygon(std::span<const Point2> pts, const char* stroke, const char* fill,
                      double width) const {
    std::string s = "<polygon points=\"";
    char buf[64];
    for (auto p : pts) {
      const Point2 q = map(p);
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", q.x, q.y);
      s += buf;
    }
    std::snprintf(buf, sizeof buf, "%.2f", width);
    return s + "\" stroke=\"" + stroke + "\" fill=\"" + fill + "\" stroke-width=\"" + buf + "\"/>\n";
  }

  std::string circle(Point2 p, double r, const char* fill) const {
    const Point2 q = map(p);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"%s\" stroke=\"black\" "
                  "stroke-width=\"0.5\"/>\n",
                  q.x, q.y, r, fill);
    return buf;
  }

  std::string text(Point2 p, const std::string& body) const {
    const Point2 q = map(p);
    char buf[96];
    std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" font-family=\"sans-serif\">",
                  q.x, q.y);
    return buf + body + "</text>\n";
  }

private:
  static constexpr double kPad = 10.0;
  Point2 map(Point2 p) const { return {kPad + (p.x - x0_) * scale_, kPad + (y1_ - p.y) * scale_}; }

  double scale_ = 1.0, x0_ = 0.0, y1_ = 0.0, width_ = 0.0, height_ = 0.0;
};

inline const char* provenance_color(Provenance p) {
  switch (p) {
    case Provenance::kept: return "#1f77b4";
    case Provenance::relocated: return "#ff7f0e";
    case Provenance::random: return "#d62728";
    case Provenance::reinserted: return "#2ca02c";
  }
  return "black";
}

inline std::vector<Point2> rect_ring(const AxisRect& r) {
  return {{r.x0, r.y0}, {r.x1(), r.y0}, {r.x1(), r.y1()}, {r.x0, r.y1()}};
}

}  // namespace detail

// Polygon, partition cells, medians colored by provenance (kept blue,
// relocated orange, random red, reinserted green) and optional Voronoi
// cells, all in the world frame.
inline std::string render_solution(const ConvexPolygon& C, const MedianSolution& s,
                                   const Options& opt = {}) {
  std::vector<Point2> frame_pts;
  for (auto c : s.frame.box.rect().corners()) frame_pts.push_back(s.frame.box.to_world(c));
  for (auto p : C.vertices()) frame_pts.push_back(p);
  double xmin = frame_pts[0].x, xmax = xmin, ymin = frame_pts[0].y, ymax = ymin;
  for (auto p : frame_pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const detail::Canvas cv(xmin, ymin, xmax, ymax, opt.size);
  std::string out = cv.header();
  if (opt.voronoi) {
    for (const auto& vc : voronoi_clip(C, s.points))
      if (vc.cell) out += cv.polygon(vc.cell->vertices(), "#999999", "#f2f2f2", 0.6);
  }
  if (opt.partition) {
    const auto& cells = s.placement.region;
    std::vector<AxisRect> draw;
    for (const auto& r : cells)
      if (r) draw.push_back(*r);
    for (std::size_t i : s.placement.orphans) draw.push_back(s.partition.cells[i]);
    for (const auto& r : draw) {
      auto ring = detail::rect_ring(r);
      for (auto& p : ring) p = s.frame.box.to_world(p);
      out += cv.polygon(ring, "#bbbbbb", "none", 0.5);
    }
  }
  out += cv.polygon(C.vertices(), "black", "none", 1.5);
  for (std::size_t i = 0; i < s.points.size(); ++i)
    out += cv.circle(s.points[i], 3.0, detail::provenance_color(s.provenance[i]));
  return out + "</svg>\n";
}

// A partition in its box frame, optionally with the polygon in the same frame.
inline std::string render_partition(const Partition& part, const ConvexPolygon* local = nullptr,
                                    const Options& opt = {}) {
  const detail::Canvas cv(part.box.x0, part.box.y0, part.box.x1(), part.box.y1(), opt.size);
  std::string out = cv.header();
  for (const auto& c : part.cells) out += cv.polygon(detail::rect_ring(c), "#555555", "#eef3fb", 0.8);
  if (local) out += cv.polygon(local->vertices(), "black", "none", 1.5);
  for (const auto& c : part.cells) out += cv.circle(c.center(), 2.0, "#1f77b4");
  return out + "</svg>\n";
}

// Every candidate grid configuration side by side, labeled with its aspect
// ratios; the selected one is marked.
inline std::string render_configs(const AxisRect& box, int k, const Options& opt = {}) {
  const auto configs = subdivide_configs(box, k);
  const GridConfig best = select_best_config(configs);
  const double gap = 0.25 * box.h;
  const double panel_h = box.h + gap;
  const double cols = 3.0;
  const double rows = std::ceil(configs.size() / cols);
  const detail::Canvas cv(0.0, -rows * panel_h, cols * (box.w + gap), 0.0, opt.size);
  std::string out = cv.header();
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& c = configs[i];
    const double ox = (i % 3) * (box.w + gap);
    const double oy = -static_cast<double>(i / 3 + 1) * panel_h;
    const Partition part = grid_partition({ox, oy, box.w, box.h}, c);
    const bool chosen = c.flag == best.flag && c.p1 == best.p1 && c.q1 == best.q1 && c.p2 == best.p2 &&
                        c.q2 == best.q2;
    for (const auto& cell : part.cells)
      out += cv.polygon(detail::rect_ring(cell), "#555555", chosen ? "#d9f0d3" : "#eef3fb", 0.8);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s p=%d q=%d  AR %.4f / %.4f%s",
                  c.flag == GridFlag::vertical ? "V" : "H", c.source.p_loop ? c.p1 + c.p2 : c.p1,
                  c.source.p_loop ? c.q1 : c.q1 + c.q2, c.ar1, c.ar2, chosen ? " *" : "");
    out += cv.text({ox, oy + box.h + 0.4 * gap}, buf);
  }
  return out + "</svg>\n";
}

}  // namespace kmedian::svg
