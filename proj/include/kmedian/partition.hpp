#pragma once

// Equal-area partitions of an axis-aligned box into k rectangles, grouped
// into strips (columns or rows of congruent cells).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kmedian/error.hpp"
#include "kmedian/geometry.hpp"

namespace kmedian {

// A column strip stacks its cells bottom to top; a row strip places them
// left to right.
enum class StripOrientation { column, row };

struct Strip {
  StripOrientation orientation = StripOrientation::column;
  AxisRect extent;
  std::size_t first = 0;           // index of the first cell in Partition::cells
  std::size_t count = 0;           // cells in the strip
  std::size_t original_count = 0;  // cells at creation time

  // The strip's extent split into n congruent cells along its stacking axis.
  AxisRect split_cell(std::size_t j, std::size_t n) const {
    if (orientation == StripOrientation::column) {
      const double ch = extent.h / static_cast<double>(n);
      return {extent.x0, extent.y0 + static_cast<double>(j) * ch, extent.w, ch};
    }
    const double cw = extent.w / static_cast<double>(n);
    return {extent.x0 + static_cast<double>(j) * cw, extent.y0, cw, extent.h};
  }

  double cell_aspect_ratio(std::size_t n) const {
    const AxisRect c = split_cell(0, n);
    return c.aspect_ratio();
  }
};

enum class GridFlag { vertical, horizontal };

// Which loop of the configuration search produced a grid configuration.
struct ConfigSource {
  bool p_loop = true;  // false: the q loop
  int offset = 0;      // -1, 0, +1 relative to p0 (or q0)
};

// Two abutting uniform grids. Vertical: a left block of p1 columns x q1 rows
// of width w - ell and a right block of p2 columns x q2 rows of width ell.
// Horizontal: bottom block p1 x q1 of height h - ell, top block p2 x q2.
struct GridConfig {
  GridFlag flag = GridFlag::vertical;
  int p1 = 0, q1 = 0, p2 = 0, q2 = 0;
  double ell = 0.0;
  double ar1 = 0.0;
  double ar2 = 0.0;
  ConfigSource source;

  int cell_count() const { return p1 * q1 + p2 * q2; }
  double max_ar() const { return std::max(ar1, ar2); }
  double min_ar() const { return std::min(ar1, ar2); }
};

struct Partition {
  AxisRect box;
  std::vector<AxisRect> cells;
  std::vector<Strip> strips;
  std::optional<GridConfig> grid;  // set for grid partitions
};

struct AspectStats {
  double max_ar = 0.0;
  double max_ar_excl_last = 0.0;
  double last_ar = 0.0;
};

// "Last" is the final cell created by the partitioning algorithm.
inline AspectStats partition_aspect_stats(const Partition& p) {
  AspectStats s;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const double ar = p.cells[i].aspect_ratio();
    s.max_ar = std::max(s.max_ar, ar);
    if (i + 1 < p.cells.size()) s.max_ar_excl_last = std::max(s.max_ar_excl_last, ar);
  }
  if (!p.cells.empty()) s.last_ar = p.cells.back().aspect_ratio();
  return s;
}

// Squarified strip partition. While cells remain, a strip is laid along the
// short side of the unfilled region (a column at the left when width >=
// height, else a row at the bottom) and grown one cell at a time while the
// common cell aspect ratio strictly decreases.
inline Partition squarified_partition(const AxisRect& box, int k) {
  if (k < 1) throw domain_error("squarified_partition: k must be >= 1");
  if (!(box.w > 0.0) || !(box.h > 0.0)) throw domain_error("squarified_partition: empty box");

  Partition part;
  part.box = box;
  part.cells.reserve(static_cast<std::size_t>(k));
  const double cell_area = box.area() / k;

  double x = box.x0, y = box.y0;  // lower-left of the unfilled region
  std::size_t remaining = static_cast<std::size_t>(k);
  while (remaining > 0) {
    const double W = box.x1() - x;
    const double H = box.y1() - y;
    const bool column = W >= H;
    const double side = column ? H : W;  // length the strip runs along

    auto strip_ar = [&](std::size_t i) {
      const double thick = static_cast<double>(i) * cell_area / side;
      return aspect_ratio(thick, side / static_cast<double>(i));
    };
    std::size_t i = 1;
    while (i < remaining && strip_ar(i + 1) < strip_ar(i)) ++i;

    Strip s;
    s.orientation = column ? StripOrientation::column : StripOrientation::row;
    s.first = part.cells.size();
    s.count = s.original_count = i;
    const bool closes = i == remaining;
    if (column) {
      const double thick = closes ? W : static_cast<double>(i) * cell_area / H;
      s.extent = {x, y, thick, H};
      x += thick;
    } else {
      const double thick = closes ? H : static_cast<double>(i) * cell_area / W;
      s.extent = {x, y, W, thick};
      y += thick;
    }
    for (std::size_t j = 0; j < i; ++j) part.cells.push_back(s.split_cell(j, i));
    part.strips.push_back(s);
    remaining -= i;
  }
  return part;
}

namespace detail {

inline double grid_ar(double num, double den) { return std::max(num / den, den / num); }

}  // namespace detail

// Split coordinate that equalizes cell areas across the two blocks.
inline double solve_ell(const AxisRect& box, GridFlag flag, int p1, int q1, int p2, int q2) {
  const int k = p1 * q1 + p2 * q2;
  if (k <= 0) throw domain_error("solve_ell: empty configuration");
  const double extent = flag == GridFlag::vertical ? box.w : box.h;
  return extent * static_cast<double>(p2 * q2) / k;
}

// The up-to-six candidate configurations: for p in {p0-1, p0, p0+1} split
// vertically into (p - s) columns of q cells and s columns of q + 1 cells,
// and symmetrically for q in {q0-1, q0, q0+1} with rows.
inline std::vector<GridConfig> subdivide_configs(const AxisRect& box, int k) {
  if (k < 1) throw domain_error("subdivide_configs: k must be >= 1");
  const double w = box.w, h = box.h;
  const int p0 = static_cast<int>(std::floor(std::sqrt(w * k / h)));
  const int q0 = static_cast<int>(std::floor(std::sqrt(h * k / w)));
  std::vector<GridConfig> out;

  for (int off = -1; off <= 1; ++off) {
    const int p = p0 + off;
    if (p < 1) continue;
    const int q = k / p;
    if (q < 1) continue;
    const int s = k - p * q;
    GridConfig c;
    c.flag = GridFlag::vertical;
    c.p1 = p - s;
    c.q1 = q;
    c.p2 = s;
    c.q2 = q + 1;
    c.ell = s > 0 ? solve_ell(box, c.flag, c.p1, c.q1, c.p2, c.q2) : 0.0;
    if (!(c.ell >= 0.0 && c.ell <= w)) c.ell = 0.0;
    c.ar1 = detail::grid_ar(w * q * q, h * k);
    c.ar2 = c.ell != 0.0 ? detail::grid_ar(w * (q + 1.0) * (q + 1.0), h * k) : c.ar1;
    c.source = {true, off};
    out.push_back(c);
  }
  for (int off = -1; off <= 1; ++off) {
    const int q = q0 + off;
    if (q < 1) continue;
    const int p = k / q;
    if (p < 1) continue;
    const int s = k - p * q;
    GridConfig c;
    c.flag = GridFlag::horizontal;
    c.p1 = p;
    c.q1 = q - s;
    c.p2 = p + 1;
    c.q2 = s;
    c.ell = s > 0 ? solve_ell(box, c.flag, c.p1, c.q1, c.p2, c.q2) : 0.0;
    if (!(c.ell >= 0.0 && c.ell <= h)) c.ell = 0.0;
    c.ar1 = detail::grid_ar(h * p * p, w * k);
    c.ar2 = c.ell != 0.0 ? detail::grid_ar(h * (p + 1.0) * (p + 1.0), w * k) : c.ar1;
    c.source = {false, off};
    out.push_back(c);
  }
  return out;
}

// Smallest maximum aspect ratio; ties go to the smaller minimum aspect
// ratio, then to enumeration order.
inline GridConfig select_best_config(const std::vector<GridConfig>& configs) {
  if (configs.empty()) throw domain_error("select_best_config: no configurations");
  auto same = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(a, b); };
  const GridConfig* best = &configs.front();
  for (const auto& c : configs) {
    if (&c == best) continue;
    if (same(c.max_ar(), best->max_ar())) {
      if (c.min_ar() < best->min_ar() && !same(c.min_ar(), best->min_ar())) best = &c;
    } else if (c.max_ar() < best->max_ar()) {
      best = &c;
    }
  }
  return *best;
}

// Lays out both grid blocks. Cells are emitted strip by strip: columns left
// to right for a vertical split, rows bottom to top for a horizontal one.
inline Partition grid_partition(const AxisRect& box, const GridConfig& cfg) {
  if (cfg.p1 < 0 || cfg.q1 < 0 || cfg.p2 < 0 || cfg.q2 < 0 || cfg.cell_count() < 1)
    throw domain_error("grid_partition: invalid block sizes");
  const bool vertical = cfg.flag == GridFlag::vertical;
  const double extent = vertical ? box.w : box.h;
  const bool second = cfg.p2 * cfg.q2 > 0;
  if (second) {
    if (cfg.p1 * cfg.q1 == 0) throw domain_error("grid_partition: empty first block");
    const double want = solve_ell(box, cfg.flag, cfg.p1, cfg.q1, cfg.p2, cfg.q2);
    if (std::abs(cfg.ell - want) > 1e-9 * extent)
      throw domain_error("grid_partition: split coordinate does not equalize cell areas");
  } else if (cfg.ell != 0.0) {
    throw domain_error("grid_partition: single grid requires ell = 0");
  }

  Partition part;
  part.box = box;
  part.grid = cfg;
  part.cells.reserve(static_cast<std::size_t>(cfg.cell_count()));

  auto emit_block = [&](const AxisRect& block, int cols, int rows) {
    if (cols * rows == 0) return;
    const double cw = block.w / cols, ch = block.h / rows;
    if (vertical) {
      for (int c = 0; c < cols; ++c) {
        Strip s;
        s.orientation = StripOrientation::column;
        s.extent = {block.x0 + c * cw, block.y0, cw, block.h};
        s.first = part.cells.size();
        s.count = s.original_count = static_cast<std::size_t>(rows);
        for (int r = 0; r < rows; ++r) part.cells.push_back(s.split_cell(r, s.count));
        part.strips.push_back(s);
      }
    } else {
      for (int r = 0; r < rows; ++r) {
        Strip s;
        s.orientation = StripOrientation::row;
        s.extent = {block.x0, block.y0 + r * ch, block.w, ch};
        s.first = part.cells.size();
        s.count = s.original_count = static_cast<std::size_t>(cols);
        for (int c = 0; c < cols; ++c) part.cells.push_back(s.split_cell(c, s.count));
        part.strips.push_back(s);
      }
    }
  };

  const double ell = second ? cfg.ell : 0.0;
  if (vertical) {
    emit_block({box.x0, box.y0, box.w - ell, box.h}, cfg.p1, cfg.q1);
    if (second) emit_block({box.x1() - ell, box.y0, ell, box.h}, cfg.p2, cfg.q2);
  } else {
    emit_block({box.x0, box.y0, box.w, box.h - ell}, cfg.p1, cfg.q1);
    if (second) emit_block({box.x0, box.y1() - ell, box.w, ell}, cfg.p2, cfg.q2);
  }
  return part;
}

inline Partition subdivide_partition(const AxisRect& box, int k) {
  return grid_partition(box, select_best_config(subdivide_configs(box, k)));
}

}  // namespace kmedian
