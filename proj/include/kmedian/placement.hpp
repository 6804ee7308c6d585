#pragma once

// Turns an equal-area partition of the aligned box into k median points in
// the polygon. Cell centers inside the polygon are kept; cells that meet the
// polygon move their point to the center of the intersection's bounding box;
// cells that miss the polygon ("orphans") are handled by a strategy.

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "kmedian/geometry.hpp"
#include "kmedian/partition.hpp"

namespace kmedian {

enum class Provenance { kept, relocated, random, reinserted };

enum class PlacementStrategy { random, modified };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kept: return "kept";
    case Provenance::relocated: return "relocated";
    case Provenance::random: return "random";
    case Provenance::reinserted: return "reinserted";
  }
  return "?";
}

inline const char* to_string(PlacementStrategy s) {
  return s == PlacementStrategy::random ? "random" : "modified";
}

// Median points in box coordinates together with what produced them.
// `region` is the (possibly re-split) cell a point serves; random points
// have none.
struct Placement {
  std::vector<Point2> points;
  std::vector<Provenance> provenance;
  std::vector<std::optional<AxisRect>> region;
  std::vector<std::size_t> orphans;  // indices of partition cells missing the polygon
  std::size_t random_fallbacks = 0;  // orphans placed randomly under `modified`
};

// Uniform doubles in [0, 1) from a 64-bit engine; fixed across standard
// library implementations.
class UniformSource {
public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

// Uniform point in `poly` by rejection from its box `bounds` (the aligned
// box, so acceptance is at least one half).
inline Point2 random_point_in(const ConvexPolygon& poly, const AxisRect& bounds,
                              UniformSource& rng) {
  for (int tries = 0; tries < 100000; ++tries) {
    const Point2 q{bounds.x0 + rng.next() * bounds.w, bounds.y0 + rng.next() * bounds.h};
    if (contains(poly, q)) return q;
  }
  return poly.centroid();
}

namespace detail {

inline bool rect_inside(const ConvexPolygon& poly, const AxisRect& r) {
  for (auto c : r.corners())
    if (!contains(poly, c)) return false;
  return true;
}

// Kept / relocated points for every cell; orphans left empty.
inline Placement place_cells(const ConvexPolygon& local, const Partition& part) {
  Placement pl;
  const RectClipper clipper(local);
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    const AxisRect& cell = part.cells[i];
    const Point2 c = cell.center();
    if (contains(local, c)) {
      pl.points.push_back(c);
      pl.provenance.push_back(Provenance::kept);
      pl.region.push_back(cell);
      continue;
    }
    const auto piece = clipper.clip(cell);
    if (!piece) {
      pl.orphans.push_back(i);
      continue;
    }
    const auto v = piece->vertices();
    double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (auto p : v) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    Point2 q{0.5 * (xmin + xmax), 0.5 * (ymin + ymax)};
    // A thin intersection can put its box center outside the polygon.
    if (!contains(local, q)) q = piece->centroid();
    pl.points.push_back(q);
    pl.provenance.push_back(Provenance::relocated);
    pl.region.push_back(cell);
  }
  return pl;
}

}  // namespace detail

// Orphans go to the cells of a strip that lie fully inside the polygon.
// Each orphan picks the strip maximizing (CAR - NAR) * CNR / ONR, where CAR
// and NAR are the aspect ratios of those cells at the current and current + 1
// count, CNR the current count and ONR the count at partition time; the
// chosen run of cells is re-split into one more congruent cell. Cells outside
// a chosen run keep their points. Without an eligible strip, remaining
// orphans are placed at random.
inline Placement strip_reinsertion(const ConvexPolygon& local, const Partition& part,
                                   Placement base, std::uint64_t seed) {
  if (base.orphans.empty()) return base;

  // The fully inside cells of a strip form one contiguous run (the polygon
  // is convex); that run is the part of the strip that absorbs orphans.
  struct Candidate {
    Strip run;
    std::size_t current;
  };
  std::vector<Candidate> eligible;
  for (const Strip& st : part.strips) {
    std::size_t best_a = 0, best_n = 0;
    for (std::size_t j = 0; j < st.count;) {
      if (!detail::rect_inside(local, part.cells[st.first + j])) {
        ++j;
        continue;
      }
      std::size_t e = j;
      while (e < st.count && detail::rect_inside(local, part.cells[st.first + e])) ++e;
      if (e - j > best_n) {
        best_a = j;
        best_n = e - j;
      }
      j = e;
    }
    if (best_n == 0) continue;
    Strip run = st;
    const AxisRect lo = part.cells[st.first + best_a], hi = part.cells[st.first + best_a + best_n - 1];
    run.extent = {lo.x0, lo.y0, hi.x1() - lo.x0, hi.y1() - lo.y0};
    run.first = st.first + best_a;
    run.count = run.original_count = best_n;
    eligible.push_back({run, best_n});
  }

  UniformSource rng(seed);
  std::vector<Point2> extra;
  std::size_t fallbacks = 0;
  for (std::size_t o = 0; o < base.orphans.size(); ++o) {
    if (eligible.empty()) {
      extra.push_back(random_point_in(local, part.box, rng));
      ++fallbacks;
      continue;
    }
    std::size_t pick = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < eligible.size(); ++e) {
      const Strip& st = eligible[e].run;
      const std::size_t cnr = eligible[e].current;
      const double car = st.cell_aspect_ratio(cnr);
      const double nar = st.cell_aspect_ratio(cnr + 1);
      const double measure = (car - nar) * static_cast<double>(cnr) /
                             static_cast<double>(st.original_count);
      if (measure > best) {
        best = measure;
        pick = e;
      }
    }
    ++eligible[pick].current;
  }

  // First cell of a grown run -> 1 + its index in `eligible`.
  std::vector<std::size_t> grown(part.cells.size(), 0);
  for (std::size_t e = 0; e < eligible.size(); ++e)
    if (eligible[e].current != eligible[e].run.count) grown[eligible[e].run.first] = e + 1;

  std::vector<std::size_t> point_of_cell(part.cells.size(), SIZE_MAX);
  {
    std::size_t next = 0, orphan = 0;
    for (std::size_t i = 0; i < part.cells.size(); ++i) {
      if (orphan < base.orphans.size() && base.orphans[orphan] == i) {
        ++orphan;
        continue;
      }
      point_of_cell[i] = next++;
    }
  }

  Placement out;
  out.orphans = base.orphans;
  out.random_fallbacks = fallbacks;
  std::vector<bool> skip(part.cells.size(), false);
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    if (skip[i]) continue;
    if (grown[i] != 0) {
      const Strip& st = eligible[grown[i] - 1].run;
      const std::size_t n = eligible[grown[i] - 1].current;
      for (std::size_t j = 0; j < n; ++j) {
        const AxisRect r = st.split_cell(j, n);
        out.points.push_back(r.center());
        out.provenance.push_back(Provenance::reinserted);
        out.region.push_back(r);
      }
      for (std::size_t j = 0; j < st.count; ++j) skip[st.first + j] = true;
      continue;
    }
    const std::size_t pi = point_of_cell[i];
    if (pi == SIZE_MAX) continue;
    out.points.push_back(base.points[pi]);
    out.provenance.push_back(base.provenance[pi]);
    out.region.push_back(base.region[pi]);
  }
  for (auto q : extra) {
    out.points.push_back(q);
    out.provenance.push_back(Provenance::random);
    out.region.push_back(std::nullopt);
  }
  return out;
}

// Places one median per partition cell, in box coordinates.
inline Placement place_medians(const ConvexPolygon& local, const Partition& part,
                               PlacementStrategy strategy, std::uint64_t seed) {
  Placement pl = detail::place_cells(local, part);
  if (pl.orphans.empty()) return pl;
  if (strategy == PlacementStrategy::modified)
    return strip_reinsertion(local, part, std::move(pl), seed);
  UniformSource rng(seed);
  for (std::size_t o = 0; o < pl.orphans.size(); ++o) {
    pl.points.push_back(random_point_in(local, part.box, rng));
    pl.provenance.push_back(Provenance::random);
    pl.region.push_back(std::nullopt);
  }
  return pl;
}

}  // namespace kmedian
