#pragma once

// End-to-end k-median heuristics: align C with its diameter, partition the
// box into k equal-area cells and place one median per cell.

#include <cstdint>
#include <vector>

#include "kmedian/bounds.hpp"
#include "kmedian/fermat_weber.hpp"
#include "kmedian/geometry.hpp"
#include "kmedian/objective.hpp"
#include "kmedian/partition.hpp"
#include "kmedian/placement.hpp"

namespace kmedian {

// construct: squarified strips; subdivide: best two-block grid.
enum class Algorithm { construct, subdivide };

inline const char* to_string(Algorithm a) {
  return a == Algorithm::construct ? "construct" : "subdivide";
}

inline Partition make_partition(const AxisRect& box, int k, Algorithm alg) {
  return alg == Algorithm::construct ? squarified_partition(box, k) : subdivide_partition(box, k);
}

struct MedianSolution {
  std::vector<Point2> points;  // world frame
  std::vector<Provenance> provenance;
  AlignedPolygon frame;  // box and C in box coordinates
  Partition partition;   // box coordinates
  Placement placement;   // box coordinates
  Algorithm algorithm = Algorithm::construct;
  PlacementStrategy strategy = PlacementStrategy::random;
  std::uint64_t seed = 0;

  std::size_t orphan_count() const { return placement.orphans.size(); }
};

inline MedianSolution solve(const ConvexPolygon& C, int k, Algorithm alg,
                            PlacementStrategy strategy, std::uint64_t seed) {
  if (k < 1) throw domain_error("solve: k must be >= 1");
  AlignedPolygon frame = diameter_aligned_box(C);
  Partition part = make_partition(frame.box.rect(), k, alg);
  Placement pl = place_medians(frame.local, part, strategy, seed);
  std::vector<Point2> world;
  world.reserve(pl.points.size());
  for (auto p : pl.points) world.push_back(frame.box.to_world(p));
  MedianSolution s{std::move(world), pl.provenance, std::move(frame), std::move(part), std::move(pl),
                   alg, strategy, seed};
  return s;
}

// Largest cell aspect ratio of a partition.
inline double max_cell_aspect_ratio(const Partition& part) {
  return partition_aspect_stats(part).max_ar;
}

// Sum over placement regions of FW(C intersect region, p). The regions tile
// C, so this bounds the objective from above.
inline double assigned_cell_sum(const ConvexPolygon& local, const Placement& pl) {
  const RectClipper clipper(local);
  detail::CompensatedSum s;
  for (std::size_t i = 0; i < pl.points.size(); ++i) {
    if (!pl.region[i]) continue;
    if (auto piece = clipper.clip(*pl.region[i])) s.add(fw_polygon_at(*piece, pl.points[i]));
  }
  return s.value();
}

// The same sum with every median at its raw cell center, before relocation.
inline double raw_center_sum(const ConvexPolygon& local, const Partition& part) {
  const RectClipper clipper(local);
  detail::CompensatedSum s;
  for (const auto& cell : part.cells)
    if (auto piece = clipper.clip(cell)) s.add(fw_polygon_at(*piece, cell.center()));
  return s.value();
}

}  // namespace kmedian
