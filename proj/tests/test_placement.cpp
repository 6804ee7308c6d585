#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "kmedian/placement.hpp"
#include "kmedian/random_polygon.hpp"
#include "kmedian/solver.hpp"

using namespace kmedian;

TEST(Placement, BoxKeepsEveryCenter) {
  // The polygon equals the partitioned box. (A rectangle's own aligned box
  // is larger: its diameter is the diagonal.)
  const ConvexPolygon box({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  for (const auto& part : {squarified_partition({0, 0, 2, 1}, 9), subdivide_partition({0, 0, 2, 1}, 9)}) {
    const auto pl = place_medians(box, part, PlacementStrategy::random, 1);
    ASSERT_EQ(pl.points.size(), 9u);
    for (auto p : pl.provenance) EXPECT_EQ(p, Provenance::kept);
    EXPECT_TRUE(pl.orphans.empty());
  }
}

TEST(Placement, TriangleTwoByTwo) {
  // 2 x 2 grid over [0,1]^2 with the triangle x + y <= 0.9: the lower-left
  // center is kept, the two side cells are relocated and the top-right cell
  // misses the triangle.
  const ConvexPolygon tri({{0, 0}, {0.9, 0}, {0, 0.9}});
  const auto part = subdivide_partition({0, 0, 1, 1}, 4);
  const auto pl = place_medians(tri, part, PlacementStrategy::random, 3);
  ASSERT_EQ(pl.points.size(), 4u);
  ASSERT_EQ(pl.orphans.size(), 1u);
  const auto& orphan = part.cells[pl.orphans[0]];
  EXPECT_NEAR(orphan.x0, 0.5, 1e-12);
  EXPECT_NEAR(orphan.y0, 0.5, 1e-12);
  EXPECT_EQ(std::count(pl.provenance.begin(), pl.provenance.end(), Provenance::kept), 1);
  EXPECT_EQ(std::count(pl.provenance.begin(), pl.provenance.end(), Provenance::relocated), 2);
  EXPECT_EQ(std::count(pl.provenance.begin(), pl.provenance.end(), Provenance::random), 1);
  for (auto p : pl.points) EXPECT_TRUE(contains(tri, p));
  // The lower-right piece is the triangle (0.5,0),(0.9,0),(0.5,0.4): its box
  // center (0.7, 0.2) sits on the hypotenuse, else the centroid is used.
  for (std::size_t i = 0; i < pl.points.size(); ++i)
    if (pl.provenance[i] == Provenance::relocated && pl.region[i]->x0 > 0.25) {
      const Point2 q = pl.points[i];
      const bool box_center = std::abs(q.x - 0.7) < 1e-12 && std::abs(q.y - 0.2) < 1e-12;
      const bool centroid = std::abs(q.x - 1.9 / 3) < 1e-12 && std::abs(q.y - 0.4 / 3) < 1e-12;
      EXPECT_TRUE(box_center || centroid) << q.x << " " << q.y;
    }
}

TEST(Placement, ReinsertionWithoutEligibleStripFallsBack) {
  // No column of the same grid lies fully inside the triangle.
  const ConvexPolygon tri({{0, 0}, {0.9, 0}, {0, 0.9}});
  const auto part = subdivide_partition({0, 0, 1, 1}, 4);
  const auto pl = place_medians(tri, part, PlacementStrategy::modified, 3);
  EXPECT_EQ(pl.random_fallbacks, 1u);
  ASSERT_EQ(pl.points.size(), 4u);
  EXPECT_EQ(pl.provenance.back(), Provenance::random);
}

TEST(Placement, ReinsertionMeasureHandTrace) {
  // Strip 0: 3 cells of 1 x 1/3 fully inside; strip 1 holds one orphan.
  // Measure for strip 0: (AR(3) - AR(4)) * 3 / 3 = -1; it is the only
  // eligible strip, so it is re-split into 4 cells.
  const ConvexPolygon poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  Partition part;
  part.box = {0, 0, 2, 1};
  Strip a{StripOrientation::column, {0, 0, 1, 1}, 0, 3, 3};
  Strip b{StripOrientation::column, {1.5, 0, 0.5, 1}, 3, 1, 1};
  for (std::size_t j = 0; j < 3; ++j) part.cells.push_back(a.split_cell(j, 3));
  part.cells.push_back(b.split_cell(0, 1));
  part.strips = {a, b};

  const auto pl = place_medians(poly, part, PlacementStrategy::modified, 1);
  ASSERT_EQ(pl.points.size(), 4u);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(pl.provenance[j], Provenance::reinserted);
    EXPECT_NEAR(pl.points[j].x, 0.5, 1e-15);
    EXPECT_NEAR(pl.points[j].y, (j + 0.5) / 4.0, 1e-15);
  }
}

TEST(Placement, ReinsertionPrefersLargerMeasure) {
  // Strip a: one 1 x 1 cell, AR 1 -> 2, measure -1.
  // Strip b: one 1 x 2 cell, AR 2 -> 1, measure +1. Strip c is the orphan.
  const ConvexPolygon poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  Partition part;
  part.box = {0, 0, 4, 2};
  Strip a{StripOrientation::column, {0, 0, 1, 1}, 0, 1, 1};
  Strip b{StripOrientation::column, {1, 0, 1, 2}, 1, 1, 1};
  Strip c{StripOrientation::column, {3.5, 1.5, 0.5, 0.5}, 2, 1, 1};
  part.cells = {a.split_cell(0, 1), b.split_cell(0, 1), c.split_cell(0, 1)};
  part.strips = {a, b, c};
  const auto pl = place_medians(poly, part, PlacementStrategy::modified, 1);
  ASSERT_EQ(pl.points.size(), 3u);
  EXPECT_EQ(pl.provenance[0], Provenance::kept);
  for (std::size_t i = 1; i < 3; ++i) {
    EXPECT_EQ(pl.provenance[i], Provenance::reinserted);
    EXPECT_NEAR(pl.points[i].x, 1.5, 1e-15);
  }
  EXPECT_NEAR(pl.points[1].y, 0.5, 1e-15);
  EXPECT_NEAR(pl.points[2].y, 1.5, 1e-15);
}

TEST(Placement, AllPointsInsideAndDeterministic) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const auto C = random_convex_polygon(6 + static_cast<int>(s % 30), 500 + s);
    for (auto alg : {Algorithm::construct, Algorithm::subdivide})
      for (auto st : {PlacementStrategy::random, PlacementStrategy::modified}) {
        const int k = 3 + static_cast<int>(s % 50);
        const auto a = solve(C, k, alg, st, s);
        const auto b = solve(C, k, alg, st, s);
        ASSERT_EQ(a.points.size(), static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < a.points.size(); ++i) {
          EXPECT_TRUE(contains(a.frame.local, a.placement.points[i]));
          EXPECT_EQ(a.points[i], b.points[i]);
        }
      }
  }
}

TEST(Placement, ZeroOrphansMatchesBetweenStrategies) {
  const ConvexPolygon box({{0, 0}, {3, 0}, {3, 1}, {0, 1}});
  const auto a = solve(box, 11, Algorithm::construct, PlacementStrategy::random, 1);
  const auto b = solve(box, 11, Algorithm::construct, PlacementStrategy::modified, 1);
  EXPECT_EQ(a.points, b.points);
}

TEST(Placement, UntouchedStripsKeepTheirCells) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto C = random_convex_polygon(12, 900 + s);
    const auto r = solve(C, 40, Algorithm::construct, PlacementStrategy::random, 1);
    const auto m = solve(C, 40, Algorithm::construct, PlacementStrategy::modified, 1);
    std::size_t kept_r = 0, kept_m = 0;
    for (auto p : r.provenance) kept_r += p != Provenance::random;
    for (auto p : m.provenance) kept_m += p == Provenance::kept || p == Provenance::relocated;
    EXPECT_LE(kept_m, kept_r);
    // Every kept/relocated point of the modified run also appears in the random run.
    for (std::size_t i = 0; i < m.points.size(); ++i)
      if (m.provenance[i] == Provenance::kept || m.provenance[i] == Provenance::relocated)
        EXPECT_NE(std::find(r.points.begin(), r.points.end(), m.points[i]), r.points.end());
  }
}
