#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "kmedian/error.hpp"
#include "kmedian/geometry.hpp"
#include "kmedian/placement.hpp"

namespace kmedian {

namespace detail {

template <class T>
void shuffle(std::vector<T>& v, UniformSource& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next() * static_cast<double>(i));
    std::swap(v[i - 1], v[std::min(j, i - 1)]);
  }
}

// Splits sorted coordinates into the edge components of two monotone chains
// between the minimum and the maximum.
inline std::vector<double> chain_components(std::vector<double> c, UniformSource& rng) {
  std::sort(c.begin(), c.end());
  const double lo = c.front(), hi = c.back();
  std::vector<double> out;
  double last1 = lo, last2 = lo;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (rng.next() < 0.5) {
      out.push_back(c[i] - last1);
      last1 = c[i];
    } else {
      out.push_back(last2 - c[i]);
      last2 = c[i];
    }
  }
  out.push_back(hi - last1);
  out.push_back(last2 - hi);
  return out;
}

}  // namespace detail

// Valtr's random convex polygon with n vertices, scaled to unit diameter and
// translated so its centroid is the origin. Equal edge directions may merge
// into collinear vertices, which ConvexPolygon accepts.
inline ConvexPolygon random_convex_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw domain_error("random_convex_polygon: n must be >= 3");
  UniformSource rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    for (auto& x : xs) x = rng.next();
    for (auto& y : ys) y = rng.next();
    const auto dx = detail::chain_components(xs, rng);
    auto dy = detail::chain_components(ys, rng);
    detail::shuffle(dy, rng);

    std::vector<Point2> edges(dx.size());
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = {dx[i], dy[i]};
    std::sort(edges.begin(), edges.end(),
              [](Point2 a, Point2 b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });

    std::vector<Point2> pts;
    Point2 p{0.0, 0.0};
    for (auto e : edges) {
      pts.push_back(p);
      p = p + e;
    }
    try {
      ConvexPolygon poly(std::move(pts));
      const double d = diameter(poly).length;
      poly = poly.scaled(1.0 / d);
      const Point2 c = poly.centroid();
      return poly.translated({-c.x, -c.y});
    } catch (const degenerate_geometry&) {
      // All points nearly collinear; draw again.
    }
  }
  throw numeric_failure("random_convex_polygon: could not draw a nondegenerate polygon");
}

}  // namespace kmedian
