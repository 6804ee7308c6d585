#pragma once

// Reference computations for tests, written without the library's geometry:
// plain Monte Carlo integration, brute-force diameter, linear point location
// and brute-force nearest site.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

struct P {
  double x, y;
};

struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;
};

// \int_region f by uniform sampling of a bounding box with an indicator.
inline Estimate integrate(const std::function<bool(P)>& inside, const std::function<double(P)>& f,
                          double x0, double y0, double x1, double y1, std::int64_t n,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  const double box = (x1 - x0) * (y1 - y0);
  double s1 = 0.0, s2 = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const P p{ux(rng), uy(rng)};
    const double v = inside(p) ? f(p) * box : 0.0;
    s1 += v;
    s2 += v * v;
  }
  const double m = s1 / n;
  const double var = std::max(0.0, s2 / n - m * m);
  return {m, std::sqrt(var / n)};
}

inline double dist(P a, P b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Point in a counterclockwise convex ring by checking every edge.
inline bool in_convex(const std::vector<P>& ring, P q, double tol = 1e-12) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P a = ring[i], b = ring[(i + 1) % n];
    const double c = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
    if (c < -tol * (1.0 + std::hypot(b.x - a.x, b.y - a.y))) return false;
  }
  return true;
}

inline double shoelace(const std::vector<P>& ring) {
  double s = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const P a = ring[i], b = ring[(i + 1) % ring.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

inline double brute_diameter(const std::vector<P>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, dist(pts[i], pts[j]));
  return d;
}

inline std::size_t nearest(const std::vector<P>& sites, P q) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sites.size(); ++i)
    if (dist(sites[i], q) < dist(sites[best], q)) best = i;
  return best;
}

// FW of a convex ring about p by Monte Carlo over its bounding box.
inline Estimate fw_ring(const std::vector<P>& ring, P p, std::int64_t n, std::uint64_t seed) {
  double x0 = ring[0].x, x1 = x0, y0 = ring[0].y, y1 = y0;
  for (auto v : ring) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  return integrate([&](P q) { return in_convex(ring, q); }, [&](P q) { return dist(q, p); }, x0, y0, x1,
                   y1, n, seed);
}

// Midpoint rule for FW of a convex ring about p on a fine grid: a second,
// deterministic reference.
inline double fw_ring_grid(const std::vector<P>& ring, P p, int m) {
  double x0 = ring[0].x, x1 = x0, y0 = ring[0].y, y1 = y0;
  for (auto v : ring) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  const double dx = (x1 - x0) / m, dy = (y1 - y0) / m;
  double s = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const P q{x0 + (i + 0.5) * dx, y0 + (j + 0.5) * dy};
      if (in_convex(ring, q)) s += dist(q, p);
    }
  return s * dx * dy;
}

}  // namespace oracle
