#pragma once

// Closed-form Fermat-Weber integrals  FW(S, p) = \iint_S |x - p| dA  for the
// shapes the bounds are built from, and an exact evaluator for convex
// polygons composed from right triangles.

#include <cmath>
#include <numbers>

#include "kmedian/error.hpp"
#include "kmedian/geometry.hpp"

namespace kmedian {

enum class Norm { L1, L2, Linf };

// FW of a w x h rectangle about its center.
inline double fw_rect(double w, double h, Norm norm = Norm::L2) {
  if (!(w > 0.0) || !(h > 0.0)) throw domain_error("fw_rect: dimensions must be positive");
  switch (norm) {
    case Norm::L1:
      return 0.25 * (w * w * h + w * h * h);
    case Norm::Linf: {
      if (w < h) std::swap(w, h);
      // The |y| > |x| corners add h^3/12 to the slab term w^2 h / 4.
      return 0.25 * w * w * h + h * h * h / 12.0;
    }
    case Norm::L2:
    default: {
      const double d = std::hypot(w, h);
      return h * w * d / 6.0 + w * w * w / 12.0 * std::log((d + h) / w) +
             h * h * h / 12.0 * std::log((d + w) / h);
    }
  }
}

inline double fw_half_rect(double w, double h) { return 0.5 * fw_rect(w, h, Norm::L2); }

inline double fw_disk(double r) {
  if (!(r > 0.0)) throw domain_error("fw_disk: radius must be positive");
  return 2.0 * std::numbers::pi * r * r * r / 3.0;
}

// Sector of angle theta about the disk center.
inline double fw_sector(double r, double theta) {
  if (!(r > 0.0)) throw domain_error("fw_sector: radius must be positive");
  if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi))
    throw domain_error("fw_sector: angle outside [0, 2pi]");
  return theta / 3.0 * r * r * r;
}

// Right triangle with the right angle at C, evaluated about vertex B.
// `a` = |BC| (the leg at B), `b` = |CA|.
inline double fw_right_triangle(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) throw domain_error("fw_right_triangle: negative leg");
  if (a == 0.0 || b == 0.0) return 0.0;
  const double c = std::hypot(a, b);
  // a^3 log((c+b)/a) == a^3 asinh(b/a); the asinh form stays finite as a -> 0.
  const double log_term = a < 1e-300 ? 0.0 : a * a * a * std::asinh(b / a);
  return (a * b * c + log_term) / 6.0;
}

namespace detail {

// FW about p of the right triangle spanned by p, the foot F of the
// perpendicular (at distance d) and the point at signed offset t from F.
// Odd in t.
inline double foot_primitive(double d, double t) {
  return t < 0.0 ? -fw_right_triangle(d, -t) : fw_right_triangle(d, t);
}

// Signed contribution of the fan triangle (p, u, v).
inline double fan_triangle_fw(Point2 p, Point2 u, Point2 v) {
  const Point2 e = v - u;
  const double len = norm(e);
  if (len == 0.0) return 0.0;
  const Point2 dir = (1.0 / len) * e;
  const double s = cross(u - p, v - p) / len;
  const double d = std::abs(s);
  if (d == 0.0) return 0.0;
  const double tu = dot(u - p, dir);
  const double tv = dot(v - p, dir);
  const double val = foot_primitive(d, tv) - foot_primitive(d, tu);
  return s > 0.0 ? val : -val;
}

}  // namespace detail

// Exact FW(poly, p). The polygon is fanned about p; each fan triangle is
// split at the foot of the perpendicular from p into two right triangles.
// Orientation signs make this valid for p outside the polygon as well.
inline double fw_polygon_at(const ConvexPolygon& poly, Point2 p) {
  if (!is_finite(p)) throw domain_error("fw_polygon_at: point is not finite");
  const auto v = poly.vertices();
  const std::size_t n = v.size();
  // Neumaier summation; fan terms can be of mixed sign for exterior p.
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = detail::fan_triangle_fw(p, v[i], v[(i + 1) % n]);
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace kmedian
