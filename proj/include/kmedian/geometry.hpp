#pragma once

// Planar primitives for convex client regions: points, axis rectangles,
// convex polygons, hull, diameter, diameter-aligned bounding box, clipping
// and point location.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kmedian/error.hpp"

namespace kmedian {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

// Lexicographic (x, then y) order.
inline bool lex_less(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Relative tolerance applied to cross products, scaled by the operand lengths.
inline constexpr double kCrossTol = 1e-12;

inline double aspect_ratio(double w, double h) { return w >= h ? w / h : h / w; }

struct AxisRect {
  double x0 = 0.0;
  double y0 = 0.0;
  double w = 0.0;
  double h = 0.0;

  double x1() const { return x0 + w; }
  double y1() const { return y0 + h; }
  double area() const { return w * h; }
  Point2 center() const { return {x0 + 0.5 * w, y0 + 0.5 * h}; }
  double aspect_ratio() const { return kmedian::aspect_ratio(w, h); }

  // Counterclockwise from the lower-left corner.
  std::vector<Point2> corners() const {
    return {{x0, y0}, {x1(), y0}, {x1(), y1()}, {x0, y1()}};
  }
};

namespace detail {

inline double signed_area(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return 0.0;
  // Shoelace about the first vertex keeps the sum well conditioned for
  // rings far from the origin.
  const Point2 o = ring[0];
  double s = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) s += cross(ring[i] - o, ring[i + 1] - o);
  return 0.5 * s;
}

inline Point2 ring_centroid(std::span<const Point2> ring) {
  const Point2 o = ring[0];
  double a = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
    const Point2 p = ring[i] - o, q = ring[i + 1] - o;
    const double c = cross(p, q);
    a += c;
    cx += c * (p.x + q.x);
    cy += c * (p.y + q.y);
  }
  if (a == 0.0) {
    Point2 m{};
    for (auto v : ring) m = m + v;
    return (1.0 / static_cast<double>(ring.size())) * m;
  }
  return {o.x + cx / (3.0 * a), o.y + cy / (3.0 * a)};
}

inline double ring_scale(std::span<const Point2> ring) {
  double xmin = ring[0].x, xmax = ring[0].x, ymin = ring[0].y, ymax = ring[0].y;
  for (auto p : ring) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

// Keeps the part of a convex ring where a*x + b*y <= c (Sutherland-Hodgman,
// one plane).
inline std::vector<Point2> clip_halfplane(std::span<const Point2> ring, double a, double b,
                                          double c) {
  std::vector<Point2> out;
  const std::size_t n = ring.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = ring[i];
    const Point2 q = ring[(i + 1) % n];
    const double fp = a * p.x + b * p.y - c;
    const double fq = a * q.x + b * q.y - c;
    if (fp <= 0.0) out.push_back(p);
    if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
      const double t = fp / (fp - fq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

inline std::vector<Point2> clip_ring_to_rect(std::span<const Point2> ring, const AxisRect& r) {
  auto a = clip_halfplane(ring, -1.0, 0.0, -r.x0);
  a = clip_halfplane(a, 1.0, 0.0, r.x1());
  a = clip_halfplane(a, 0.0, -1.0, -r.y0);
  a = clip_halfplane(a, 0.0, 1.0, r.y1());
  return a;
}

}  // namespace detail

// A convex region given by its vertices in counterclockwise order.
//
// Construction drops repeated consecutive vertices, reverses clockwise input
// and rejects non-convex, collinear or non-finite input. Collinear vertices
// along an edge are allowed.
class ConvexPolygon {
public:
  explicit ConvexPolygon(std::vector<Point2> vertices) : v_(std::move(vertices)) {
    for (auto p : v_)
      if (!is_finite(p)) throw domain_error("polygon vertex is not finite");
    dedup();
    if (v_.size() < 3) throw degenerate_geometry("polygon needs at least 3 distinct vertices");
    area_ = detail::signed_area(v_);
    if (area_ < 0.0) {
      std::reverse(v_.begin(), v_.end());
      area_ = -area_;
    }
    const double scale = detail::ring_scale(v_);
    if (!(area_ > 1e-14 * scale * scale)) throw degenerate_geometry("polygon has zero area");
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 e0 = v_[(i + 1) % n] - v_[i];
      const Point2 e1 = v_[(i + 2) % n] - v_[(i + 1) % n];
      if (cross(e0, e1) < -kCrossTol * norm(e0) * norm(e1) * 1e3)
        throw domain_error("polygon is not convex");
    }
  }

  // Skips the convexity audit; for rings produced by clipping a convex
  // polygon. Returns nullopt when the ring has no area.
  static std::optional<ConvexPolygon> from_clipped(std::vector<Point2> ring,
                                                   double min_area = 0.0) {
    if (ring.size() < 3) return std::nullopt;
    const double a = detail::signed_area(ring);
    if (!(a > min_area)) return std::nullopt;
    ConvexPolygon p;
    p.v_ = std::move(ring);
    p.dedup();
    if (p.v_.size() < 3) return std::nullopt;
    p.area_ = a;
    return p;
  }

  std::span<const Point2> vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const Point2& operator[](std::size_t i) const { return v_[i]; }
  double area() const { return area_; }
  Point2 centroid() const { return detail::ring_centroid(v_); }

  ConvexPolygon translated(Point2 t) const {
    ConvexPolygon p = *this;
    for (auto& v : p.v_) v = v + t;
    return p;
  }

  ConvexPolygon scaled(double s) const {
    ConvexPolygon p = *this;
    for (auto& v : p.v_) v = s * v;
    p.area_ *= s * s;
    return p;
  }

  // Rotation by `angle` radians about `pivot`.
  ConvexPolygon rotated(double angle, Point2 pivot = {}) const {
    ConvexPolygon p = *this;
    const double c = std::cos(angle), s = std::sin(angle);
    for (auto& v : p.v_) {
      const Point2 d = v - pivot;
      v = pivot + Point2{c * d.x - s * d.y, s * d.x + c * d.y};
    }
    return p;
  }

private:
  ConvexPolygon() = default;

  void dedup() {
    std::vector<Point2> out;
    out.reserve(v_.size());
    for (auto p : v_)
      if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    v_ = std::move(out);
  }

  std::vector<Point2> v_;
  double area_ = 0.0;
};

inline double area(const ConvexPolygon& poly) { return poly.area(); }
inline Point2 centroid(const ConvexPolygon& poly) { return poly.centroid(); }

inline Point2 rotate(Point2 p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Andrew's monotone chain. Collinear boundary points are dropped.
inline ConvexPolygon convex_hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  for (auto p : pts)
    if (!is_finite(p)) throw domain_error("hull input point is not finite");
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw degenerate_geometry("hull needs at least 3 distinct points");

  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  auto turn = [](Point2 o, Point2 a, Point2 b) { return cross(a - o, b - o); };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw degenerate_geometry("all hull input points are collinear");
  return ConvexPolygon(std::move(hull));
}

struct Diameter {
  Point2 a;  // lexicographically smaller endpoint
  Point2 b;
  double length = 0.0;
};

// Farthest vertex pair by rotating calipers. Ties (within 1e-12 relative)
// resolve to the lexicographically smallest (a, b) pair.
inline Diameter diameter(const ConvexPolygon& poly) {
  const ConvexPolygon hull = convex_hull(poly.vertices());
  const auto h = hull.vertices();
  const std::size_t m = h.size();

  Diameter best{};
  bool have = false;
  auto consider = [&](Point2 p, Point2 q) {
    if (lex_less(q, p)) std::swap(p, q);
    const double d = distance(p, q);
    if (!have || d > best.length * (1.0 + 1e-12)) {
      best = {p, q, d};
      have = true;
    } else if (d >= best.length * (1.0 - 1e-12)) {
      const bool smaller = lex_less(p, best.a) || (p == best.a && lex_less(q, best.b));
      if (smaller) best = {p, q, std::max(d, best.length)};
    }
  };
  auto area2 = [&](std::size_t i, std::size_t j, std::size_t l) {
    return std::abs(cross(h[j] - h[i], h[l] - h[i]));
  };

  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ni = (i + 1) % m;
    while (area2(i, ni, (j + 1) % m) > area2(i, ni, j)) j = (j + 1) % m;
    consider(h[i], h[j]);
    consider(h[ni], h[j]);
    const std::size_t nj = (j + 1) % m;
    const double a0 = area2(i, ni, j), a1 = area2(i, ni, nj);
    if (std::abs(a1 - a0) <= 1e-12 * std::max(a0, a1)) {
      consider(h[i], h[nj]);
      consider(h[ni], h[nj]);
    }
  }
  return best;
}

// Rigid frame in which the polygon's diameter lies along +x and its bounding
// box is [0, w] x [0, h]. Since w is the diameter, w >= h.
struct OrientedBox {
  double w = 0.0;
  double h = 0.0;
  double rotation = 0.0;  // world -> box frame rotation (radians)
  Point2 origin;          // box lower-left corner in world coordinates

  Point2 to_box(Point2 p) const { return rotate(p - origin, rotation); }
  Point2 to_world(Point2 p) const { return origin + rotate(p, -rotation); }
  AxisRect rect() const { return {0.0, 0.0, w, h}; }
  double aspect_ratio() const { return kmedian::aspect_ratio(w, h); }
};

struct AlignedPolygon {
  OrientedBox box;
  ConvexPolygon local;  // the polygon in box coordinates
};

inline AlignedPolygon diameter_aligned_box(const ConvexPolygon& poly) {
  const Diameter d = diameter(poly);
  const Point2 dir = d.b - d.a;
  const double theta = -std::atan2(dir.y, dir.x);

  std::vector<Point2> rot;
  rot.reserve(poly.size());
  for (auto p : poly.vertices()) rot.push_back(rotate(p, theta));
  double xmin = rot[0].x, xmax = rot[0].x, ymin = rot[0].y, ymax = rot[0].y;
  for (auto p : rot) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  for (auto& p : rot) p = p - Point2{xmin, ymin};

  OrientedBox box;
  box.w = xmax - xmin;
  box.h = ymax - ymin;
  box.rotation = theta;
  box.origin = rotate({xmin, ymin}, -theta);
  auto local = ConvexPolygon::from_clipped(std::move(rot));
  if (!local) throw degenerate_geometry("polygon collapsed under rotation");
  return {box, std::move(*local)};
}

// Point location in O(log n) by binary search over the fan from vertex 0.
// Boundary points (within the cross-product tolerance) count as inside.
inline bool contains(const ConvexPolygon& poly, Point2 p) {
  const auto v = poly.vertices();
  const std::size_t n = v.size();
  const Point2 o = v[0];
  auto left_of = [&](Point2 a, Point2 b, Point2 q) {
    const Point2 e = b - a, d = q - a;
    return cross(e, d) >= -kCrossTol * norm(e) * norm(d);
  };
  if (!left_of(o, v[1], p)) return false;
  if (!left_of(v[n - 1], o, p)) return false;
  // Largest i in [1, n-2] with p left of (or on) the ray o -> v[i].
  std::size_t lo = 1, hi = n - 2;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (cross(v[mid] - o, p - o) >= 0.0)
      lo = mid;
    else
      hi = mid - 1;
  }
  return left_of(v[lo], v[lo + 1], p);
}

// Sutherland-Hodgman intersection. Zero-area intersections (touching at a
// vertex or along an edge) are reported as empty.
inline std::optional<ConvexPolygon> clip_to_rect(const ConvexPolygon& poly, const AxisRect& rect) {
  auto ring = detail::clip_ring_to_rect(poly.vertices(), rect);
  return ConvexPolygon::from_clipped(std::move(ring), 1e-13 * rect.area());
}

// Repeated rectangle clipping against one polygon in O(log n + m) per query,
// where m is the number of polygon vertices inside the query's x-range.
// Splits the boundary into lower and upper x-monotone chains once.
class RectClipper {
public:
  explicit RectClipper(const ConvexPolygon& poly) {
    const auto v = poly.vertices();
    const std::size_t n = v.size();
    std::size_t left = 0, right = 0, left_hi = 0, right_hi = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (v[i].x < v[left].x || (v[i].x == v[left].x && v[i].y < v[left].y)) left = i;
      if (v[i].x > v[right].x || (v[i].x == v[right].x && v[i].y < v[right].y)) right = i;
      if (v[i].x < v[left_hi].x || (v[i].x == v[left_hi].x && v[i].y > v[left_hi].y))
        left_hi = i;
      if (v[i].x > v[right_hi].x || (v[i].x == v[right_hi].x && v[i].y > v[right_hi].y))
        right_hi = i;
    }
    for (std::size_t i = left;; i = (i + 1) % n) {
      lower_.push_back(v[i]);
      if (i == right) break;
    }
    for (std::size_t i = right_hi;; i = (i + 1) % n) {
      upper_.push_back(v[i]);
      if (i == left_hi) break;
    }
    std::reverse(upper_.begin(), upper_.end());
    xmin_ = v[left].x;
    xmax_ = v[right].x;
  }

  std::optional<ConvexPolygon> clip(const AxisRect& rect) const {
    const double lo = std::max(rect.x0, xmin_);
    const double hi = std::min(rect.x1(), xmax_);
    if (!(hi > lo)) return std::nullopt;
    std::vector<Point2> ring;
    ring.push_back({lo, eval(lower_, lo)});
    append_interior(lower_, lo, hi, ring, false);
    ring.push_back({hi, eval(lower_, hi)});
    ring.push_back({hi, eval(upper_, hi)});
    append_interior(upper_, lo, hi, ring, true);
    ring.push_back({lo, eval(upper_, lo)});
    ring = detail::clip_halfplane(ring, 0.0, -1.0, -rect.y0);
    ring = detail::clip_halfplane(ring, 0.0, 1.0, rect.y1());
    return ConvexPolygon::from_clipped(std::move(ring), 1e-13 * rect.area());
  }

private:
  // Chain y at x; chains are sorted by nondecreasing x.
  static double eval(const std::vector<Point2>& chain, double x) {
    auto it = std::lower_bound(chain.begin(), chain.end(), x,
                               [](Point2 p, double xv) { return p.x < xv; });
    if (it == chain.end()) return chain.back().y;
    if (it->x == x || it == chain.begin()) return it->y;
    const Point2 b = *it, a = *(it - 1);
    const double t = (x - a.x) / (b.x - a.x);
    return a.y + t * (b.y - a.y);
  }

  static void append_interior(const std::vector<Point2>& chain, double lo, double hi,
                              std::vector<Point2>& out, bool reversed) {
    auto first = std::upper_bound(chain.begin(), chain.end(), lo,
                                  [](double xv, Point2 p) { return xv < p.x; });
    auto last = std::lower_bound(chain.begin(), chain.end(), hi,
                                 [](Point2 p, double xv) { return p.x < xv; });
    if (first >= last) return;
    if (reversed)
      for (auto it = last; it != first;) out.push_back(*--it);
    else
      out.insert(out.end(), first, last);
  }

  std::vector<Point2> lower_;
  std::vector<Point2> upper_;
  double xmin_ = 0.0;
  double xmax_ = 0.0;
};

}  // namespace kmedian
