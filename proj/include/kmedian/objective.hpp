#pragma once

// Evaluation of FW(C, k) = \iint_C min_i |x - p_i| dA for a fixed point set,
// exactly (Voronoi cells + fan integrals) or by Monte Carlo, and a 1-median
// solver.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "kmedian/error.hpp"
#include "kmedian/fermat_weber.hpp"
#include "kmedian/geometry.hpp"
#include "kmedian/placement.hpp"

namespace kmedian {

namespace detail {

// Neumaier compensated sum.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline void require_distinct(std::span<const Point2> points) {
  std::vector<Point2> s(points.begin(), points.end());
  std::sort(s.begin(), s.end(), lex_less);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) throw domain_error("duplicate median points");
}

}  // namespace detail

struct VoronoiCell {
  Point2 site;
  std::optional<ConvexPolygon> cell;  // empty when the site owns no area of C
  double area() const { return cell ? cell->area() : 0.0; }
};

// Voronoi region of each site intersected with C. Each site clips C by the
// bisectors of the other sites in order of distance, stopping once the
// nearest remaining site is more than twice the cell's radius away.
inline std::vector<VoronoiCell> voronoi_clip(const ConvexPolygon& C,
                                             std::span<const Point2> points) {
  if (points.empty()) throw domain_error("voronoi_clip: no points");
  for (auto p : points)
    if (!is_finite(p)) throw domain_error("voronoi_clip: point is not finite");
  detail::require_distinct(points);

  const std::size_t k = points.size();
  std::vector<VoronoiCell> out;
  out.reserve(k);
  std::vector<std::size_t> order(k);
  std::vector<double> d2(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Point2 pi = points[i];
    for (std::size_t j = 0; j < k; ++j) d2[j] = dot(points[j] - pi, points[j] - pi);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return d2[a] != d2[b] ? d2[a] < d2[b] : a < b;
    });

    std::vector<Point2> ring(C.vertices().begin(), C.vertices().end());
    auto radius2 = [&] {
      double r = 0.0;
      for (auto v : ring) r = std::max(r, dot(v - pi, v - pi));
      return r;
    };
    double r2 = radius2();
    for (std::size_t j : order) {
      if (j == i) continue;
      if (d2[j] > 4.0 * r2) break;
      const Point2 pj = points[j];
      const Point2 n = pj - pi;
      ring = detail::clip_halfplane(ring, 2.0 * n.x, 2.0 * n.y, dot(pj, pj) - dot(pi, pi));
      if (ring.size() < 3) break;
      r2 = radius2();
    }
    out.push_back({pi, ConvexPolygon::from_clipped(std::move(ring))});
  }
  return out;
}

enum class EvalMethod { exact, monte_carlo };

struct CellTerm {
  Point2 site;
  double area = 0.0;
  double fw = 0.0;
};

struct Objective {
  double value = 0.0;
  std::vector<CellTerm> per_cell;
  EvalMethod method = EvalMethod::exact;
  double stderr_ = 0.0;  // Monte Carlo only
};

inline Objective evaluate_exact(const ConvexPolygon& C, std::span<const Point2> points) {
  Objective obj;
  obj.method = EvalMethod::exact;
  detail::CompensatedSum total;
  for (const auto& vc : voronoi_clip(C, points)) {
    CellTerm t{vc.site, vc.area(), 0.0};
    if (vc.cell) t.fw = fw_polygon_at(*vc.cell, vc.site);
    total.add(t.fw);
    obj.per_cell.push_back(t);
  }
  obj.value = total.value();
  return obj;
}

// Uniform points in a convex polygon: a fan triangle chosen by area, then a
// uniform point in the triangle.
class PolygonSampler {
public:
  explicit PolygonSampler(const ConvexPolygon& poly) : v_(poly.vertices().begin(), poly.vertices().end()) {
    double acc = 0.0;
    for (std::size_t i = 1; i + 1 < v_.size(); ++i) {
      acc += 0.5 * cross(v_[i] - v_[0], v_[i + 1] - v_[0]);
      cum_.push_back(acc);
    }
  }

  Point2 operator()(UniformSource& rng) const {
    const double u = rng.next() * cum_.back();
    const std::size_t t = std::min<std::size_t>(
        static_cast<std::size_t>(std::upper_bound(cum_.begin(), cum_.end(), u) - cum_.begin()),
        cum_.size() - 1);
    double a = rng.next(), b = rng.next();
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    return v_[0] + a * (v_[t + 1] - v_[0]) + b * (v_[t + 2] - v_[0]);
  }

private:
  std::vector<Point2> v_;
  std::vector<double> cum_;
};

inline Objective evaluate_mc(const ConvexPolygon& C, std::span<const Point2> points,
                             std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw domain_error("evaluate_mc: samples must be >= 1");
  if (points.empty()) throw domain_error("evaluate_mc: no points");
  const PolygonSampler sampler(C);
  UniformSource rng(seed);
  const std::size_t k = points.size();
  std::vector<double> sum(k, 0.0);
  std::vector<std::int64_t> hits(k, 0);
  double s1 = 0.0, s2 = 0.0;
  for (std::int64_t n = 0; n < samples; ++n) {
    const Point2 x = sampler(rng);
    std::size_t best = 0;
    double bd = dot(x - points[0], x - points[0]);
    for (std::size_t i = 1; i < k; ++i) {
      const double d = dot(x - points[i], x - points[i]);
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    const double d = std::sqrt(bd);
    sum[best] += d;
    ++hits[best];
    s1 += d;
    s2 += d * d;
  }
  const double A = C.area();
  const double N = static_cast<double>(samples);
  const double mean = s1 / N;
  const double var = samples > 1 ? std::max(0.0, (s2 - N * mean * mean) / (N - 1.0)) : 0.0;

  Objective obj;
  obj.method = EvalMethod::monte_carlo;
  obj.value = A * mean;
  obj.stderr_ = A * std::sqrt(var / N);
  for (std::size_t i = 0; i < k; ++i)
    obj.per_cell.push_back({points[i], A * static_cast<double>(hits[i]) / N, A * sum[i] / N});
  return obj;
}

struct MedianResult {
  Point2 point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Minimizes the convex function p -> FW(C, p) by gradient descent with
// backtracking. The gradient is a central difference with step 1e-6 diam.
// Stops when |grad| <= tol * diam * area; without convergence the best
// iterate is returned with converged = false.
inline MedianResult solve_1median(const ConvexPolygon& C, double tol = 1e-7, int max_iter = 5000) {
  if (!(tol > 0.0)) throw domain_error("solve_1median: tol must be positive");
  const double diam = diameter(C).length;
  const double A = C.area();
  const double step = 1e-6 * diam;
  auto f = [&](Point2 p) { return fw_polygon_at(C, p); };
  auto grad = [&](Point2 p) {
    return Point2{(f(p + Point2{step, 0.0}) - f(p - Point2{step, 0.0})) / (2.0 * step),
                  (f(p + Point2{0.0, step}) - f(p - Point2{0.0, step})) / (2.0 * step)};
  };

  MedianResult res;
  res.point = C.centroid();
  res.value = f(res.point);
  double t = diam / A;  // FW's Hessian scales like area / diam
  for (int it = 0; it < max_iter; ++it) {
    res.iterations = it;
    const Point2 g = grad(res.point);
    const double gn = norm(g);
    if (gn <= tol * diam * A) {
      res.converged = true;
      return res;
    }
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      const Point2 q = res.point - t * g;
      const double fq = f(q);
      if (fq <= res.value - 0.5 * t * gn * gn) {
        res.point = q;
        res.value = fq;
        moved = true;
        t *= 2.0;
        break;
      }
      t *= 0.5;
    }
    // No decrease at any step: the difference gradient is at noise level.
    if (!moved) {
      res.converged = gn <= 1e3 * tol * diam * A;
      return res;
    }
  }
  res.iterations = max_iter;
  return res;
}

}  // namespace kmedian
