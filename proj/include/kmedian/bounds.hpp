#pragma once

// Lower and upper bounding functions for FW(C) and FW(C, k).
//
// Lower bound: among regions of area A inside a slab of height h, the
// intersection of a centered disk with the slab minimizes FW. Summed over k
// equal-area cells (the bound is convex in A) this bounds FW(C, k).
//
// Upper bound: a convex region of area A inside a w x h box (w >= h) that
// contains a horizontal chord of length w has FW <= FW_half(w, 2A/w). The
// concave envelope of min{that, FW_rect(w, h)} is linear up to the
// breakpoint A_c and flat after it.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kmedian/error.hpp"
#include "kmedian/fermat_weber.hpp"

namespace kmedian {

namespace detail {

// Bisection on a monotone increasing function with f(lo) < 0 <= f(hi).
template <class F>
double bisect_increasing(F&& f, double lo, double hi, double rel_tol) {
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= rel_tol * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Area of {|x| <= r} intersected with the slab |y| <= h/2, for r >= h/2.
inline double slab_disk_area(double r, double h) {
  const double half = 0.5 * h;
  if (r <= half) return std::numbers::pi * r * r;
  return h * std::sqrt(r * r - half * half) + 2.0 * r * r * std::asin(h / (2.0 * r));
}

// Radius of the centered disk whose intersection with a slab of height h has
// area A. Below the inscribed-disk area the slab does not bind.
inline double slab_disk_radius(double A, double h) {
  if (!(A > 0.0) || !(h > 0.0)) throw domain_error("slab_disk_radius: A and h must be positive");
  const double disk_max = std::numbers::pi * 0.25 * h * h;
  if (A <= disk_max) return std::sqrt(A / std::numbers::pi);
  // h * (r - h/2) <= area(r), so r = A/h + h brackets the root from above.
  return detail::bisect_increasing([&](double r) { return slab_disk_area(r, h) - A; }, 0.5 * h,
                                   A / h + h, 1e-15);
}

// Disk-only lower bound (2 / (3 sqrt(pi))) A^{3/2}.
inline double phi_lb1(double A) {
  if (!(A > 0.0)) throw domain_error("phi_lb1: A must be positive");
  return 2.0 / (3.0 * std::sqrt(std::numbers::pi)) * std::pow(A, 1.5);
}

// FW of the slab-disk region of area A; a lower bound on FW(C) for any
// convex C of area A inside a slab of height h.
inline double phi_lb(double A, double h) {
  const double r = slab_disk_radius(A, h);
  if (r < 0.5 * h) return 2.0 / 3.0 * std::numbers::pi * r * r * r;
  const double root = std::sqrt(std::max(0.0, r * r - 0.25 * h * h));
  const double chord = std::sqrt(std::max(0.0, 4.0 * r * r - h * h));
  return 4.0 * r * r * r / 3.0 * std::asin(std::min(1.0, h / (2.0 * r))) + r * h * root / 3.0 +
         h * h * h / 12.0 * std::log((2.0 * r + chord) / h);
}

// Lower bound on FW(C, k) for a region of area A whose aligned box has
// height h (default: the normalized box of height 1).
inline double kmedian_lower_bound(double A, int k, double h = 1.0) {
  if (k < 1) throw domain_error("kmedian_lower_bound: k must be >= 1");
  if (!(A > 0.0) || !(h > 0.0)) throw domain_error("kmedian_lower_bound: A and h must be positive");
  return k * phi_lb(A / k, h);
}

// Raw half-rectangle bound FW_half(w, 2A/w).
inline double half_rect_bound(double A, double w) {
  if (!(A > 0.0) || !(w > 0.0)) throw domain_error("half_rect_bound: A and w must be positive");
  return fw_half_rect(w, 2.0 * A / w);
}

// Breakpoint A_c with FW_half(w, 2 A_c / w) = FW_rect(w, h). Arguments may
// come in either order; the longer side is taken as w.
inline double alpha_c(double w, double h) {
  if (!(w > 0.0) || !(h > 0.0)) throw domain_error("alpha_c: dimensions must be positive");
  if (w < h) std::swap(w, h);
  const double target = fw_rect(w, h);
  return detail::bisect_increasing([&](double A) { return fw_half_rect(w, 2.0 * A / w) - target; },
                                   0.0, 2.0 * w * h, 1e-13);
}

// A_c / (w h) for a box of the given aspect ratio (scale free).
inline double alpha_c_ratio(double aspect) {
  if (!(aspect >= 1.0)) throw domain_error("alpha_c_ratio: aspect ratio must be >= 1");
  return alpha_c(std::sqrt(aspect), 1.0 / std::sqrt(aspect));
}

// Concave piecewise-linear upper bound on FW(C) for a region of area A in a
// w x h box; the longer side is taken as w.
inline double phi_ub(double A, double w, double h) {
  if (!(w > 0.0) || !(h > 0.0)) throw domain_error("phi_ub: dimensions must be positive");
  if (!(A > 0.0)) throw domain_error("phi_ub: A must be positive");
  if (A > w * h * (1.0 + 1e-12)) throw domain_error("phi_ub: A exceeds the box area");
  const double full = fw_rect(w, h);
  return std::min(A / alpha_c(w, h) * full, full);
}

// Upper bound on FW(C, k) when every cell has aspect ratio at most beta.
inline double kmedian_upper_bound(double A, int k, double beta) {
  if (k < 1) throw domain_error("kmedian_upper_bound: k must be >= 1");
  if (!(beta >= 1.0)) throw domain_error("kmedian_upper_bound: beta must be >= 1");
  if (!(A > 0.0)) throw domain_error("kmedian_upper_bound: A must be positive");
  const double cell_area = 2.0 * A / k;
  return k * phi_ub(A / k, std::sqrt(cell_area * beta), std::sqrt(cell_area / beta));
}

// Bounds for one instance. z and alpha are in the normalized frame where the
// aligned box has height 1; lb and ub are in input units.
struct BoundsReport {
  double A = 0.0;
  int k = 0;
  double w = 0.0;
  double h = 0.0;
  double z = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double lb = 0.0;
  double ub = 0.0;
  double alpha_c = 0.0;  // breakpoint of the upper-bound cell, normalized
  double rho = 0.0;      // ub / lb
};

inline BoundsReport make_bounds_report(double A, int k, double w, double h, double beta) {
  BoundsReport r;
  r.A = A;
  r.k = k;
  r.w = w;
  r.h = h;
  r.z = w / (h * k);
  r.alpha = A / (h * h * k);
  r.beta = beta;
  r.lb = kmedian_lower_bound(A, k, h);
  r.ub = kmedian_upper_bound(A, k, beta);
  const double cell_area = 2.0 * A / k;
  r.alpha_c = alpha_c(std::sqrt(cell_area * beta), std::sqrt(cell_area / beta)) / (h * h);
  r.rho = r.ub / r.lb;
  return r;
}

}  // namespace kmedian
