#pragma once

// Numeric re-derivation of the approximation-factor constants. Everything is
// in the normalized frame where the aligned box has height 1, z = w / k is
// the cell area and the polygon area lies in [k z / 2, k z].

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "kmedian/bounds.hpp"
#include "kmedian/fermat_weber.hpp"
#include "kmedian/partition.hpp"

namespace kmedian {

// `count` cells of aspect ratio `beta` and unit area.
struct CellGroup {
  int count = 1;
  double beta = 1.0;
};

struct Scenario {
  std::string label;
  std::vector<CellGroup> groups;
};

struct ScenarioRatio {
  double rho = 0.0;
  double area_fraction = 0.0;     // polygon area / box area at the maximum
  std::vector<double> cell_fill;  // polygon area per cell of each group at the maximum
};

// max over the polygon area T of (sum of per-cell upper bounds) / (k disk
// lower bounds of area T / k). The per-cell upper bounds are concave and
// piecewise linear, so for fixed T their sum is maximized by filling cells in
// order of slope FW_rect / A_c up to A_c.
inline ScenarioRatio scenario_ratio(const Scenario& s) {
  struct G {
    int count;
    double fw, ac;
  };
  std::vector<G> g;
  int k = 0;
  for (const auto& cg : s.groups) {
    if (cg.count < 1 || !(cg.beta >= 1.0)) throw domain_error("scenario_ratio: bad cell group");
    const double w = std::sqrt(cg.beta), h = 1.0 / std::sqrt(cg.beta);
    g.push_back({cg.count, fw_rect(w, h), alpha_c(w, h)});
    k += cg.count;
  }
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g[a].fw / g[a].ac > g[b].fw / g[b].ac; });

  auto fill = [&](double T, std::vector<double>* per) {
    double ub = 0.0, left = T;
    if (per) per->assign(g.size(), 0.0);
    for (std::size_t i : order) {
      const double take = std::min(left, g[i].count * std::min(g[i].ac, 1.0));
      ub += take / g[i].ac * g[i].fw;
      if (per) (*per)[i] = take / g[i].count;
      left -= take;
    }
    // Area above every breakpoint adds nothing; it fits since A_c <= 1.
    if (per && left > 0.0) {
      for (std::size_t i : order) {
        const double room = g[i].count * (1.0 - (*per)[i]);
        const double take = std::min(left, room);
        (*per)[i] += take / g[i].count;
        left -= take;
      }
    }
    return ub;
  };
  auto ratio = [&](double T) { return fill(T, nullptr) / (k * phi_lb1(T / k)); };

  std::vector<double> candidates{0.5 * k, static_cast<double>(k)};
  double acc = 0.0;
  for (std::size_t i : order) {
    acc += g[i].count * g[i].ac;
    if (acc > 0.5 * k && acc < k) candidates.push_back(acc);
  }
  for (int i = 1; i < 1000; ++i) candidates.push_back(0.5 * k * (1.0 + i / 1000.0));

  ScenarioRatio best;
  double bestT = candidates.front();
  for (double T : candidates) {
    const double r = ratio(T);
    if (r > best.rho) {
      best.rho = r;
      bestT = T;
    }
  }
  best.area_fraction = bestT / k;
  fill(bestT, &best.cell_fill);
  return best;
}

// Scale-free ratio for cells of a single aspect ratio.
inline double aspect_ratio_factor(double beta) {
  return scenario_ratio({"", {{1, beta}}}).rho;
}

struct SlicePeak {
  double rho = 0.0;
  double z = 0.0;
  double alpha = 0.0;
};

// Slices z x 1 with polygon area alpha per slice: max of
// Phi_UB(alpha, z, 1) / Phi_LB(alpha, 1) over z in [z_lo, z_hi] (log grid)
// and alpha in [z/2, min(z, alpha_hi)] (or (max(z/2, alpha_lo), z]).
inline SlicePeak slice_case_peak(double z_lo, double z_hi, double alpha_lo, double alpha_hi,
                                 int z_steps = 1500, int alpha_steps = 120) {
  SlicePeak best;
  for (int i = 0; i <= z_steps; ++i) {
    const double z = z_lo * std::pow(z_hi / z_lo, static_cast<double>(i) / z_steps);
    const double lo = std::max(0.5 * z, alpha_lo);
    const double hi = std::min(z, alpha_hi);
    if (!(hi >= lo)) continue;
    const double full = fw_rect(z, 1.0);
    const double ac = alpha_c(z, 1.0);
    for (int j = 0; j <= alpha_steps; ++j) {
      const double a = lo + (hi - lo) * j / alpha_steps;
      if (!(a > alpha_lo) && alpha_lo > 0.0) continue;
      const double r = std::min(a / ac * full, full) / phi_lb(a, 1.0);
      if (r > best.rho) best = {r, z, a};
    }
  }
  return best;
}

// Long slices under the L1 / L-infinity surrogate bounds: (z + 1) / alpha
// at the smallest polygon area alpha = z / 2.
inline double long_slice_factor(double z) { return (z + 1.0) / (0.5 * z); }

// Largest maximum aspect ratio of the grid configuration selected for boxes
// w x 1 with w >= 1, w / k in the open interval (lo, hi) and k in
// [k_min, k_max].
inline double subdivide_ar_ceiling(double lo, double hi, int k_min, int k_max, int steps = 400) {
  double worst = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    for (int i = 1; i < steps; ++i) {
      const double z = lo + (hi - lo) * i / steps;
      const double w = z * k;
      if (w < 1.0) continue;
      const GridConfig c = select_best_config(subdivide_configs({0.0, 0.0, w, 1.0}, k));
      worst = std::max(worst, c.max_ar());
    }
  }
  return worst;
}

struct CaseRow {
  int id = 0;
  std::string condition;
  double rho = 0.0;
  std::string worst;  // label of the scenario attaining rho
  std::vector<std::pair<std::string, double>> scenarios;
};

inline CaseRow make_case(int id, std::string condition, const std::vector<Scenario>& scenarios) {
  CaseRow row;
  row.id = id;
  row.condition = std::move(condition);
  for (const auto& s : scenarios) {
    const double r = scenario_ratio(s).rho;
    row.scenarios.emplace_back(s.label, r);
    if (r > row.rho) {
      row.rho = r;
      row.worst = s.label;
    }
  }
  return row;
}

inline std::string ar_label(double beta) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "AR %.4g", beta);
  return buf;
}

// Per-interval worst-case factors for the grid algorithm. Cases 1-5 use the
// cell aspect-ratio ceilings of each w / k interval. Case 5 adds the k = 3
// configuration (one cell of AR <= 3, two of AR <= 2) and, for k >= 4, the
// ceiling measured by sweeping the configuration search. Case 6 is the slice case: a grid over z <= 1000
// plus the long-slice bound beyond.
inline std::vector<CaseRow> case_table() {
  std::vector<CaseRow> rows;
  auto one = [](double b) { return Scenario{ar_label(b), {{1, b}}}; };

  rows.push_back(make_case(1, "w/k <= 1/9", {one(16.0 / 9.0)}));
  rows.push_back(make_case(2, "1/9 <= w/k < 1/8", {one(1.125), one(1.44), one(1.68)}));
  rows.push_back(make_case(3, "1/8 <= w/k < 2/9", {one(2.0)}));
  rows.push_back(make_case(4, "2/9 <= w/k <= 1/4", {one(1.125), one(1.62)}));

  const double ceiling = subdivide_ar_ceiling(0.25, 0.5, 4, 200);
  Scenario mixed{"k=3: 1 x AR 3 + 2 x AR 2", {{1, 3.0}, {2, 2.0}}};
  Scenario swept{"k>=4 sweep " + ar_label(ceiling), {{1, ceiling}}};
  rows.push_back(make_case(5, "1/4 < w/k < 0.5", {one(2.0), mixed, one(2.296), swept}));

  CaseRow six;
  six.id = 6;
  six.condition = "w/k >= 0.5";
  const SlicePeak i1 = slice_case_peak(0.5, std::numbers::pi / 2.0, 0.0, std::numbers::pi / 4.0);
  const SlicePeak i2 = slice_case_peak(std::numbers::pi / 4.0, 1000.0, std::numbers::pi / 4.0, 1e300);
  const double ii = long_slice_factor(1000.0);
  six.scenarios = {{"z <= 1000, alpha <= pi/4", i1.rho},
                   {"z <= 1000, alpha > pi/4", i2.rho},
                   {"z > 1000", ii}};
  for (const auto& [label, r] : six.scenarios)
    if (r > six.rho) {
      six.rho = r;
      six.worst = label;
    }
  rows.push_back(six);
  return rows;
}

}  // namespace kmedian
