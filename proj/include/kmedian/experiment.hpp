#pragma once

// Factorial experiment over polygons x k x algorithm x placement, reporting
// objective / lower bound ratios.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "kmedian/bounds.hpp"
#include "kmedian/io.hpp"
#include "kmedian/objective.hpp"
#include "kmedian/random_polygon.hpp"
#include "kmedian/solver.hpp"

namespace kmedian {

struct ExperimentSpec {
  std::vector<std::string> files;  // polygon files; used when nonempty
  int random_count = 10;           // otherwise this many random polygons
  int n_vertices = 32;
  std::vector<int> k_values{3, 5, 10, 25, 50, 100};
  std::vector<Algorithm> algorithms{Algorithm::construct, Algorithm::subdivide};
  std::vector<PlacementStrategy> placements{PlacementStrategy::random, PlacementStrategy::modified};
  int repetitions = 3;
  std::uint64_t seed = 1;
};

// One (polygon, k, algorithm, placement) cell; objective and ratio are means
// over repetitions (mean of ratios).
struct ExperimentRow {
  std::string polygon_id;
  int k = 0;
  Algorithm algorithm = Algorithm::construct;
  PlacementStrategy placement = PlacementStrategy::random;
  double objective = 0.0;
  double lb = 0.0;
  double ratio = 0.0;
  std::size_t n_outside = 0;
  double runtime_ms = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::vector<std::string> errors;  // per-item failures; the run continues
};

inline std::uint64_t repetition_seed(std::uint64_t seed, int rep) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(rep);
}

inline ExperimentRow run_instance(const ConvexPolygon& C, const std::string& id, int k, Algorithm alg,
                                  PlacementStrategy placement, int repetitions, std::uint64_t seed) {
  ExperimentRow row;
  row.polygon_id = id;
  row.k = k;
  row.algorithm = alg;
  row.placement = placement;
  const auto t0 = std::chrono::steady_clock::now();
  double obj_sum = 0.0, ratio_sum = 0.0;
  for (int rep = 0; rep < repetitions; ++rep) {
    const MedianSolution s = solve(C, k, alg, placement, repetition_seed(seed, rep));
    const double obj = evaluate_exact(C, s.points).value;
    row.lb = kmedian_lower_bound(C.area(), k, s.frame.box.h);
    row.n_outside = s.orphan_count();
    obj_sum += obj;
    ratio_sum += obj / row.lb;
  }
  row.objective = obj_sum / repetitions;
  row.ratio = ratio_sum / repetitions;
  row.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / repetitions;
  return row;
}

inline ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.k_values.empty()) throw domain_error("run_experiment: empty k range");
  if (spec.repetitions < 1) throw domain_error("run_experiment: repetitions must be >= 1");

  ExperimentResult res;
  std::vector<std::pair<std::string, ConvexPolygon>> polys;
  if (!spec.files.empty()) {
    for (const auto& f : spec.files) {
      try {
        polys.emplace_back(f, io::parse_polygon(io::read_file(f), true));
      } catch (const error& e) {
        res.errors.push_back(f + ": " + e.what());
      }
    }
  } else {
    for (int i = 0; i < spec.random_count; ++i)
      polys.emplace_back("valtr-" + std::to_string(i),
                         random_convex_polygon(spec.n_vertices, spec.seed + static_cast<std::uint64_t>(i)));
  }

  for (const auto& [id, C] : polys)
    for (int k : spec.k_values)
      for (Algorithm alg : spec.algorithms)
        for (PlacementStrategy pl : spec.placements) {
          try {
            res.rows.push_back(run_instance(C, id, k, alg, pl, spec.repetitions, spec.seed));
          } catch (const error& e) {
            res.errors.push_back(id + " k=" + std::to_string(k) + ": " + e.what());
          }
        }
  return res;
}

inline std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "polygon,k,algorithm,placement,objective,lb,ratio,n_outside,runtime_ms\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%s,%s,%.12g,%.12g,%.9f,%zu,%.3f\n", r.polygon_id.c_str(), r.k,
                  to_string(r.algorithm), to_string(r.placement), r.objective, r.lb, r.ratio, r.n_outside,
                  r.runtime_ms);
    out += buf;
  }
  return out;
}

}  // namespace kmedian
