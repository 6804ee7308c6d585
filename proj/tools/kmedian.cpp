// Command-line front end: partition, solve, evaluate, bounds, experiment,
// render.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmedian/approximation.hpp"
#include "kmedian/bounds.hpp"
#include "kmedian/experiment.hpp"
#include "kmedian/io.hpp"
#include "kmedian/objective.hpp"
#include "kmedian/random_polygon.hpp"
#include "kmedian/solver.hpp"
#include "kmedian/svg.hpp"

using namespace kmedian;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct PolygonSource {
  std::string path;
  int random_vertices = 0;
  std::uint64_t polygon_seed = 1;
  bool hull = false;

  void attach(CLI::App* app) {
    app->add_option("--polygon", path, "polygon file (JSON vertex list, GeoJSON or WKT)");
    app->add_option("--random", random_vertices, "use a random convex polygon with this many vertices");
    app->add_option("--polygon-seed", polygon_seed, "seed for --random");
    app->add_flag("--hull", hull, "take the convex hull of the input points");
  }

  ConvexPolygon load() const {
    if (!path.empty()) return io::parse_polygon(io::read_file(path), hull);
    if (random_vertices >= 3) return random_convex_polygon(random_vertices, polygon_seed);
    throw input_error("give --polygon FILE or --random N (N >= 3)");
  }
};

Algorithm parse_alg(const std::string& s) {
  if (s == "construct") return Algorithm::construct;
  if (s == "subdivide") return Algorithm::subdivide;
  throw input_error("unknown algorithm '" + s + "'");
}

PlacementStrategy parse_placement(const std::string& s) {
  if (s == "random") return PlacementStrategy::random;
  if (s == "modified") return PlacementStrategy::modified;
  throw input_error("unknown placement '" + s + "'");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw input_error("cannot write '" + out + "'");
  f << text;
}

json objective_json(const Objective& o) {
  json cells = json::array();
  for (const auto& c : o.per_cell)
    cells.push_back({{"site", io::point_json(c.site)}, {"area", c.area}, {"fw", c.fw}});
  json j = {{"value", o.value},
            {"method", o.method == EvalMethod::exact ? "exact" : "monte_carlo"},
            {"per_cell", cells}};
  if (o.method == EvalMethod::monte_carlo) j["stderr"] = o.stderr_;
  return j;
}

json bounds_json(const BoundsReport& r) {
  return {{"area", r.A},   {"k", r.k},         {"w", r.w},           {"h", r.h},
          {"z", r.z},      {"alpha", r.alpha}, {"beta", r.beta},     {"lower_bound", r.lb},
          {"upper_bound", r.ub}, {"alpha_c", r.alpha_c}, {"rho", r.rho}};
}

std::vector<int> parse_k_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos && dash > 0) {
        const int a = std::stoi(item.substr(0, dash)), b = std::stoi(item.substr(dash + 1));
        for (int k = a; k <= b; ++k) out.push_back(k);
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const std::exception&) {
      throw input_error("bad k list entry '" + item + "'");
    }
  }
  for (int k : out)
    if (k < 1) throw input_error("k must be >= 1");
  if (out.empty()) throw input_error("empty k list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous k-medians on convex polygons"};
  app.require_subcommand(1);

  PolygonSource src;
  int k = 10;
  std::string alg = "construct", placement = "modified", format = "json", out;
  std::uint64_t seed = 1;

  // partition
  auto* part_cmd = app.add_subcommand("partition", "partition the aligned box of C into k cells");
  src.attach(part_cmd);
  bool dump_configs = false;
  part_cmd->add_option("--k", k, "number of cells")->check(CLI::PositiveNumber);
  part_cmd->add_option("--alg", alg, "construct | subdivide");
  part_cmd->add_option("--format", format, "json | svg");
  part_cmd->add_option("--out", out, "output path (default stdout)");
  part_cmd->add_flag("--dump-configs", dump_configs, "list every candidate grid configuration");
  double box_w = 0.0, box_h = 0.0;
  part_cmd->add_option("--box-w", box_w, "partition a w x h box instead of a polygon");
  part_cmd->add_option("--box-h", box_h, "");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "place k medians in C");
  PolygonSource solve_src;
  solve_src.attach(solve_cmd);
  solve_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--alg", alg, "construct | subdivide");
  solve_cmd->add_option("--placement", placement, "random | modified");
  solve_cmd->add_option("--seed", seed);
  solve_cmd->add_option("--format", format, "json | csv | wkt | svg");
  solve_cmd->add_option("--out", out);

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "evaluate FW(C, k) for a point set");
  PolygonSource eval_src;
  eval_src.attach(eval_cmd);
  std::string points_path, method = "exact";
  std::int64_t samples = 1000000;
  eval_cmd->add_option("--points", points_path, "points JSON ([[x,y],...] or solve output)")->required();
  eval_cmd->add_option("--method", method, "exact | mc");
  eval_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  eval_cmd->add_option("--seed", seed);
  eval_cmd->add_option("--out", out);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "lower and upper bounds on FW(C, k)");
  PolygonSource bounds_src;
  bounds_src.attach(bounds_cmd);
  double beta = 0.0;
  bool table = false;
  bounds_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--alg", alg, "algorithm whose cell aspect ratio sets beta");
  bounds_cmd->add_option("--beta", beta, "cell aspect-ratio ceiling (default: observed)");
  bounds_cmd->add_flag("--case-table", table, "print the per-case worst-case factors instead");
  bounds_cmd->add_option("--out", out);

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "factorial experiment, CSV rows");
  ExperimentSpec spec;
  std::string k_list = "3,5,10,25,50,100";
  std::vector<std::string> algs{"construct", "subdivide"}, placements{"random", "modified"};
  exp_cmd->add_option("--polygons", spec.files, "polygon files (default: random polygons)");
  exp_cmd->add_option("--count", spec.random_count, "number of random polygons");
  exp_cmd->add_option("--vertices", spec.n_vertices, "vertices per random polygon");
  exp_cmd->add_option("--k", k_list, "k values, e.g. 3,5,10 or 3-150");
  exp_cmd->add_option("--alg", algs, "algorithms");
  exp_cmd->add_option("--placement", placements, "placements");
  exp_cmd->add_option("--reps", spec.repetitions)->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seed", spec.seed);
  exp_cmd->add_option("--out", out);

  // render
  auto* render_cmd = app.add_subcommand("render", "SVG of a solution");
  PolygonSource render_src;
  render_src.attach(render_cmd);
  bool voronoi = false;
  render_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  render_cmd->add_option("--alg", alg);
  render_cmd->add_option("--placement", placement);
  render_cmd->add_option("--seed", seed);
  render_cmd->add_flag("--voronoi", voronoi, "overlay Voronoi cells");
  render_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*part_cmd) {
      const Algorithm a = parse_alg(alg);
      std::optional<ConvexPolygon> local;
      AxisRect box;
      if (box_w > 0.0 && box_h > 0.0) {
        box = {0.0, 0.0, box_w, box_h};
      } else {
        auto frame = diameter_aligned_box(src.load());
        box = frame.box.rect();
        local = frame.local;
      }
      if (dump_configs) {
        if (format == "svg") {
          emit(svg::render_configs(box, k), out);
        } else {
          const auto configs = subdivide_configs(box, k);
          const auto best = select_best_config(configs);
          json arr = json::array();
          for (const auto& c : configs)
            arr.push_back({{"flag", c.flag == GridFlag::vertical ? "vertical" : "horizontal"},
                           {"loop", c.source.p_loop ? "p" : "q"}, {"offset", c.source.offset},
                           {"p1", c.p1}, {"q1", c.q1}, {"p2", c.p2}, {"q2", c.q2}, {"ell", c.ell},
                           {"ar1", c.ar1}, {"ar2", c.ar2},
                           {"selected", c.flag == best.flag && c.p1 == best.p1 && c.q1 == best.q1 &&
                                            c.p2 == best.p2 && c.q2 == best.q2}});
          emit(json{{"box", io::rect_json(box)}, {"k", k}, {"configs", arr}}.dump(2), out);
        }
        return 0;
      }
      const Partition part = make_partition(box, k, a);
      if (format == "svg")
        emit(svg::render_partition(part, local ? &*local : nullptr), out);
      else if (format == "json")
        emit(io::partition_json(part).dump(2), out);
      else
        throw input_error("partition supports --format json|svg");
    } else if (*solve_cmd) {
      const ConvexPolygon C = solve_src.load();
      const MedianSolution s = solve(C, k, parse_alg(alg), parse_placement(placement), seed);
      if (format == "json")
        emit(io::solution_json(s).dump(2), out);
      else if (format == "csv")
        emit(io::solution_csv(s), out);
      else if (format == "wkt")
        emit(io::points_wkt(s.points), out);
      else if (format == "svg")
        emit(svg::render_solution(C, s), out);
      else
        throw input_error("unknown format '" + format + "'");
    } else if (*eval_cmd) {
      const ConvexPolygon C = eval_src.load();
      const auto pts = io::parse_points(io::read_file(points_path));
      for (auto p : pts)
        if (!contains(C, p)) throw input_error("a point lies outside the polygon");
      Objective o;
      if (method == "exact")
        o = evaluate_exact(C, pts);
      else if (method == "mc")
        o = evaluate_mc(C, pts, samples, seed);
      else
        throw input_error("unknown method '" + method + "'");
      json j = objective_json(o);
      j["lower_bound"] = kmedian_lower_bound(C.area(), static_cast<int>(pts.size()),
                                             diameter_aligned_box(C).box.h);
      j["ratio_vs_lb"] = o.value / j["lower_bound"].get<double>();
      emit(j.dump(2), out);
    } else if (*bounds_cmd) {
      if (table) {
        json arr = json::array();
        for (const auto& row : case_table()) {
          json sc = json::array();
          for (const auto& [label, r] : row.scenarios) sc.push_back({{"scenario", label}, {"rho", r}});
          arr.push_back({{"case", row.id}, {"condition", row.condition}, {"rho_max", row.rho},
                         {"worst", row.worst}, {"scenarios", sc}});
        }
        emit(arr.dump(2), out);
        return 0;
      }
      const ConvexPolygon C = bounds_src.load();
      const auto frame = diameter_aligned_box(C);
      double b = beta;
      if (!(b >= 1.0)) b = max_cell_aspect_ratio(make_partition(frame.box.rect(), k, parse_alg(alg)));
      emit(bounds_json(make_bounds_report(C.area(), k, frame.box.w, frame.box.h, b)).dump(2), out);
    } else if (*exp_cmd) {
      spec.k_values = parse_k_list(k_list);
      spec.algorithms.clear();
      for (const auto& a : algs) spec.algorithms.push_back(parse_alg(a));
      spec.placements.clear();
      for (const auto& p : placements) spec.placements.push_back(parse_placement(p));
      const auto res = run_experiment(spec);
      for (const auto& e : res.errors) std::cerr << "warning: " << e << '\n';
      emit(experiment_csv(res.rows), out);
    } else if (*render_cmd) {
      const ConvexPolygon C = render_src.load();
      const MedianSolution s = solve(C, k, parse_alg(alg), parse_placement(placement), seed);
      svg::Options opt;
      opt.voronoi = voronoi;
      emit(svg::render_solution(C, s, opt), out);
    }
  } catch (const numeric_failure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const kmedian::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
