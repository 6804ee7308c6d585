#pragma once

// Polygon and point-set input (JSON array, GeoJSON, WKT) and solution
// output (JSON, CSV, WKT).

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmedian/error.hpp"
#include "kmedian/geometry.hpp"
#include "kmedian/solver.hpp"

namespace kmedian::io {

using nlohmann::json;

namespace detail {

inline std::vector<Point2> points_from_json(const json& arr) {
  if (!arr.is_array()) throw input_error("expected an array of [x, y] pairs");
  std::vector<Point2> out;
  for (const auto& p : arr) {
    if (p.is_array() && p.size() >= 2 && p[0].is_number() && p[1].is_number())
      out.push_back({p[0].get<double>(), p[1].get<double>()});
    else if (p.is_object() && p.contains("x") && p.contains("y"))
      out.push_back({p["x"].get<double>(), p["y"].get<double>()});
    else
      throw input_error("malformed point: " + p.dump());
  }
  return out;
}

inline std::vector<Point2> ring_from_geojson(const json& j) {
  const std::string type = j.value("type", "");
  if (type == "Feature") return ring_from_geojson(j.at("geometry"));
  if (type == "FeatureCollection") {
    if (j.at("features").empty()) throw input_error("empty FeatureCollection");
    return ring_from_geojson(j.at("features")[0]);
  }
  if (type == "Polygon") {
    const auto& rings = j.at("coordinates");
    if (rings.empty()) throw input_error("Polygon without rings");
    return points_from_json(rings[0]);
  }
  if (j.contains("vertices")) return points_from_json(j.at("vertices"));
  throw input_error("unsupported JSON polygon type '" + type + "'");
}

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Closing vertex repeated at the end is dropped.
inline std::vector<Point2> drop_closing(std::vector<Point2> ring) {
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  return ring;
}

}  // namespace detail

// First ring of a WKT POLYGON, e.g. "POLYGON ((0 0, 1 0, 0 1, 0 0))".
inline std::vector<Point2> parse_wkt_ring(const std::string& text) {
  std::string s = detail::trim(text);
  std::string head;
  for (char c : s.substr(0, 7)) head += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (head != "POLYGON") throw input_error("WKT input must be a POLYGON");
  const auto open = s.find("((");
  const auto close = s.find(')', open == std::string::npos ? 0 : open);
  if (open == std::string::npos || close == std::string::npos) throw input_error("malformed WKT polygon");
  std::stringstream body(s.substr(open + 2, close - open - 2));
  std::vector<Point2> ring;
  std::string item;
  while (std::getline(body, item, ',')) {
    std::istringstream xy(item);
    Point2 p;
    if (!(xy >> p.x >> p.y)) throw input_error("malformed WKT coordinate '" + detail::trim(item) + "'");
    ring.push_back(p);
  }
  return ring;
}

// Vertex list from JSON ([[x,y],...], {"vertices": ...}, GeoJSON) or WKT.
inline std::vector<Point2> parse_ring(const std::string& text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw input_error("empty polygon input");
  if (s[0] == '[' || s[0] == '{') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::exception& e) {
      throw input_error(std::string("invalid JSON: ") + e.what());
    }
    try {
      return detail::drop_closing(j.is_array() ? detail::points_from_json(j) : detail::ring_from_geojson(j));
    } catch (const json::exception& e) {
      throw input_error(std::string("unexpected JSON layout: ") + e.what());
    }
  }
  return detail::drop_closing(parse_wkt_ring(s));
}

// Builds the polygon; with `hull` the input may be any point set.
inline ConvexPolygon parse_polygon(const std::string& text, bool hull = false) {
  auto ring = parse_ring(text);
  try {
    if (hull) return convex_hull(ring);
    return ConvexPolygon(std::move(ring));
  } catch (const error& e) {
    throw input_error(std::string("invalid polygon: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Points as [[x,y],...] or {"points": [...]} (as written by solution_json).
inline std::vector<Point2> parse_points(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.is_object()) j = j.at("points");
    std::vector<Point2> out;
    for (const auto& p : j) {
      if (p.is_object() && p.contains("point"))
        out.push_back({p["point"][0].get<double>(), p["point"][1].get<double>()});
      else
        out.push_back(detail::points_from_json(json::array({p}))[0]);
    }
    return out;
  } catch (const json::exception& e) {
    throw input_error(std::string("unexpected JSON layout: ") + e.what());
  }
}

inline json point_json(Point2 p) { return json::array({p.x, p.y}); }

inline json rect_json(const AxisRect& r) {
  return {{"x0", r.x0}, {"y0", r.y0}, {"w", r.w}, {"h", r.h}};
}

inline json polygon_json(const ConvexPolygon& poly) {
  json a = json::array();
  for (auto p : poly.vertices()) a.push_back(point_json(p));
  return a;
}

inline json partition_json(const Partition& part) {
  json cells = json::array();
  for (const auto& c : part.cells) cells.push_back(rect_json(c));
  json strips = json::array();
  for (const auto& s : part.strips)
    strips.push_back({{"orientation", s.orientation == StripOrientation::column ? "column" : "row"},
                      {"extent", rect_json(s.extent)},
                      {"first", s.first},
                      {"count", s.count}});
  json j = {{"box", rect_json(part.box)}, {"cells", cells}, {"strips", strips}};
  const auto st = partition_aspect_stats(part);
  j["max_aspect_ratio"] = st.max_ar;
  j["last_aspect_ratio"] = st.last_ar;
  if (part.grid) {
    const auto& g = *part.grid;
    j["grid"] = {{"flag", g.flag == GridFlag::vertical ? "vertical" : "horizontal"},
                 {"p1", g.p1}, {"q1", g.q1}, {"p2", g.p2}, {"q2", g.q2},
                 {"ell", g.ell}, {"ar1", g.ar1}, {"ar2", g.ar2}};
  }
  return j;
}

inline json frame_json(const OrientedBox& b) {
  return {{"w", b.w}, {"h", b.h}, {"rotation", b.rotation}, {"origin", point_json(b.origin)}};
}

inline json solution_json(const MedianSolution& s) {
  json pts = json::array();
  for (std::size_t i = 0; i < s.points.size(); ++i)
    pts.push_back({{"point", point_json(s.points[i])}, {"provenance", to_string(s.provenance[i])}});
  return {{"algorithm", to_string(s.algorithm)},
          {"placement", to_string(s.strategy)},
          {"seed", s.seed},
          {"k", s.points.size()},
          {"orphans", s.orphan_count()},
          {"random_fallbacks", s.placement.random_fallbacks},
          {"box", frame_json(s.frame.box)},
          {"points", pts}};
}

inline std::string solution_csv(const MedianSolution& s) {
  std::string out = "index,x,y,provenance\n";
  char buf[128];
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%s\n", i, s.points[i].x, s.points[i].y,
                  to_string(s.provenance[i]));
    out += buf;
  }
  return out;
}

inline std::string points_wkt(std::span<const Point2> pts) {
  std::string out = "MULTIPOINT (";
  char buf[96];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s(%.17g %.17g)", i ? ", " : "", pts[i].x, pts[i].y);
    out += buf;
  }
  return out + ")";
}

inline std::string polygon_wkt(const ConvexPolygon& poly) {
  std::string out = "POLYGON ((";
  char buf[96];
  const auto v = poly.vertices();
  for (std::size_t i = 0; i <= v.size(); ++i) {
    const Point2 p = v[i % v.size()];
    std::snprintf(buf, sizeof buf, "%s%.17g %.17g", i ? ", " : "", p.x, p.y);
    out += buf;
  }
  return out + "))";
}

}  // namespace kmedian::io
