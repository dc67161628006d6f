#include "mimgraph/map_json.hpp"

#include <cmath>

namespace mimgraph {

namespace {

[[noreturn]] void bad_field(const char* key, const std::string& what) {
  throw Error(ErrorCode::invalid_argument, std::string("field '") + key + "' " + what, key);
}

}  // namespace

Json to_json(const SpeciesNode& n) {
  return {{"id", n.id},
          {"kind", species_kind_name(n.kind)},
          {"label", n.label},
          {"x", n.position.x},
          {"y", n.position.y},
          {"w", n.size.width},
          {"h", n.size.height},
          {"r", n.corner_radius}};
}

Json to_json(const Anchor& anchor) {
  if (const auto* s = std::get_if<SpeciesAnchor>(&anchor)) {
    return {{"node", s->node}, {"side", s->side ? side_name(*s->side) : "auto"}, {"offset", s->offset}};
  }
  const auto& e = std::get<EdgeAnchor>(anchor);
  return {{"edge", e.edge}, {"t", e.t}};
}

Json to_json(const InteractionEdge& e) {
  Json pts = Json::array();
  for (const Point& p : e.waypoints) pts.push_back({{"x", p.x}, {"y", p.y}});
  return {{"id", e.id},
          {"kind", glyph_name(e.glyph)},
          {"mode", routing_mode_name(e.mode)},
          {"from", to_json(e.source)},
          {"to", to_json(e.target)},
          {"points", std::move(pts)}};
}

Json to_json(const SceneMap& map) {
  Json nodes = Json::array();
  for (const auto& [id, n] : map.nodes()) nodes.push_back(to_json(n));
  Json edges = Json::array();
  for (const auto& [id, e] : map.edges()) edges.push_back(to_json(e));
  return {{"version", map.meta().schema_version},
          {"name", map.meta().name},
          {"created_by", map.meta().created_by},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

double number_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_field(key, "is required");
  const Json& v = j.at(key);
  if (!v.is_number()) bad_field(key, "must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad_field(key, "must be finite");
  return d;
}

double number_field(const Json& j, const char* key, double fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return number_field(j, key);
}

std::string string_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_field(key, "is required");
  const Json& v = j.at(key);
  if (!v.is_string()) bad_field(key, "must be a string");
  return v.get<std::string>();
}

std::string string_field(const Json& j, const char* key, const std::string& fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return string_field(j, key);
}

Anchor anchor_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::invalid_argument, "anchor must be an object");
  const bool on_node = j.contains("node");
  if (on_node == j.contains("edge")) {
    throw Error(ErrorCode::invalid_argument, "anchor needs exactly one of 'node' or 'edge'");
  }
  if (on_node) {
    SpeciesAnchor a;
    a.node = string_field(j, "node");
    const std::string side = string_field(j, "side", "auto");
    if (side != "auto") {
      a.side = side_from_name(side);
      if (!a.side) bad_field("side", "must be N, E, S, W or auto");
    }
    a.offset = number_field(j, "offset", 0.5);
    return a;
  }
  return EdgeAnchor{string_field(j, "edge"), number_field(j, "t", 0.5)};
}

Polyline points_from_json(const Json& j) {
  if (!j.is_array()) bad_field("points", "must be an array");
  Polyline out;
  for (const Json& p : j) {
    if (p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number()) {
      out.push_back({p[0].get<double>(), p[1].get<double>()});
    } else {
      out.push_back({number_field(p, "x"), number_field(p, "y")});
    }
  }
  return out;
}

}  // namespace mimgraph
