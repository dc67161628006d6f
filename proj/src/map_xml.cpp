#include "mimgraph/map_xml.hpp"

#include <algorithm>
#include <initializer_list>

namespace mimgraph {

namespace {

[[noreturn]] void schema_error(const XmlElement& el, const std::string& message) {
  throw Error(ErrorCode::schema_violation, message, "line " + std::to_string(el.line));
}

void check_attributes(const XmlElement& el, std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, v] : el.attributes) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      schema_error(el, "unknown attribute '" + k + "' on <" + el.name + ">");
    }
  }
}

void check_no_text(const XmlElement& el) {
  if (!std::all_of(el.text.begin(), el.text.end(), [](char c) {
        return c == ' ' || c == '\n' || c == '\t' || c == '\r';
      })) {
    schema_error(el, "unexpected text inside <" + el.name + ">");
  }
}

void check_leaf(const XmlElement& el) {
  if (!el.children.empty()) schema_error(el, "<" + el.name + "> takes no child elements");
  check_no_text(el);
}

const std::string& required(const XmlElement& el, std::string_view key) {
  const std::string* v = el.attribute(key);
  if (!v) schema_error(el, "<" + el.name + "> requires attribute '" + std::string(key) + "'");
  return *v;
}

std::string optional_text(const XmlElement& el, std::string_view key) {
  const std::string* v = el.attribute(key);
  return v ? *v : std::string();
}

double number(const XmlElement& el, std::string_view key, std::optional<double> fallback = std::nullopt) {
  const std::string* v = el.attribute(key);
  if (!v) {
    if (fallback) return *fallback;
    schema_error(el, "<" + el.name + "> requires attribute '" + std::string(key) + "'");
  }
  double out = 0.0;
  if (!parse_number(*v, out)) {
    schema_error(el, "attribute '" + std::string(key) + "' is not a number: '" + *v + "'");
  }
  return out;
}

SpeciesNode read_node(const XmlElement& el) {
  check_attributes(el, {"id", "kind", "label", "x", "y", "w", "h", "r"});
  check_leaf(el);
  SpeciesNode node;
  node.id = required(el, "id");
  const std::string& kind = required(el, "kind");
  const auto k = species_kind_from_name(kind);
  if (!k) schema_error(el, "unknown species kind '" + kind + "'");
  node.kind = *k;
  node.label = optional_text(el, "label");
  node.position = {number(el, "x"), number(el, "y")};
  node.size = {number(el, "w"), number(el, "h")};
  node.corner_radius = number(el, "r", 6.0);
  return node;
}

Anchor read_anchor(const XmlElement& el) {
  check_leaf(el);
  const bool on_node = el.attribute("node") != nullptr;
  const bool on_edge = el.attribute("edge") != nullptr;
  if (on_node == on_edge) schema_error(el, "<" + el.name + "> needs exactly one of 'node' or 'edge'");
  if (on_node) {
    check_attributes(el, {"node", "side", "offset"});
    SpeciesAnchor a;
    a.node = *el.attribute("node");
    const std::string side = el.attribute("side") ? *el.attribute("side") : "auto";
    if (side != "auto") {
      a.side = side_from_name(side);
      if (!a.side) schema_error(el, "unknown side '" + side + "'");
    }
    a.offset = number(el, "offset", 0.5);
    return a;
  }
  check_attributes(el, {"edge", "t"});
  return EdgeAnchor{*el.attribute("edge"), number(el, "t", 0.5)};
}

InteractionEdge read_edge(const XmlElement& el) {
  check_attributes(el, {"id", "kind", "mode"});
  check_no_text(el);
  InteractionEdge edge;
  edge.id = required(el, "id");
  const std::string& kind = required(el, "kind");
  const auto g = glyph_from_name(kind);
  if (!g) schema_error(el, "unknown interaction kind '" + kind + "'");
  edge.glyph = *g;
  const std::string mode = el.attribute("mode") ? *el.attribute("mode") : "auto";
  const auto m = routing_mode_from_name(mode);
  if (!m) schema_error(el, "unknown routing mode '" + mode + "'");
  edge.mode = *m;

  bool have_from = false;
  bool have_to = false;
  for (const XmlElement& child : el.children) {
    if (child.name == "from" || child.name == "to") {
      bool& seen = child.name == "from" ? have_from : have_to;
      if (seen) schema_error(child, "duplicate <" + child.name + ">");
      if (!edge.waypoints.empty()) schema_error(child, "anchors must precede waypoints");
      seen = true;
      (child.name == "from" ? edge.source : edge.target) = read_anchor(child);
    } else if (child.name == "pt") {
      check_attributes(child, {"x", "y"});
      check_leaf(child);
      edge.waypoints.push_back({number(child, "x"), number(child, "y")});
    } else {
      schema_error(child, "unknown element <" + child.name + "> in <edge>");
    }
  }
  if (!have_from || !have_to) schema_error(el, "<edge> needs <from> and <to>");
  return edge;
}

XmlAttributes anchor_attributes(const Anchor& a) {
  if (const auto* s = std::get_if<SpeciesAnchor>(&a)) {
    return {{"node", s->node},
            {"side", s->side ? std::string(side_name(*s->side)) : "auto"},
            {"offset", format_number(s->offset)}};
  }
  const auto& e = std::get<EdgeAnchor>(a);
  return {{"edge", e.edge}, {"t", format_number(e.t)}};
}

}  // namespace

SceneMap map_from_xml(const XmlElement& root, const ParseOptions& options) {
  if (root.name != "map") schema_error(root, "root element must be <map>, found <" + root.name + ">");
  check_attributes(root, {"version", "name", "created_by"});
  check_no_text(root);
  const std::string& version = required(root, "version");
  if (version != kSchemaVersion) {
    throw Error(ErrorCode::unsupported_version, "unsupported document version '" + version + "'",
                "line " + std::to_string(root.line));
  }

  SceneMap map;
  map.meta().name = optional_text(root, "name");
  map.meta().created_by = optional_text(root, "created_by");
  for (const XmlElement& child : root.children) {
    try {
      if (child.name == "node") {
        map.insert_node(read_node(child));
      } else if (child.name == "edge") {
        map.insert_edge(read_edge(child));
      } else {
        schema_error(child, "unknown element <" + child.name + "> in <map>");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_id || e.code() == ErrorCode::duplicate_id) {
        throw Error(e.code(), e.what(), e.detail() + " (line " + std::to_string(child.line) + ")");
      }
      throw;
    }
  }
  if (options.validate) {
    const auto violations = validate(map);
    if (!violations.empty()) {
      throw Error(violations.front().rule, violations.front().message, violations.front().id);
    }
  }
  return map;
}

SceneMap parse_map(std::string_view document, const ParseOptions& options) {
  return map_from_xml(parse_xml(document), options);
}

void require_valid(const SceneMap& map) {
  const auto violations = validate(map);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    throw Error(ErrorCode::invalid_map, "map is invalid: " + v.message,
                std::string(error_code_name(v.rule)) + " " + v.id);
  }
}

std::string serialize_map(const SceneMap& map) {
  require_valid(map);
  return serialize_map_unchecked(map);
}

std::string serialize_map_unchecked(const SceneMap& map) {
  XmlWriter w;
  const XmlAttributes meta{{"version", map.meta().schema_version},
                           {"name", map.meta().name},
                           {"created_by", map.meta().created_by}};
  if (map.nodes().empty() && map.edges().empty()) {
    w.leaf("map", meta);
    return w.finish();
  }
  w.open("map", meta);
  for (const auto& [id, n] : map.nodes()) {
    w.leaf("node", {{"id", id},
                    {"kind", std::string(species_kind_name(n.kind))},
                    {"label", n.label},
                    {"x", format_number(n.position.x)},
                    {"y", format_number(n.position.y)},
                    {"w", format_number(n.size.width)},
                    {"h", format_number(n.size.height)},
                    {"r", format_number(n.corner_radius)}});
  }
  for (const auto& [id, e] : map.edges()) {
    w.open("edge", {{"id", id},
                    {"kind", std::string(glyph_name(e.glyph))},
                    {"mode", std::string(routing_mode_name(e.mode))}});
    w.leaf("from", anchor_attributes(e.source));
    w.leaf("to", anchor_attributes(e.target));
    for (const Point& p : e.waypoints) w.leaf("pt", {{"x", format_number(p.x)}, {"y", format_number(p.y)}});
    w.close();
  }
  return w.finish();
}

}  // namespace mimgraph
