#include "mimgraph/svg.hpp"

#include <algorithm>

#include "mimgraph/map_xml.hpp"
#include "mimgraph/xml.hpp"

namespace mimgraph {

namespace {

// Paths are drawn pointing right (+x), the line end at ref_x, y = 5.
constexpr std::array<MarkerShape, kGlyphCount> kMarkers{{
    {Glyph::covalent_modification, "barbed_arrow", "M0,0 L10,5 L0,10 L3,5 Z", 10.0, true, false},
    {Glyph::non_covalent_binding, "double_barb", "M0,0 L10,5 L0,10", 10.0, false, true},
    {Glyph::stimulation, "open_arrow", "M0,0 L10,5 L0,10 Z", 10.0, false, false},
    {Glyph::inhibition, "bar", "M8,0 L8,10", 8.0, false, false},
    {Glyph::transcription, "bent_arrow", "M0,0 L10,5 L0,10 M0,5 L10,5", 10.0, false, false},
    {Glyph::cleavage, "slashed_arrow", "M2,0 L10,5 L2,10 M0,10 L4,0", 10.0, false, false},
    {Glyph::degradation, "null_set", "M1,5 A4,4 0 1,0 9,5 A4,4 0 1,0 1,5 M1,10 L9,0", 1.0, false, false},
    {Glyph::catalysis, "open_circle", "M1,5 A4,4 0 1,0 9,5 A4,4 0 1,0 1,5", 9.0, false, false},
}};

std::string points_attr(const Polyline& pts) {
  std::string out;
  for (const Point& p : pts) {
    if (!out.empty()) out += ' ';
    out += format_number(p.x) + "," + format_number(p.y);
  }
  return out;
}

}  // namespace

const std::array<MarkerShape, kGlyphCount>& marker_shapes() { return kMarkers; }

const MarkerShape& marker_for(Glyph glyph) { return kMarkers[static_cast<std::size_t>(glyph)]; }

std::string marker_id(Glyph glyph) { return "marker-" + std::string(glyph_name(glyph)); }

std::string render_svg(const SceneMap& map, const SvgStyle& style) {
  require_valid(map);

  Rect box{0.0, 0.0, 0.0, 0.0};
  bool any = false;
  auto grow = [&](const Rect& r) {
    if (!any) {
      box = r;
      any = true;
      return;
    }
    box.left = std::min(box.left, r.left);
    box.top = std::min(box.top, r.top);
    box.right = std::max(box.right, r.right);
    box.bottom = std::max(box.bottom, r.bottom);
  };
  for (const auto& [id, n] : map.nodes()) grow(n.bounds());
  for (const auto& [id, e] : map.edges()) grow(polyline_bounds(e.waypoints));
  box.left -= style.margin;
  box.top -= style.margin;
  box.right += style.margin;
  box.bottom += style.margin;
  const double width = box.right - box.left;
  const double height = box.bottom - box.top;

  XmlWriter w;
  w.open("svg", {{"xmlns", "http://www.w3.org/2000/svg"},
                 {"version", "1.1"},
                 {"width", format_number(width)},
                 {"height", format_number(height)},
                 {"viewBox", format_number(box.left) + " " + format_number(box.top) + " " +
                                 format_number(width) + " " + format_number(height)}});
  w.text_element("title", {}, map.meta().name);

  w.open("defs");
  for (const MarkerShape& m : kMarkers) {
    w.open("marker", {{"id", marker_id(m.glyph)},
                      {"viewBox", "0 0 10 10"},
                      {"refX", format_number(m.ref_x)},
                      {"refY", "5"},
                      {"markerWidth", "8"},
                      {"markerHeight", "8"},
                      {"markerUnits", "userSpaceOnUse"},
                      {"orient", m.both_ends ? "auto-start-reverse" : "auto"}});
    w.leaf("path", {{"d", std::string(m.path)},
                    {"fill", m.filled ? style.stroke : "none"},
                    {"stroke", style.stroke},
                    {"stroke-width", "1.2"}});
    w.close();
  }
  w.close();

  w.open("g", {{"class", "edges"}});
  for (const auto& [id, e] : map.edges()) {
    const MarkerShape& m = marker_for(e.glyph);
    const std::string url = "url(#" + marker_id(e.glyph) + ")";
    XmlAttributes attrs{{"id", id},
                        {"class", "edge " + std::string(glyph_name(e.glyph))},
                        {"points", points_attr(e.waypoints)},
                        {"fill", "none"},
                        {"stroke", style.stroke},
                        {"stroke-width", format_number(style.stroke_width)}};
    if (m.both_ends) attrs.emplace_back("marker-start", url);
    attrs.emplace_back("marker-end", url);
    w.leaf("polyline", attrs);
  }
  w.close();

  w.open("g", {{"class", "species"}});
  for (const auto& [id, n] : map.nodes()) {
    const Point c = n.center();
    const double rx = n.kind == SpeciesKind::dna ? 0.0 : n.corner_radius;
    w.open("g", {{"id", id}, {"class", "species " + std::string(species_kind_name(n.kind))}});
    w.leaf("rect", {{"x", format_number(n.position.x)},
                    {"y", format_number(n.position.y)},
                    {"width", format_number(n.size.width)},
                    {"height", format_number(n.size.height)},
                    {"rx", format_number(rx)},
                    {"ry", format_number(rx)},
                    {"fill", style.species_fill},
                    {"stroke", style.stroke},
                    {"stroke-width", format_number(style.stroke_width)}});
    w.text_element("text",
                   {{"x", format_number(c.x)},
                    {"y", format_number(c.y)},
                    {"text-anchor", "middle"},
                    {"dominant-baseline", "central"},
                    {"font-family", "sans-serif"},
                    {"font-size", format_number(style.font_size)}},
                   n.label);
    w.close();
  }
  w.close();
  return w.finish();
}

}  // namespace mimgraph
