#pragma once

#include <array>
#include <string>
#include <string_view>

#include "mimgraph/glyph.hpp"
#include "mimgraph/scene.hpp"

namespace mimgraph {

/// Terminal decoration drawn for one glyph.
struct MarkerShape {
  Glyph glyph;
  std::string_view shape;  // short name reported by the glyph catalog
  std::string_view path;   // SVG path data in a 10x10 marker box
  double ref_x;            // point of the path that sits on the line end
  bool filled;
  bool both_ends;  // also drawn at the start of the line
};

/// The marker style table; one entry per glyph, in `kAllGlyphs` order.
const std::array<MarkerShape, kGlyphCount>& marker_shapes();
const MarkerShape& marker_for(Glyph glyph);

/// `marker-<glyph name>`.
std::string marker_id(Glyph glyph);

struct SvgStyle {
  double margin = 20.0;
  double stroke_width = 1.5;
  double font_size = 12.0;
  std::string species_fill = "#fdf6e3";
  std::string stroke = "#222222";
};

/// SVG 1.1 drawing of the map. Errors: InvalidMap.
std::string render_svg(const SceneMap& map, const SvgStyle& style = {});

}  // namespace mimgraph
