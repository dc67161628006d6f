#include "mimgraph/glyph.hpp"

namespace mimgraph {

std::string_view glyph_name(Glyph glyph) {
  switch (glyph) {
    case Glyph::covalent_modification: return "covalent_modification";
    case Glyph::non_covalent_binding: return "non_covalent_binding";
    case Glyph::stimulation: return "stimulation";
    case Glyph::inhibition: return "inhibition";
    case Glyph::transcription: return "transcription";
    case Glyph::cleavage: return "cleavage";
    case Glyph::degradation: return "degradation";
    case Glyph::catalysis: return "catalysis";
  }
  return "";
}

std::optional<Glyph> glyph_from_name(std::string_view name) {
  for (Glyph g : kAllGlyphs) {
    if (glyph_name(g) == name) return g;
  }
  return std::nullopt;
}

std::string_view category_name(Category category) {
  return category == Category::reaction ? "reaction" : "contingency";
}

CategoryTable::CategoryTable() {
  table_.fill(Category::reaction);
  assign(Glyph::stimulation, Category::contingency);
  assign(Glyph::inhibition, Category::contingency);
  assign(Glyph::catalysis, Category::contingency);
}

}  // namespace mimgraph
