#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace mimgraph {

/// Interaction glyphs of the MIM notation. Names returned by `glyph_name`
/// are stable and used by every file format; append new glyphs at the end.
enum class Glyph {
  covalent_modification,
  non_covalent_binding,
  stimulation,
  inhibition,
  transcription,
  cleavage,
  degradation,
  catalysis,
};

inline constexpr std::size_t kGlyphCount = 8;

inline constexpr std::array<Glyph, kGlyphCount> kAllGlyphs = {
    Glyph::covalent_modification, Glyph::non_covalent_binding, Glyph::stimulation,
    Glyph::inhibition,            Glyph::transcription,        Glyph::cleavage,
    Glyph::degradation,           Glyph::catalysis,
};

enum class Category { reaction, contingency };

std::string_view glyph_name(Glyph glyph);
std::optional<Glyph> glyph_from_name(std::string_view name);
std::string_view category_name(Category category);

/// Glyph -> category assignment. Reactions join two species; contingencies
/// start at a species and may end on a species or on another interaction.
class CategoryTable {
 public:
  /// stimulation, inhibition and catalysis are contingencies; the rest are
  /// reactions.
  CategoryTable();

  Category category_of(Glyph glyph) const { return table_[static_cast<std::size_t>(glyph)]; }
  void assign(Glyph glyph, Category category) { table_[static_cast<std::size_t>(glyph)] = category; }

  friend bool operator==(const CategoryTable&, const CategoryTable&) = default;

 private:
  std::array<Category, kGlyphCount> table_{};
};

}  // namespace mimgraph
