#pragma once

#include <string>
#include <string_view>

#include "mimgraph/scene.hpp"

namespace mimgraph {

/// Namespace of the glyph annotations carried by SBML exports.
inline constexpr std::string_view kSbmlAnnotationNs = "urn:mimgraph:sbml-annotation:1";

/// `id` rewritten to an SBML SId: characters outside [A-Za-z0-9_] become '_'.
std::string sbml_id(std::string_view id);

/// SBML Level 3 Version 2 structural subset: one compartment, one species
/// per species node, one reaction per reaction edge (source as reactant,
/// target as product). Contingencies on a reaction become modifiers;
/// the rest are listed in a model annotation. Errors: InvalidMap.
std::string export_sbml(const SceneMap& map);

}  // namespace mimgraph
