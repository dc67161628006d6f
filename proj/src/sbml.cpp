#include "mimgraph/sbml.hpp"

#include <map>

#include "mimgraph/map_xml.hpp"
#include "mimgraph/xml.hpp"

namespace mimgraph {

namespace {

constexpr std::string_view kCompartment = "cell";

/// Distinct SIds for every item; clashes after rewriting get a numeric suffix.
class SidTable {
 public:
  SidTable(const SceneMap& map, const std::string& model_id) {
    std::set<std::string> used{std::string(kCompartment), model_id};
    auto assign = [&](const ItemId& id) {
      std::string base = sbml_id(id);
      std::string sid = base;
      for (int i = 2; used.contains(sid); ++i) sid = base + "_" + std::to_string(i);
      used.insert(sid);
      sids_.emplace(id, sid);
    };
    for (const auto& [id, n] : map.nodes()) assign(id);
    for (const auto& [id, e] : map.edges()) assign(id);
  }

  const std::string& operator[](const ItemId& id) const { return sids_.at(id); }

 private:
  std::map<ItemId, std::string> sids_;
};

std::string anchored_item(const Anchor& a) {
  if (const auto* s = std::get_if<SpeciesAnchor>(&a)) return s->node;
  return std::get<EdgeAnchor>(a).edge;
}

}  // namespace

std::string sbml_id(std::string_view id) {
  std::string out(id);
  for (char& c : out) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) c = '_';
  }
  if (out.empty() || (out.front() >= '0' && out.front() <= '9')) out.insert(out.begin(), '_');
  return out;
}

std::string export_sbml(const SceneMap& map) {
  require_valid(map);
  const std::string model_id = sbml_id(map.meta().name.empty() ? "mim_map" : map.meta().name);
  const SidTable sid(map, model_id);

  // Contingencies grouped by the reaction they modulate; the rest go to the
  // model annotation.
  std::map<ItemId, std::vector<const InteractionEdge*>> modifiers;
  std::vector<const InteractionEdge*> loose;
  for (const auto& [id, e] : map.edges()) {
    if (map.category_of(e) != Category::contingency) continue;
    const auto* target = std::get_if<EdgeAnchor>(&e.target);
    const InteractionEdge* base = target ? map.find_edge(target->edge) : nullptr;
    if (base && map.category_of(*base) == Category::reaction) {
      modifiers[base->id].push_back(&e);
    } else {
      loose.push_back(&e);
    }
  }

  XmlWriter w;
  w.open("sbml", {{"xmlns", "http://www.sbml.org/sbml/level3/version2/core"},
                  {"level", "3"},
                  {"version", "2"}});
  w.open("model", {{"id", model_id},
                   {"name", map.meta().name}});
  if (!loose.empty()) {
    w.open("annotation");
    w.open("mim:contingencies", {{"xmlns:mim", std::string(kSbmlAnnotationNs)}});
    for (const InteractionEdge* e : loose) {
      w.leaf("mim:contingency", {{"id", sid[e->id]},
                                 {"glyph", std::string(glyph_name(e->glyph))},
                                 {"source", sid[anchored_item(e->source)]},
                                 {"target", sid[anchored_item(e->target)]},
                                 {"target_type", std::holds_alternative<SpeciesAnchor>(e->target)
                                                     ? "species"
                                                     : "interaction"}});
    }
    w.close();
    w.close();
  }

  w.open("listOfCompartments");
  w.leaf("compartment", {{"id", std::string(kCompartment)}, {"spatialDimensions", "3"}, {"size", "1"},
                         {"constant", "true"}});
  w.close();

  w.open("listOfSpecies");
  for (const auto& [id, n] : map.nodes()) {
    w.leaf("species", {{"id", sid[id]},
                       {"name", n.label},
                       {"compartment", std::string(kCompartment)},
                       {"initialAmount", "0"},
                       {"hasOnlySubstanceUnits", "false"},
                       {"boundaryCondition", "false"},
                       {"constant", "false"}});
  }
  w.close();

  w.open("listOfReactions");
  for (const auto& [id, e] : map.edges()) {
    if (map.category_of(e) != Category::reaction) continue;
    w.open("reaction", {{"id", sid[id]}, {"reversible", "false"}});
    w.open("annotation");
    w.leaf("mim:interaction", {{"xmlns:mim", std::string(kSbmlAnnotationNs)},
                               {"glyph", std::string(glyph_name(e.glyph))}});
    w.close();
    w.open("listOfReactants");
    w.leaf("speciesReference", {{"species", sid[anchored_item(e.source)]}, {"stoichiometry", "1"},
                                {"constant", "true"}});
    w.close();
    w.open("listOfProducts");
    w.leaf("speciesReference", {{"species", sid[anchored_item(e.target)]}, {"stoichiometry", "1"},
                                {"constant", "true"}});
    w.close();
    if (const auto it = modifiers.find(id); it != modifiers.end()) {
      w.open("listOfModifiers");
      for (const InteractionEdge* m : it->second) {
        w.open("modifierSpeciesReference", {{"id", sid[m->id]}, {"species", sid[anchored_item(m->source)]}});
        w.open("annotation");
        w.leaf("mim:contingency", {{"xmlns:mim", std::string(kSbmlAnnotationNs)},
                                   {"glyph", std::string(glyph_name(m->glyph))}});
        w.close();
        w.close();
      }
      w.close();
    }
    w.close();
  }
  w.close();
  return w.finish();
}

}  // namespace mimgraph
