#pragma once

#include <json.hpp>

#include "mimgraph/scene.hpp"

namespace mimgraph {

using Json = nlohmann::json;

// JSON mirror of mimgraph-xml v1: the same names, numbers as numbers.

Json to_json(const SpeciesNode& node);
Json to_json(const InteractionEdge& edge);
Json to_json(const Anchor& anchor);
Json to_json(const SceneMap& map);

/// Field readers for request bodies. Errors: InvalidArgument naming the field.
Anchor anchor_from_json(const Json& j);
Polyline points_from_json(const Json& j);
double number_field(const Json& j, const char* key);
double number_field(const Json& j, const char* key, double fallback);
std::string string_field(const Json& j, const char* key);
std::string string_field(const Json& j, const char* key, const std::string& fallback);

}  // namespace mimgraph
