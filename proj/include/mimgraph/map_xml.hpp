#pragma once

#include <string>
#include <string_view>

#include "mimgraph/scene.hpp"
#include "mimgraph/xml.hpp"

namespace mimgraph {

struct ParseOptions {
  /// Run `validate` and throw on the first violation. Off, only the
  /// document structure is checked.
  bool validate = true;
};

/// mimgraph-xml v1 reader. Errors: MalformedXml, SchemaViolation,
/// UnsupportedVersion, InvalidId, DuplicateId and, when validating, the
/// rule of the first violation (UnresolvedAnchor, RuleViolation, ...).
SceneMap parse_map(std::string_view document, const ParseOptions& options = {});

/// Same, from an already parsed element tree.
SceneMap map_from_xml(const XmlElement& root, const ParseOptions& options = {});

/// Canonical mimgraph-xml v1 document: ids sorted, shortest numbers.
/// Errors: InvalidMap (detail: first violation).
std::string serialize_map(const SceneMap& map);

/// As `serialize_map` without the validity check.
std::string serialize_map_unchecked(const SceneMap& map);

/// Throws InvalidMap naming the first violation, if any.
void require_valid(const SceneMap& map);

}  // namespace mimgraph
