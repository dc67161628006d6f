#include "mimgraph/error.hpp"

namespace mimgraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::invalid_id: return "InvalidId";
    case ErrorCode::invalid_geometry: return "InvalidGeometry";
    case ErrorCode::duplicate_id: return "DuplicateId";
    case ErrorCode::unknown_id: return "UnknownId";
    case ErrorCode::unresolved_anchor: return "UnresolvedAnchor";
    case ErrorCode::rule_violation: return "RuleViolation";
    case ErrorCode::contingency_cycle: return "ContingencyCycle";
    case ErrorCode::non_orthogonal: return "NonOrthogonal";
    case ErrorCode::endpoint_mismatch: return "EndpointMismatch";
    case ErrorCode::degenerate_terminals: return "DegenerateTerminals";
    case ErrorCode::routing_failed: return "RoutingFailed";
    case ErrorCode::unreachable: return "Unreachable";
    case ErrorCode::broken_chain: return "BrokenChain";
    case ErrorCode::invalid_map: return "InvalidMap";
    case ErrorCode::malformed_xml: return "MalformedXml";
    case ErrorCode::schema_violation: return "SchemaViolation";
    case ErrorCode::unsupported_version: return "UnsupportedVersion";
    case ErrorCode::unknown_map: return "UnknownMap";
    case ErrorCode::nothing_to_undo: return "NothingToUndo";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string detail)
    : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

}  // namespace mimgraph
