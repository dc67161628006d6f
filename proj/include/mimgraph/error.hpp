#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mimgraph {

enum class ErrorCode {
  invalid_argument,
  invalid_id,
  invalid_geometry,
  duplicate_id,
  unknown_id,
  unresolved_anchor,
  rule_violation,
  contingency_cycle,
  non_orthogonal,
  endpoint_mismatch,
  degenerate_terminals,
  routing_failed,
  unreachable,
  broken_chain,
  invalid_map,
  malformed_xml,
  schema_violation,
  unsupported_version,
  unknown_map,
  nothing_to_undo,
};

/// Stable CamelCase name used in CLI output, HTTP error bodies and violations.
std::string_view error_code_name(ErrorCode code);

/// The single exception type thrown by the library. `detail` carries the
/// offending id or parse location when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace mimgraph
