#pragma once

#include <cstdint>
#include <set>
#include <string>

namespace mimgraph {

/// Combinatorial path cost. Integral so that optimality checks are exact.
using Cost = std::int64_t;

/// "Never reached" distance label.
inline constexpr Cost kUnreached = Cost{1} << 52;

/// Per-step charges of the routing search. All must be non-negative.
struct CostModel {
  Cost base = 5;             // every grid edge, regardless of its length
  Cost cross_line = 20;      // per interaction line crossed by a step
  Cost bend = 20;            // per 90-degree turn
  Cost cross_species = 2000; // per species box touched by a step
};

enum class SearchMode {
  /// Bidirectional Dijkstra with the best-meeting-cost stopping rule.
  exact,
  /// One-label-per-node search that stops on the first frontier overlap,
  /// exactly like the original MIMTool routine.
  paper_faithful,
};

inline constexpr int kDefaultGridSize = 6;

struct RouteOptions {
  int grid_n = kDefaultGridSize;
  SearchMode mode = SearchMode::exact;
  CostModel costs{};
  /// Interaction edges that are not obstacles for this request.
  std::set<std::string> ignore_edges{};
};

}  // namespace mimgraph
