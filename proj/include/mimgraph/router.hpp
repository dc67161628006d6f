#pragma once

#include <optional>
#include <vector>

#include "mimgraph/cost_model.hpp"
#include "mimgraph/indexed_heap.hpp"
#include "mimgraph/routing_grid.hpp"
#include "mimgraph/scene.hpp"

namespace mimgraph {

/// Search label: a grid node together with the direction of the step that
/// entered it. The paper-faithful search only uses `Direction::none`.
using LabelId = std::uint32_t;

inline constexpr LabelId kNoLabel = ~LabelId{0};
inline constexpr std::uint32_t kLabelsPerNode = 5;

constexpr LabelId make_label(GridNodeId node, Direction dir) {
  return node * kLabelsPerNode + static_cast<LabelId>(dir);
}
constexpr GridNodeId label_node(LabelId label) { return label / kLabelsPerNode; }
constexpr Direction label_direction(LabelId label) {
  return static_cast<Direction>(label % kLabelsPerNode);
}

/// True iff step p->q changes axis relative to step pred_p->p.
bool bend_check(const RoutingGrid& grid, std::optional<GridNodeId> pred_p, GridNodeId p, GridNodeId q);

/// Cost of stepping p->q when p was entered from pred_p.
Cost edge_step_cost(const RoutingGrid& grid, std::optional<GridNodeId> pred_p, GridNodeId p,
                    GridNodeId q, const CostModel& costs);

/// Cost of taking `edge` in direction `next` after arriving moving `arrived`.
Cost edge_step_cost(const RoutingGrid& grid, GridEdgeId edge, Direction arrived, Direction next,
                    const CostModel& costs);

enum class UpdateOutcome { inserted, decreased, unchanged };

/// One direction of the bidirectional search.
struct SearchFrontier {
  explicit SearchFrontier(std::size_t labels)
      : dist(labels, kUnreached), pred(labels, kNoLabel), scanned(labels, false), heap(labels) {}

  /// Offers `cost` for label q, reached from p. Scanned labels are final.
  UpdateOutcome update(LabelId q, Cost cost, LabelId p);

  std::vector<Cost> dist;
  std::vector<LabelId> pred;  // forward: previous label; reverse: next label
  std::vector<bool> scanned;
  IndexedHeap heap;
  std::vector<Cost> scan_keys;  // distance of each label at scan time, in order
};

struct SearchOutcome {
  LabelId meeting = kNoLabel;
  /// exact: the optimal cost. paper_faithful: d_f + d_r at the meeting node,
  /// which may under-count the junction bend.
  Cost cost = kUnreached;
  SearchFrontier forward;
  SearchFrontier reverse;
};

/// Errors: Unreachable.
SearchOutcome bidi_search(const RoutingGrid& grid, const CostModel& costs, SearchMode mode);

/// Grid node sequence source -> dest through `meeting`; a loop formed where
/// the two half paths overlap is cut out. Errors: BrokenChain.
std::vector<GridNodeId> reconstruct_path(const RoutingGrid& grid, LabelId meeting,
                                         const std::vector<LabelId>& forward_pred,
                                         const std::vector<LabelId>& reverse_pred);
std::vector<GridNodeId> reconstruct_path(const RoutingGrid& grid, const SearchOutcome& outcome);

struct RouteCounts {
  int segments = 0;  // grid steps before simplification
  int bends = 0;
  int line_crossings = 0;
  int species_overlaps = 0;

  friend bool operator==(const RouteCounts&, const RouteCounts&) = default;
};

/// Counts and total cost of a node path on `grid`.
RouteCounts count_path(const RoutingGrid& grid, const std::vector<GridNodeId>& path);
Cost path_cost(const RouteCounts& counts, const CostModel& costs);

struct RouteResult {
  Polyline waypoints;
  Cost total_cost = 0;
  RouteCounts counts;
  int grid_n = 0;
  TerminalAttachment source_attachment = TerminalAttachment::snapped;
  TerminalAttachment dest_attachment = TerminalAttachment::snapped;
  std::vector<GridNodeId> grid_path;

  friend bool operator==(const RouteResult&, const RouteResult&) = default;
};

/// Routes between two scene points around `obstacles`.
/// Errors: DegenerateTerminals, InvalidArgument, RoutingFailed.
RouteResult route_between(const ObstacleSet& obstacles, Point source, Point dest,
                          const RouteOptions& options = {});

/// Routes between two anchors of `scene`. Everything in the scene is an
/// obstacle except the anchored items and `options.ignore_edges`.
/// Errors: UnresolvedAnchor, DegenerateTerminals, InvalidArgument, RoutingFailed.
RouteResult route(const SceneMap& scene, const Anchor& source, const Anchor& target,
                  const RouteOptions& options = {});

}  // namespace mimgraph
