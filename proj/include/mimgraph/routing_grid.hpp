#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "mimgraph/cost_model.hpp"
#include "mimgraph/geometry.hpp"
#include "mimgraph/scene.hpp"

namespace mimgraph {

using GridNodeId = std::uint32_t;
using GridEdgeId = std::uint32_t;

inline constexpr GridNodeId kNoGridNode = ~GridNodeId{0};

/// Compass direction of a grid step; `none` tags the search roots.
enum class Direction : std::uint8_t { none = 0, north, east, south, west };

Direction opposite(Direction d);
bool same_axis(Direction a, Direction b);

/// How a terminal joined the lattice: moved onto a lattice line pair, or
/// inserted as an extra node that splits a lattice edge.
enum class TerminalAttachment { snapped, stub };

std::string_view attachment_name(TerminalAttachment a);

enum class GridNodeKind { lattice, terminal, corner };

struct GridNode {
  GridNodeKind kind = GridNodeKind::lattice;
  int row = -1;  // lattice coordinates; -1 for extra nodes
  int col = -1;
  Point position;
};

struct GridEdge {
  GridNodeId a = kNoGridNode;
  GridNodeId b = kNoGridNode;
  bool lattice = true;
  int line_crossings = 0;    // interaction lines crossed by this step
  int species_overlaps = 0;  // species boxes touched by this step
};

/// Geometry the router must avoid.
struct ObstacleSet {
  std::vector<Rect> species;
  std::vector<Polyline> lines;
};

/// Every species box and routed edge of `map` except the listed ids.
ObstacleSet collect_obstacles(const SceneMap& map, const std::set<ItemId>& exclude = {});

struct StepCharges {
  int line_crossings = 0;
  int species_overlaps = 0;
};

/// Number of distinct lines crossed and species boxes hit by segment pq.
StepCharges segment_charges(Point p, Point q, const ObstacleSet& obstacles);

/// The weighted search graph for one routing request: an n x n lattice over
/// the inflated bounding box of the two terminals, plus at most two extra
/// nodes when the destination cannot be snapped.
class RoutingGrid {
 public:
  int n() const noexcept { return n_; }
  std::span<const double> columns() const noexcept { return xs_; }
  std::span<const double> rows() const noexcept { return ys_; }
  const std::vector<GridNode>& nodes() const noexcept { return nodes_; }
  const std::vector<GridEdge>& edges() const noexcept { return edges_; }

  GridNodeId source() const noexcept { return source_; }
  GridNodeId dest() const noexcept { return dest_; }
  TerminalAttachment source_attachment() const noexcept { return source_attachment_; }
  TerminalAttachment dest_attachment() const noexcept { return dest_attachment_; }

  std::size_t lattice_edge_count() const;
  GridNodeId lattice_node(int row, int col) const {
    return static_cast<GridNodeId>(row * n_ + col);
  }
  Point position(GridNodeId node) const { return nodes_[node].position; }

  /// Edge leaving `node` in direction `dir`, if there is one.
  std::optional<GridEdgeId> edge_towards(GridNodeId node, Direction dir) const;
  GridNodeId other_end(GridEdgeId edge, GridNodeId from) const;
  /// Compass direction of the step from -> to (adjacent nodes).
  Direction step_direction(GridNodeId from, GridNodeId to) const;
  Cost edge_cost(GridEdgeId edge, const CostModel& costs) const;

 private:
  friend RoutingGrid build_grid(const ObstacleSet&, Point, Point, int);

  GridNodeId add_node(GridNodeKind kind, int row, int col, Point p);
  void add_edge(GridNodeId a, GridNodeId b, bool lattice);

  int n_ = 0;
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<GridNode> nodes_;
  std::vector<GridEdge> edges_;
  std::vector<std::array<std::int32_t, 4>> adjacency_;  // N, E, S, W
  GridNodeId source_ = kNoGridNode;
  GridNodeId dest_ = kNoGridNode;
  TerminalAttachment source_attachment_ = TerminalAttachment::snapped;
  TerminalAttachment dest_attachment_ = TerminalAttachment::snapped;
};

inline constexpr int kMaxGridSize = 64;

/// Lattice over the terminals' bounding box inflated on every side by
/// 0.25 * max(width, height, 20). The source always snaps: the nearest
/// column and row are moved onto it. The destination snaps the same way
/// unless its nearest line is already taken by the source, in which case it
/// splits the lattice edge it lies on (or hangs off a split point through a
/// short vertical stub). Errors: DegenerateTerminals, InvalidArgument.
RoutingGrid build_grid(const ObstacleSet& obstacles, Point source, Point dest, int n);

/// Same, with every item of `scene` as an obstacle.
RoutingGrid build_grid(const SceneMap& scene, Point source, Point dest, int n);

}  // namespace mimgraph
