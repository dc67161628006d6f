#include "mimgraph/routing_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mimgraph {

namespace {

int dir_slot(Direction d) { return static_cast<int>(d) - 1; }

int nearest_index(const std::vector<double>& values, double v) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (std::abs(values[i] - v) < std::abs(values[best] - v)) best = i;
  }
  return best;
}

bool increasing_around(const std::vector<double>& v, int i) {
  const int last = static_cast<int>(v.size()) - 1;
  return (i == 0 || v[i] > v[i - 1] + kGeometryTolerance) &&
         (i == last || v[i + 1] > v[i] + kGeometryTolerance);
}

/// Moves the line nearest to `value` onto it unless that line is `taken`
/// or the move would break the strict ordering. Returns the line index.
std::optional<int> snap_line(std::vector<double>& lines, double value, std::optional<int> taken) {
  const int i = nearest_index(lines, value);
  if (nearly_equal(lines[i], value)) return i;
  if (taken && *taken == i) return std::nullopt;
  const double old = lines[i];
  lines[i] = value;
  if (!increasing_around(lines, i)) {
    lines[i] = old;
    return std::nullopt;
  }
  return i;
}

/// Index c with lines[c] < v < lines[c + 1].
int bracket(const std::vector<double>& lines, double v) {
  for (int c = 0; c + 1 < static_cast<int>(lines.size()); ++c) {
    if (lines[c] < v && v < lines[c + 1]) return c;
  }
  throw Error(ErrorCode::routing_failed, "terminal lies outside the routing lattice");
}

bool line_crossed(const OrthoSegment& seg, const Polyline& line) {
  for (std::size_t i = 1; i < line.size(); ++i) {
    const Point a = line[i - 1];
    const Point b = line[i];
    if (same_point(a, b)) continue;
    if (!nearly_equal(a.x, b.x) && !nearly_equal(a.y, b.y)) continue;
    if (segments_cross(seg, OrthoSegment{a, b})) return true;
  }
  return false;
}

}  // namespace

Direction opposite(Direction d) {
  switch (d) {
    case Direction::north: return Direction::south;
    case Direction::south: return Direction::north;
    case Direction::east: return Direction::west;
    case Direction::west: return Direction::east;
    case Direction::none: break;
  }
  return Direction::none;
}

bool same_axis(Direction a, Direction b) {
  const bool av = a == Direction::north || a == Direction::south;
  const bool bv = b == Direction::north || b == Direction::south;
  return av == bv;
}

std::string_view attachment_name(TerminalAttachment a) {
  return a == TerminalAttachment::snapped ? "snapped" : "stub";
}

ObstacleSet collect_obstacles(const SceneMap& map, const std::set<ItemId>& exclude) {
  ObstacleSet out;
  for (const auto& [id, node] : map.nodes()) {
    if (!exclude.contains(id)) out.species.push_back(node.bounds());
  }
  for (const auto& [id, edge] : map.edges()) {
    if (!exclude.contains(id) && edge.waypoints.size() >= 2) out.lines.push_back(edge.waypoints);
  }
  return out;
}

StepCharges segment_charges(Point p, Point q, const ObstacleSet& obstacles) {
  const OrthoSegment seg{p, q};
  StepCharges charges;
  for (const Rect& r : obstacles.species) {
    if (segment_hits_rect(seg, r)) ++charges.species_overlaps;
  }
  for (const Polyline& line : obstacles.lines) {
    if (line_crossed(seg, line)) ++charges.line_crossings;
  }
  return charges;
}

std::size_t RoutingGrid::lattice_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const GridEdge& e) { return e.lattice; }));
}

std::optional<GridEdgeId> RoutingGrid::edge_towards(GridNodeId node, Direction dir) const {
  if (dir == Direction::none) return std::nullopt;
  const std::int32_t e = adjacency_[node][dir_slot(dir)];
  if (e < 0) return std::nullopt;
  return static_cast<GridEdgeId>(e);
}

GridNodeId RoutingGrid::other_end(GridEdgeId edge, GridNodeId from) const {
  const GridEdge& e = edges_[edge];
  return e.a == from ? e.b : e.a;
}

Direction RoutingGrid::step_direction(GridNodeId from, GridNodeId to) const {
  const Point a = nodes_[from].position;
  const Point b = nodes_[to].position;
  if (nearly_equal(a.y, b.y)) return b.x > a.x ? Direction::east : Direction::west;
  return b.y > a.y ? Direction::south : Direction::north;
}

Cost RoutingGrid::edge_cost(GridEdgeId edge, const CostModel& costs) const {
  const GridEdge& e = edges_[edge];
  return costs.base + costs.cross_line * e.line_crossings + costs.cross_species * e.species_overlaps;
}

GridNodeId RoutingGrid::add_node(GridNodeKind kind, int row, int col, Point p) {
  nodes_.push_back(GridNode{kind, row, col, p});
  adjacency_.push_back({-1, -1, -1, -1});
  return static_cast<GridNodeId>(nodes_.size() - 1);
}

void RoutingGrid::add_edge(GridNodeId a, GridNodeId b, bool lattice) {
  const auto id = static_cast<std::int32_t>(edges_.size());
  edges_.push_back(GridEdge{a, b, lattice, 0, 0});
  adjacency_[a][dir_slot(step_direction(a, b))] = id;
  adjacency_[b][dir_slot(step_direction(b, a))] = id;
}

RoutingGrid build_grid(const ObstacleSet& obstacles, Point source, Point dest, int n) {
  if (n < 2 || n > kMaxGridSize) {
    throw Error(ErrorCode::invalid_argument,
                "grid size must be in [2, " + std::to_string(kMaxGridSize) + "]");
  }
  if (!std::isfinite(source.x) || !std::isfinite(source.y) || !std::isfinite(dest.x) ||
      !std::isfinite(dest.y)) {
    throw Error(ErrorCode::invalid_argument, "terminal coordinates must be finite");
  }
  if (same_point(source, dest)) {
    throw Error(ErrorCode::degenerate_terminals, "source and destination coincide");
  }

  const double min_x = std::min(source.x, dest.x);
  const double min_y = std::min(source.y, dest.y);
  const double span_x = std::abs(source.x - dest.x);
  const double span_y = std::abs(source.y - dest.y);
  const double margin = 0.25 * std::max({span_x, span_y, 20.0});

  RoutingGrid grid;
  grid.n_ = n;
  grid.xs_.resize(n);
  grid.ys_.resize(n);
  const double step_x = (span_x + 2.0 * margin) / (n - 1);
  const double step_y = (span_y + 2.0 * margin) / (n - 1);
  for (int i = 0; i < n; ++i) {
    grid.xs_[i] = min_x - margin + i * step_x;
    grid.ys_[i] = min_y - margin + i * step_y;
  }

  // The source has the whole lattice to itself and always snaps.
  const int src_col = *snap_line(grid.xs_, source.x, std::nullopt);
  const int src_row = *snap_line(grid.ys_, source.y, std::nullopt);
  const std::optional<int> dst_col = snap_line(grid.xs_, dest.x, src_col);
  const std::optional<int> dst_row = snap_line(grid.ys_, dest.y, src_row);

  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) grid.add_node(GridNodeKind::lattice, r, c, {grid.xs_[c], grid.ys_[r]});
  }
  grid.source_ = grid.lattice_node(src_row, src_col);

  // Lattice edge to be split by an extra node, if any.
  struct Split {
    bool horizontal;
    int line;   // row for horizontal, column for vertical
    int index;  // lower column / row of the split edge
    GridNodeId node;
  };
  std::optional<Split> split;

  if (dst_col && dst_row) {
    grid.dest_ = grid.lattice_node(*dst_row, *dst_col);
  } else {
    grid.dest_attachment_ = TerminalAttachment::stub;
    if (dst_row) {
      const GridNodeId d = grid.add_node(GridNodeKind::terminal, -1, -1, {dest.x, grid.ys_[*dst_row]});
      split = Split{true, *dst_row, bracket(grid.xs_, dest.x), d};
      grid.dest_ = d;
    } else if (dst_col) {
      const GridNodeId d = grid.add_node(GridNodeKind::terminal, -1, -1, {grid.xs_[*dst_col], dest.y});
      split = Split{false, *dst_col, bracket(grid.ys_, dest.y), d};
      grid.dest_ = d;
    } else {
      const int row = nearest_index(grid.ys_, dest.y);
      const GridNodeId d = grid.add_node(GridNodeKind::terminal, -1, -1, dest);
      const GridNodeId corner = grid.add_node(GridNodeKind::corner, -1, -1, {dest.x, grid.ys_[row]});
      split = Split{true, row, bracket(grid.xs_, dest.x), corner};
      grid.dest_ = d;
    }
  }

  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n && !(split && split->horizontal && split->line == r && split->index == c)) {
        grid.add_edge(grid.lattice_node(r, c), grid.lattice_node(r, c + 1), true);
      }
      if (r + 1 < n && !(split && !split->horizontal && split->line == c && split->index == r)) {
        grid.add_edge(grid.lattice_node(r, c), grid.lattice_node(r + 1, c), true);
      }
    }
  }
  if (split) {
    const GridNodeId lo = split->horizontal ? grid.lattice_node(split->line, split->index)
                                            : grid.lattice_node(split->index, split->line);
    const GridNodeId hi = split->horizontal ? grid.lattice_node(split->line, split->index + 1)
                                            : grid.lattice_node(split->index + 1, split->line);
    grid.add_edge(lo, split->node, false);
    grid.add_edge(split->node, hi, false);
    if (split->node != grid.dest_) grid.add_edge(split->node, grid.dest_, false);
  }

  // Only obstacles overlapping the lattice can be touched by a grid step.
  const Rect extent{grid.xs_.front(), grid.ys_.front(), grid.xs_.back(), grid.ys_.back()};
  ObstacleSet local;
  for (const Rect& r : obstacles.species) {
    if (r.intersects(extent)) local.species.push_back(r);
  }
  for (const Polyline& line : obstacles.lines) {
    if (!line.empty() && polyline_bounds(line).intersects(extent)) local.lines.push_back(line);
  }
  for (GridEdge& e : grid.edges_) {
    const StepCharges c = segment_charges(grid.nodes_[e.a].position, grid.nodes_[e.b].position, local);
    e.line_crossings = c.line_crossings;
    e.species_overlaps = c.species_overlaps;
  }
  return grid;
}

RoutingGrid build_grid(const SceneMap& scene, Point source, Point dest, int n) {
  return build_grid(collect_obstacles(scene), source, dest, n);
}

}  // namespace mimgraph
