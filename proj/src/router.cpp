#include "mimgraph/router.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace mimgraph {

namespace {

constexpr std::array<Direction, 4> kCompass{Direction::north, Direction::east, Direction::south,
                                            Direction::west};

class BidiSearch {
 public:
  BidiSearch(const RoutingGrid& grid, const CostModel& costs)
      : grid_(grid),
        costs_(costs),
        out_{kNoLabel, kUnreached, SearchFrontier(grid.nodes().size() * kLabelsPerNode),
             SearchFrontier(grid.nodes().size() * kLabelsPerNode)} {}

  SearchOutcome run_exact() {
    out_.forward.update(make_label(grid_.source(), Direction::none), 0, kNoLabel);
    for (Direction a : kCompass) {
      if (grid_.edge_towards(grid_.dest(), opposite(a))) {
        out_.reverse.update(make_label(grid_.dest(), a), 0, kNoLabel);
      }
    }
    for (;;) {
      if (done()) break;
      if (!out_.forward.heap.empty()) expand_forward(scan(out_.forward));
      if (done()) break;
      if (!out_.reverse.heap.empty()) expand_reverse(scan(out_.reverse));
    }
    if (out_.cost >= kUnreached) throw Error(ErrorCode::unreachable, "terminals are not connected");
    return std::move(out_);
  }

  SearchOutcome run_paper() {
    out_.forward.update(make_label(grid_.source(), Direction::none), 0, kNoLabel);
    out_.reverse.update(make_label(grid_.dest(), Direction::none), 0, kNoLabel);
    for (;;) {
      paper_step(out_.forward);
      paper_step(out_.reverse);
      const auto& hf = out_.forward.heap;
      const auto& hr = out_.reverse.heap;
      if (!hr.empty() && out_.forward.scanned[hr.top()]) {
        out_.meeting = hr.top();
        break;
      }
      if (!hf.empty() && out_.reverse.scanned[hf.top()]) {
        out_.meeting = hf.top();
        break;
      }
    }
    out_.cost = out_.forward.dist[out_.meeting] + out_.reverse.dist[out_.meeting];
    return std::move(out_);
  }

 private:
  static Cost top_key(const SearchFrontier& f) {
    return f.heap.empty() ? kUnreached : f.heap.top_key();
  }

  bool done() const { return top_key(out_.forward) + top_key(out_.reverse) >= out_.cost; }

  static LabelId scan(SearchFrontier& f) {
    const LabelId l = f.heap.pop();
    f.scanned[l] = true;
    f.scan_keys.push_back(f.dist[l]);
    return l;
  }

  void offer_meeting(LabelId l) {
    const Cost total = out_.forward.dist[l] + out_.reverse.dist[l];
    if (total < out_.cost) {
      out_.cost = total;
      out_.meeting = l;
    }
  }

  void expand_forward(LabelId from) {
    const GridNodeId v = label_node(from);
    const Direction arrived = label_direction(from);
    for (Direction d : kCompass) {
      if (arrived != Direction::none && d == opposite(arrived)) continue;
      const auto e = grid_.edge_towards(v, d);
      if (!e) continue;
      const LabelId to = make_label(grid_.other_end(*e, v), d);
      const Cost cost = out_.forward.dist[from] + edge_step_cost(grid_, *e, arrived, d, costs_);
      if (out_.forward.update(to, cost, from) != UpdateOutcome::unchanged &&
          out_.reverse.dist[to] < kUnreached) {
        offer_meeting(to);
      }
    }
  }

  // `from` = (w, d): the remaining path leaves w after arriving moving d.
  // Its reverse neighbours are the labels (v, a) one step back along d.
  void expand_reverse(LabelId from) {
    const GridNodeId w = label_node(from);
    const Direction d = label_direction(from);
    const auto e = grid_.edge_towards(w, opposite(d));
    if (!e) return;
    const GridNodeId v = grid_.other_end(*e, w);
    auto relax = [&](Direction a) {
      const LabelId to = make_label(v, a);
      const Cost cost = out_.reverse.dist[from] + edge_step_cost(grid_, *e, a, d, costs_);
      if (out_.reverse.update(to, cost, from) != UpdateOutcome::unchanged &&
          out_.forward.dist[to] < kUnreached) {
        offer_meeting(to);
      }
    };
    if (v == grid_.source()) relax(Direction::none);
    for (Direction a : kCompass) {
      if (a == opposite(d) || !grid_.edge_towards(v, opposite(a))) continue;
      relax(a);
    }
  }

  // One delete-min plus neighbour updates on node labels.
  void paper_step(SearchFrontier& f) {
    if (f.heap.empty()) throw Error(ErrorCode::unreachable, "search queue emptied before meeting");
    const LabelId l = scan(f);
    const GridNodeId p = label_node(l);
    std::optional<GridNodeId> pred;
    if (f.pred[l] != kNoLabel) pred = label_node(f.pred[l]);
    for (Direction d : kCompass) {
      const auto e = grid_.edge_towards(p, d);
      if (!e) continue;
      const GridNodeId q = grid_.other_end(*e, p);
      f.update(make_label(q, Direction::none), f.dist[l] + edge_step_cost(grid_, pred, p, q, costs_), l);
    }
  }

  const RoutingGrid& grid_;
  const CostModel& costs_;
  SearchOutcome out_;
};

void remove_loops(std::vector<GridNodeId>& path, std::size_t node_count) {
  std::vector<std::int64_t> at(node_count, -1);
  std::vector<GridNodeId> out;
  for (GridNodeId v : path) {
    if (at[v] >= 0) {
      const auto keep = static_cast<std::size_t>(at[v]) + 1;
      for (std::size_t i = keep; i < out.size(); ++i) at[out[i]] = -1;
      out.resize(keep);
      continue;
    }
    at[v] = static_cast<std::int64_t>(out.size());
    out.push_back(v);
  }
  path = std::move(out);
}

}  // namespace

bool bend_check(const RoutingGrid& grid, std::optional<GridNodeId> pred_p, GridNodeId p, GridNodeId q) {
  if (!pred_p) return false;
  return !same_axis(grid.step_direction(*pred_p, p), grid.step_direction(p, q));
}

Cost edge_step_cost(const RoutingGrid& grid, std::optional<GridNodeId> pred_p, GridNodeId p,
                    GridNodeId q, const CostModel& costs) {
  const auto e = grid.edge_towards(p, grid.step_direction(p, q));
  if (!e || grid.other_end(*e, p) != q) {
    throw Error(ErrorCode::invalid_argument, "nodes are not adjacent on the routing grid");
  }
  return grid.edge_cost(*e, costs) + (bend_check(grid, pred_p, p, q) ? costs.bend : 0);
}

Cost edge_step_cost(const RoutingGrid& grid, GridEdgeId edge, Direction arrived, Direction next,
                    const CostModel& costs) {
  const bool bend = arrived != Direction::none && !same_axis(arrived, next);
  return grid.edge_cost(edge, costs) + (bend ? costs.bend : 0);
}

UpdateOutcome SearchFrontier::update(LabelId q, Cost cost, LabelId p) {
  if (scanned[q] || dist[q] <= cost) return UpdateOutcome::unchanged;
  const bool first = dist[q] >= kUnreached;
  dist[q] = cost;
  pred[q] = p;
  if (first) {
    heap.insert(q, cost);
    return UpdateOutcome::inserted;
  }
  heap.decrease_key(q, cost);
  return UpdateOutcome::decreased;
}

SearchOutcome bidi_search(const RoutingGrid& grid, const CostModel& costs, SearchMode mode) {
  BidiSearch search(grid, costs);
  return mode == SearchMode::exact ? search.run_exact() : search.run_paper();
}

std::vector<GridNodeId> reconstruct_path(const RoutingGrid& grid, LabelId meeting,
                                         const std::vector<LabelId>& forward_pred,
                                         const std::vector<LabelId>& reverse_pred) {
  const std::size_t limit = forward_pred.size();
  if (meeting == kNoLabel || meeting >= limit) {
    throw Error(ErrorCode::broken_chain, "no meeting label");
  }
  std::vector<GridNodeId> path;
  for (LabelId l = meeting; l != kNoLabel; l = forward_pred[l]) {
    if (path.size() > limit) throw Error(ErrorCode::broken_chain, "forward chain does not terminate");
    path.push_back(label_node(l));
  }
  if (path.back() != grid.source()) {
    throw Error(ErrorCode::broken_chain, "forward chain does not reach the source");
  }
  std::reverse(path.begin(), path.end());
  for (LabelId l = reverse_pred[meeting]; l != kNoLabel; l = reverse_pred[l]) {
    if (path.size() > 2 * limit) throw Error(ErrorCode::broken_chain, "reverse chain does not terminate");
    path.push_back(label_node(l));
  }
  if (path.back() != grid.dest()) {
    throw Error(ErrorCode::broken_chain, "reverse chain does not reach the destination");
  }
  remove_loops(path, grid.nodes().size());
  return path;
}

std::vector<GridNodeId> reconstruct_path(const RoutingGrid& grid, const SearchOutcome& outcome) {
  return reconstruct_path(grid, outcome.meeting, outcome.forward.pred, outcome.reverse.pred);
}

RouteCounts count_path(const RoutingGrid& grid, const std::vector<GridNodeId>& path) {
  RouteCounts counts;
  Direction prev = Direction::none;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Direction d = grid.step_direction(path[i - 1], path[i]);
    const auto e = grid.edge_towards(path[i - 1], d);
    if (!e || grid.other_end(*e, path[i - 1]) != path[i]) {
      throw Error(ErrorCode::invalid_argument, "path steps between non-adjacent nodes");
    }
    const GridEdge& edge = grid.edges()[*e];
    ++counts.segments;
    counts.line_crossings += edge.line_crossings;
    counts.species_overlaps += edge.species_overlaps;
    if (prev != Direction::none && !same_axis(prev, d)) ++counts.bends;
    prev = d;
  }
  return counts;
}

Cost path_cost(const RouteCounts& counts, const CostModel& costs) {
  return costs.base * counts.segments + costs.bend * counts.bends +
         costs.cross_line * counts.line_crossings + costs.cross_species * counts.species_overlaps;
}

RouteResult route_between(const ObstacleSet& obstacles, Point source, Point dest,
                          const RouteOptions& options) {
  const RoutingGrid grid = build_grid(obstacles, source, dest, options.grid_n);
  RouteResult result;
  try {
    const SearchOutcome outcome = bidi_search(grid, options.costs, options.mode);
    result.grid_path = reconstruct_path(grid, outcome);
  } catch (const Error& e) {
    throw Error(ErrorCode::routing_failed, "no route found", std::string(error_code_name(e.code())) + ": " + e.what());
  }
  result.counts = count_path(grid, result.grid_path);
  result.total_cost = path_cost(result.counts, options.costs);
  result.grid_n = grid.n();
  result.source_attachment = grid.source_attachment();
  result.dest_attachment = grid.dest_attachment();
  Polyline raw;
  raw.reserve(result.grid_path.size());
  for (GridNodeId v : result.grid_path) raw.push_back(grid.position(v));
  result.waypoints = simplify(raw);
  return result;
}

RouteResult route(const SceneMap& scene, const Anchor& source, const Anchor& target,
                  const RouteOptions& options) {
  const Point from = anchor_point(scene, source, target);
  const Point to = anchor_point(scene, target, source);
  std::set<ItemId> exclude(options.ignore_edges.begin(), options.ignore_edges.end());
  for (const Anchor* a : {&source, &target}) {
    if (const auto* s = std::get_if<SpeciesAnchor>(a)) exclude.insert(s->node);
    if (const auto* e = std::get_if<EdgeAnchor>(a)) exclude.insert(e->edge);
  }
  return route_between(collect_obstacles(scene, exclude), from, to, options);
}

}  // namespace mimgraph
