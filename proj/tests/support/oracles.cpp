#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <tuple>

namespace mimgraph::testing {

namespace {

bool horizontal_step(Point p, Point q) { return p.y == q.y; }

std::vector<std::vector<GridNodeId>> neighbours(const RoutingGrid& grid) {
  std::vector<std::vector<GridNodeId>> adj(grid.nodes().size());
  for (const GridEdge& e : grid.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

double half_step(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_int_distribution<int> d(static_cast<int>(lo * 2), static_cast<int>(hi * 2));
  return d(rng) / 2.0;
}

}  // namespace

Cost oracle_step_cost(Point p, Point q, const ObstacleSet& obstacles, const CostModel& costs) {
  const OrthoSegment seg{p, q};
  Cost c = costs.base;
  for (const Rect& r : obstacles.species) {
    if (segment_hits_rect(seg, r)) c += costs.cross_species;
  }
  for (const Polyline& line : obstacles.lines) {
    bool crossed = false;
    for (std::size_t i = 1; i < line.size() && !crossed; ++i) {
      if (line[i - 1] == line[i]) continue;
      crossed = segments_cross(seg, OrthoSegment{line[i - 1], line[i]});
    }
    if (crossed) c += costs.cross_line;
  }
  return c;
}

Cost oracle_path_cost(const std::vector<Point>& points, const ObstacleSet& obstacles, const CostModel& costs) {
  Cost total = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    total += oracle_step_cost(points[i - 1], points[i], obstacles, costs);
    if (i >= 2 && horizontal_step(points[i - 2], points[i - 1]) != horizontal_step(points[i - 1], points[i])) {
      total += costs.bend;
    }
  }
  return total;
}

Cost oracle_dijkstra(const RoutingGrid& grid, const ObstacleSet& obstacles, const CostModel& costs,
                     bool avoid_species) {
  const auto adj = neighbours(grid);
  // State: (node, previous node); the source has no previous node.
  using State = std::pair<GridNodeId, GridNodeId>;
  std::map<State, Cost> dist;
  using Entry = std::tuple<Cost, GridNodeId, GridNodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  const GridNodeId none = kNoGridNode;
  dist[{grid.source(), none}] = 0;
  queue.emplace(0, grid.source(), none);
  while (!queue.empty()) {
    const auto [d, v, prev] = queue.top();
    queue.pop();
    if (dist[{v, prev}] < d) continue;
    if (v == grid.dest()) return d;
    for (GridNodeId w : adj[v]) {
      const Point p = grid.position(v);
      const Point q = grid.position(w);
      Cost step = oracle_step_cost(p, q, obstacles, costs);
      if (avoid_species && step >= costs.cross_species) continue;
      if (prev != none && horizontal_step(grid.position(prev), p) != horizontal_step(p, q)) step += costs.bend;
      const State next{w, v};
      const auto it = dist.find(next);
      if (it == dist.end() || d + step < it->second) {
        dist[next] = d + step;
        queue.emplace(d + step, w, v);
      }
    }
  }
  return kUnreached;
}

Cost brute_force_min(const RoutingGrid& grid, const ObstacleSet& obstacles, const CostModel& costs) {
  const auto adj = neighbours(grid);
  std::vector<bool> on_path(grid.nodes().size(), false);
  std::vector<Point> path{grid.position(grid.source())};
  on_path[grid.source()] = true;
  Cost best = kUnreached;
  std::function<void(GridNodeId)> dfs = [&](GridNodeId v) {
    if (v == grid.dest()) {
      best = std::min(best, oracle_path_cost(path, obstacles, costs));
      return;
    }
    for (GridNodeId w : adj[v]) {
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(grid.position(w));
      dfs(w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  dfs(grid.source());
  return best;
}

Instance random_instance(std::mt19937_64& rng, int n) {
  Instance inst;
  inst.n = n;
  std::uniform_int_distribution<int> coin(0, 3);
  do {
    inst.source = {half_step(rng, 0, 100), half_step(rng, 0, 100)};
    inst.dest = {half_step(rng, 0, 100), half_step(rng, 0, 100)};
    switch (coin(rng)) {
      case 0: inst.dest.x = inst.source.x + half_step(rng, -3, 3); break;
      case 1: inst.dest.y = inst.source.y + half_step(rng, -3, 3); break;
      default: break;
    }
  } while (inst.source == inst.dest);

  const double lo_x = std::min(inst.source.x, inst.dest.x) - 30;
  const double hi_x = std::max(inst.source.x, inst.dest.x) + 30;
  const double lo_y = std::min(inst.source.y, inst.dest.y) - 30;
  const double hi_y = std::max(inst.source.y, inst.dest.y) + 30;

  std::uniform_int_distribution<int> count(0, 4);
  const int boxes = count(rng);
  for (int i = 0; i < boxes; ++i) {
    const double x = half_step(rng, lo_x, hi_x);
    const double y = half_step(rng, lo_y, hi_y);
    Rect r{x, y, x + half_step(rng, 2, 40), y + half_step(rng, 2, 30)};
    const auto contains = [&](Point p) {
      return p.x >= r.left && p.x <= r.right && p.y >= r.top && p.y <= r.bottom;
    };
    if (contains(inst.source) || contains(inst.dest)) continue;
    inst.obstacles.species.push_back(r);
  }
  const int lines = count(rng) + 1;
  for (int i = 0; i < lines; ++i) {
    Polyline line{{half_step(rng, lo_x, hi_x), half_step(rng, lo_y, hi_y)}};
    std::uniform_int_distribution<int> segs(1, 4);
    const int k = segs(rng);
    for (int s = 0; s < k; ++s) {
      Point p = line.back();
      if ((s % 2 == 0) == (coin(rng) < 2)) {
        p.x = half_step(rng, lo_x, hi_x);
      } else {
        p.y = half_step(rng, lo_y, hi_y);
      }
      if (p != line.back()) line.push_back(p);
    }
    if (line.size() >= 2) inst.obstacles.lines.push_back(line);
  }
  return inst;
}

}  // namespace mimgraph::testing
