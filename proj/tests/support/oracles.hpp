#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mimgraph/router.hpp"

namespace mimgraph::testing {

/// Step charge recomputed straight from the geometry predicates.
Cost oracle_step_cost(Point p, Point q, const ObstacleSet& obstacles, const CostModel& costs);

/// Cost of a grid walk given as positions: base and obstacle charges per
/// step plus one bend charge for every change of axis.
Cost oracle_path_cost(const std::vector<Point>& points, const ObstacleSet& obstacles, const CostModel& costs);

/// Plain unidirectional Dijkstra over (node, heading) states of `grid`
/// with every turn allowed, reversals included. Step costs come from
/// `oracle_step_cost`. With `avoid_species`, steps touching a species are
/// removed. Returns kUnreached when the destination cannot be reached.
Cost oracle_dijkstra(const RoutingGrid& grid, const ObstacleSet& obstacles, const CostModel& costs,
                     bool avoid_species = false);

/// Minimum cost over every simple path of `grid` by exhaustive DFS.
Cost brute_force_min(const RoutingGrid& grid, const ObstacleSet& obstacles, const CostModel& costs);

struct Instance {
  ObstacleSet obstacles;
  Point source;
  Point dest;
  int n = kDefaultGridSize;
};

/// Random terminals on a half-unit lattice plus random species boxes and
/// orthogonal lines around them. Some destinations share a line with the
/// source so that stub attachments are exercised.
Instance random_instance(std::mt19937_64& rng, int n);

}  // namespace mimgraph::testing
