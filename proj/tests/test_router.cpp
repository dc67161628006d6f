#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "mimgraph/indexed_heap.hpp"
#include "mimgraph/router.hpp"
#include "oracles.hpp"

using namespace mimgraph;
using namespace mimgraph::testing;

namespace {

// Terminals on opposite corners of a 3x3 lattice with lines at 0, 50, 100.
// A short line crosses edge (1,1)-(1,2); a box straddles edge (2,0)-(2,1).
struct ThreeByThree {
  ObstacleSet obstacles;
  RoutingGrid grid;

  ThreeByThree() {
    obstacles.lines.push_back({{75, 40}, {75, 60}});
    obstacles.species.push_back({10, 90, 40, 110});
    grid = build_grid(obstacles, {0, 0}, {100, 100}, 3);
  }
  GridNodeId at(int r, int c) const { return grid.lattice_node(r, c); }
};

RouteOptions grid_of(int n, SearchMode mode = SearchMode::exact) {
  RouteOptions o;
  o.grid_n = n;
  o.mode = mode;
  return o;
}

}  // namespace

TEST(EdgeStepCost, CanonicalCases) {
  const ThreeByThree f;
  const CostModel costs;
  ASSERT_EQ(std::vector<double>(f.grid.columns().begin(), f.grid.columns().end()),
            (std::vector<double>{0, 50, 100}));
  EXPECT_EQ(edge_step_cost(f.grid, f.at(0, 0), f.at(0, 1), f.at(0, 2), costs), 5);
  EXPECT_EQ(edge_step_cost(f.grid, f.at(1, 0), f.at(1, 1), f.at(1, 2), costs), 25);
  EXPECT_EQ(edge_step_cost(f.grid, f.at(0, 1), f.at(1, 1), f.at(1, 2), costs), 45);
  EXPECT_EQ(edge_step_cost(f.grid, std::nullopt, f.at(2, 0), f.at(2, 1), costs), 2005);
}

TEST(EdgeStepCost, DirectionForm) {
  const ThreeByThree f;
  const CostModel costs;
  const auto e = f.grid.edge_towards(f.at(1, 1), Direction::east);
  ASSERT_TRUE(e);
  EXPECT_EQ(edge_step_cost(f.grid, *e, Direction::east, Direction::east, costs), 25);
  EXPECT_EQ(edge_step_cost(f.grid, *e, Direction::south, Direction::east, costs), 45);
  EXPECT_EQ(edge_step_cost(f.grid, *e, Direction::none, Direction::east, costs), 25);
}

TEST(EdgeStepCost, RejectsNonAdjacentNodes) {
  const ThreeByThree f;
  EXPECT_THROW(edge_step_cost(f.grid, std::nullopt, f.at(0, 0), f.at(2, 2), CostModel{}), Error);
}

TEST(BendCheck, Cases) {
  const ThreeByThree f;
  const GridNodeId p = f.at(1, 1);
  EXPECT_FALSE(bend_check(f.grid, f.at(1, 0), p, f.at(1, 2)));  // from the west, continue east
  EXPECT_TRUE(bend_check(f.grid, f.at(2, 1), p, f.at(1, 2)));   // from the south, turn east
  EXPECT_FALSE(bend_check(f.grid, std::nullopt, p, f.at(0, 1)));
  EXPECT_FALSE(bend_check(f.grid, std::nullopt, p, f.at(1, 2)));
}

TEST(SearchFrontier, UpdateOutcomes) {
  SearchFrontier f(10);
  EXPECT_EQ(f.update(3, 40, 1), UpdateOutcome::inserted);
  EXPECT_EQ(f.dist[3], 40);
  EXPECT_EQ(f.pred[3], 1u);
  EXPECT_TRUE(f.heap.contains(3));
  EXPECT_EQ(f.update(3, 30, 2), UpdateOutcome::decreased);
  EXPECT_EQ(f.dist[3], 30);
  EXPECT_EQ(f.pred[3], 2u);
  EXPECT_EQ(f.heap.key(3), 30);
  EXPECT_EQ(f.update(3, 35, 4), UpdateOutcome::unchanged);
  EXPECT_EQ(f.update(3, 30, 4), UpdateOutcome::unchanged);
  EXPECT_EQ(f.pred[3], 2u);
  f.scanned[5] = true;
  EXPECT_EQ(f.update(5, 1, 0), UpdateOutcome::unchanged);
}

TEST(IndexedHeap, OrdersByKeyThenId) {
  IndexedHeap h(8);
  h.insert(5, 10);
  h.insert(2, 10);
  h.insert(7, 3);
  h.insert(1, 12);
  h.decrease_key(1, 1);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(h.pop(), 1u);
  EXPECT_EQ(h.pop(), 7u);
  EXPECT_EQ(h.pop(), 2u);
  EXPECT_EQ(h.pop(), 5u);
  EXPECT_TRUE(h.empty());
}

TEST(IndexedHeap, MatchesSortOnRandomOperations) {
  std::mt19937 rng(3);
  for (int round = 0; round < 50; ++round) {
    IndexedHeap h(64);
    std::vector<Cost> key(64, -1);
    for (int op = 0; op < 200; ++op) {
      const std::uint32_t id = rng() % 64;
      const Cost k = rng() % 1000;
      if (key[id] < 0) {
        h.insert(id, k);
        key[id] = k;
      } else if (k < key[id]) {
        h.decrease_key(id, k);
        key[id] = k;
      }
    }
    std::vector<std::pair<Cost, std::uint32_t>> expected;
    for (std::uint32_t id = 0; id < 64; ++id) {
      if (key[id] >= 0) expected.emplace_back(key[id], id);
    }
    std::sort(expected.begin(), expected.end());
    for (const auto& [k, id] : expected) {
      ASSERT_EQ(h.top_key(), k);
      ASSERT_EQ(h.pop(), id);
    }
    ASSERT_TRUE(h.empty());
  }
}

TEST(BidiSearch, AdjacentTerminals) {
  const RoutingGrid g = build_grid(ObstacleSet{}, {0, 0}, {100, 0}, 2);
  ASSERT_TRUE(g.edge_towards(g.source(), Direction::east));
  for (SearchMode mode : {SearchMode::exact, SearchMode::paper_faithful}) {
    const SearchOutcome out = bidi_search(g, CostModel{}, mode);
    EXPECT_EQ(out.cost, 5);
    const GridNodeId m = label_node(out.meeting);
    EXPECT_TRUE(m == g.source() || m == g.dest());
    EXPECT_EQ(reconstruct_path(g, out), (std::vector<GridNodeId>{g.source(), g.dest()}));
  }
}

TEST(BidiSearch, ScanKeysNeverDecrease) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const Instance inst = random_instance(rng, 4 + i % 5);
    const RoutingGrid g = build_grid(inst.obstacles, inst.source, inst.dest, inst.n);
    for (SearchMode mode : {SearchMode::exact, SearchMode::paper_faithful}) {
      const SearchOutcome out = bidi_search(g, CostModel{}, mode);
      for (const SearchFrontier* f : {&out.forward, &out.reverse}) {
        ASSERT_TRUE(std::is_sorted(f->scan_keys.begin(), f->scan_keys.end())) << i;
      }
    }
  }
}

TEST(ReconstructPath, MeetingAtSourceUsesReverseChainOnly) {
  const RoutingGrid g = build_grid(ObstacleSet{}, {0, 0}, {100, 100}, 2);
  const std::size_t labels = g.nodes().size() * kLabelsPerNode;
  std::vector<LabelId> fpred(labels, kNoLabel);
  std::vector<LabelId> rpred(labels, kNoLabel);
  const LabelId s = make_label(g.source(), Direction::none);
  const LabelId mid = make_label(g.lattice_node(0, 1), Direction::none);
  const LabelId d = make_label(g.dest(), Direction::none);
  rpred[s] = mid;
  rpred[mid] = d;
  EXPECT_EQ(reconstruct_path(g, s, fpred, rpred),
            (std::vector<GridNodeId>{g.source(), g.lattice_node(0, 1), g.dest()}));
}

TEST(ReconstructPath, BrokenChains) {
  const RoutingGrid g = build_grid(ObstacleSet{}, {0, 0}, {100, 100}, 2);
  const std::size_t labels = g.nodes().size() * kLabelsPerNode;
  std::vector<LabelId> fpred(labels, kNoLabel);
  std::vector<LabelId> rpred(labels, kNoLabel);
  const LabelId mid = make_label(g.lattice_node(0, 1), Direction::none);
  try {
    reconstruct_path(g, mid, fpred, rpred);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::broken_chain);
  }
  EXPECT_THROW(reconstruct_path(g, kNoLabel, fpred, rpred), Error);
}

TEST(Route, StraightCorridor) {
  const RouteResult r = route_between(ObstacleSet{}, {0, 40}, {300, 40}, grid_of(6));
  EXPECT_EQ(r.waypoints, (Polyline{{0, 40}, {300, 40}}));
  EXPECT_EQ(r.counts.bends, 0);
  for (std::size_t i = 1; i < r.grid_path.size(); ++i) {
    EXPECT_EQ(r.grid_path[i], r.grid_path[i - 1] + 1);  // one column east per step
  }
}

TEST(Route, LShapeHasOneBendAndMatchesEnumeration) {
  ObstacleSet obstacles;
  obstacles.species.push_back({20, 20, 80, 80});  // fills the middle of the lattice
  const RoutingGrid g = build_grid(obstacles, {0, 0}, {100, 100}, 4);
  const RouteResult r = route_between(obstacles, {0, 0}, {100, 100}, grid_of(4));
  EXPECT_EQ(r.counts.bends, 1);
  EXPECT_EQ(r.counts.species_overlaps, 0);
  EXPECT_EQ(r.total_cost, brute_force_min(g, obstacles, CostModel{}));
  ASSERT_EQ(r.waypoints.size(), 3u);
  const Point corner = r.waypoints[1];
  EXPECT_TRUE(corner == (Point{100, 0}) || corner == (Point{0, 100}));
}

TEST(Route, DetoursAroundBlockingSpecies) {
  ObstacleSet obstacles;
  obstacles.species.push_back({80, 20, 120, 80});
  const RoutingGrid g = build_grid(obstacles, {0, 50}, {200, 50}, 6);
  const RouteResult r = route_between(obstacles, {0, 50}, {200, 50}, grid_of(6));
  EXPECT_GE(r.counts.bends, 2);
  EXPECT_EQ(r.counts.species_overlaps, 0);
  EXPECT_LT(r.total_cost, 2000);
  EXPECT_EQ(r.total_cost, brute_force_min(g, obstacles, CostModel{}));
}

TEST(Route, CrossingBeatsDetour) {
  ObstacleSet obstacles;
  obstacles.lines.push_back({{100, 20}, {100, 80}});
  const RoutingGrid g = build_grid(obstacles, {0, 50}, {200, 50}, 6);
  const RouteResult r = route_between(obstacles, {0, 50}, {200, 50}, grid_of(6));
  EXPECT_EQ(r.counts.line_crossings, 1);
  EXPECT_EQ(r.counts.bends, 0);
  EXPECT_EQ(r.total_cost, brute_force_min(g, obstacles, CostModel{}));
}

TEST(Route, ExactMatchesOracleAndKeepsInvariants) {
  std::mt19937_64 rng(99);
  const CostModel costs;
  for (int i = 0; i < 300; ++i) {
    const Instance inst = random_instance(rng, 3 + i % 8);
    const RoutingGrid g = build_grid(inst.obstacles, inst.source, inst.dest, inst.n);
    const RouteResult r = route_between(inst.obstacles, inst.source, inst.dest, grid_of(inst.n));
    ASSERT_EQ(r.total_cost, oracle_dijkstra(g, inst.obstacles, costs)) << i;
    // Cost identity, and the same figure recomputed from geometry alone.
    ASSERT_EQ(r.total_cost, path_cost(r.counts, costs));
    std::vector<Point> pts;
    for (GridNodeId v : r.grid_path) pts.push_back(g.position(v));
    ASSERT_EQ(r.total_cost, oracle_path_cost(pts, inst.obstacles, costs));
    ASSERT_EQ(r.counts.segments + 1, static_cast<int>(r.grid_path.size()));
    ASSERT_TRUE(is_orthogonal(r.waypoints));
    ASSERT_FALSE(has_zero_length_segment(r.waypoints));
    ASSERT_EQ(r.waypoints.front(), inst.source);
    ASSERT_EQ(r.waypoints.back(), inst.dest);
    ASSERT_EQ(route_between(inst.obstacles, inst.source, inst.dest, grid_of(inst.n)), r);
  }
}

TEST(Route, BruteForceOnFourByFour) {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 30; ++i) {
    const Instance inst = random_instance(rng, 4);
    const RoutingGrid g = build_grid(inst.obstacles, inst.source, inst.dest, 4);
    const RouteResult r = route_between(inst.obstacles, inst.source, inst.dest, grid_of(4));
    ASSERT_EQ(r.total_cost, brute_force_min(g, inst.obstacles, CostModel{})) << i;
  }
}

TEST(Route, PaperModeNeverBeatsExact) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const Instance inst = random_instance(rng, 4 + i % 5);
    const RouteResult exact = route_between(inst.obstacles, inst.source, inst.dest, grid_of(inst.n));
    const RouteResult paper =
        route_between(inst.obstacles, inst.source, inst.dest, grid_of(inst.n, SearchMode::paper_faithful));
    ASSERT_GE(paper.total_cost, exact.total_cost) << i;
    ASSERT_EQ(paper.total_cost, path_cost(paper.counts, CostModel{}));
    ASSERT_TRUE(is_orthogonal(paper.waypoints));
  }
}

TEST(Route, CustomCostModel) {
  ObstacleSet obstacles;
  obstacles.lines.push_back({{100, 20}, {100, 80}});
  RouteOptions opts = grid_of(6);
  opts.costs.cross_line = 1000;  // now a detour is cheaper than crossing
  const RouteResult r = route_between(obstacles, {0, 50}, {200, 50}, opts);
  EXPECT_EQ(r.counts.line_crossings, 0);
  EXPECT_GE(r.counts.bends, 2);
}

TEST(Route, BetweenSceneAnchors) {
  SceneMap map;
  map.add_species({"A", SpeciesKind::protein, "A", {0, 0}, {80, 40}, 6});
  map.add_species({"B", SpeciesKind::protein, "B", {300, 0}, {80, 40}, 6});
  const RouteResult r = route(map, SpeciesAnchor{"A", std::nullopt, 0.5}, SpeciesAnchor{"B", std::nullopt, 0.5});
  EXPECT_EQ(r.waypoints, (Polyline{{80, 20}, {300, 20}}));
  EXPECT_EQ(r.counts.bends, 0);
  EXPECT_EQ(r.counts.line_crossings, 0);
  EXPECT_EQ(r.counts.species_overlaps, 0);
  try {
    route(map, SpeciesAnchor{"A", std::nullopt, 0.5}, SpeciesAnchor{"Z", std::nullopt, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unresolved_anchor);
  }
}

TEST(Route, GridSizeOutOfRange) {
  EXPECT_THROW(route_between(ObstacleSet{}, {0, 0}, {10, 10}, grid_of(1)), Error);
}
