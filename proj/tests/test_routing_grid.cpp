#include <gtest/gtest.h>

#include <random>

#include "mimgraph/routing_grid.hpp"

using namespace mimgraph;

namespace {

std::size_t count_lattice(const RoutingGrid& g) {
  std::size_t n = 0;
  for (const GridEdge& e : g.edges()) n += e.lattice ? 1 : 0;
  return n;
}

void expect_increasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LT(v[i - 1], v[i]);
}

}  // namespace

TEST(BuildGrid, SixBySixHasSixtyEdges) {
  const RoutingGrid g = build_grid(ObstacleSet{}, {0, 0}, {100, 100}, 6);
  EXPECT_EQ(g.nodes().size(), 36u);
  EXPECT_EQ(g.lattice_edge_count(), 60u);
  EXPECT_EQ(g.edges().size(), 60u);
}

TEST(BuildGrid, ElevenByElevenHas121Nodes) {
  EXPECT_EQ(build_grid(ObstacleSet{}, {0, 0}, {100, 100}, 11).nodes().size(), 121u);
}

TEST(BuildGrid, TwoByTwo) {
  const RoutingGrid g = build_grid(ObstacleSet{}, {0, 0}, {100, 100}, 2);
  EXPECT_EQ(g.nodes().size(), 4u);
  EXPECT_EQ(g.edges().size(), 4u);
}

TEST(BuildGrid, EdgeCountLaw) {
  for (int n = 2; n <= 16; ++n) {
    const RoutingGrid g = build_grid(ObstacleSet{}, {3, 7}, {250, 90}, n);
    const std::size_t expected = 2u * static_cast<std::size_t>(n * (n - 1));
    EXPECT_EQ(g.lattice_edge_count(), expected) << n;
    EXPECT_EQ(count_lattice(g), expected) << n;
  }
}

TEST(BuildGrid, TerminalsSnapOntoLattice) {
  const RoutingGrid g = build_grid(ObstacleSet{}, {10, 20}, {130, 95}, 6);
  EXPECT_EQ(g.position(g.source()), (Point{10, 20}));
  EXPECT_EQ(g.position(g.dest()), (Point{130, 95}));
  EXPECT_EQ(g.source_attachment(), TerminalAttachment::snapped);
  EXPECT_EQ(g.dest_attachment(), TerminalAttachment::snapped);
  expect_increasing(g.columns());
  expect_increasing(g.rows());
  // Extent: bounding box inflated by a quarter of the larger span.
  EXPECT_DOUBLE_EQ(g.columns().front(), 10 - 30);
  EXPECT_DOUBLE_EQ(g.columns().back(), 130 + 30);
  EXPECT_DOUBLE_EQ(g.rows().front(), 20 - 30);
  EXPECT_DOUBLE_EQ(g.rows().back(), 95 + 30);
}

TEST(BuildGrid, SmallSpansUseMinimumMargin) {
  const RoutingGrid g = build_grid(ObstacleSet{}, {0, 0}, {4, 0}, 4);
  EXPECT_DOUBLE_EQ(g.columns().front(), -5);
  EXPECT_DOUBLE_EQ(g.rows().back(), 5);
}

TEST(BuildGrid, DestinationSharingSourceColumnGetsStub) {
  // Both x values are nearest to the same column; the destination cannot
  // take it and splits the lattice edge on its row instead.
  const RoutingGrid g = build_grid(ObstacleSet{}, {50, 0}, {51, 100}, 4);
  EXPECT_EQ(g.dest_attachment(), TerminalAttachment::stub);
  EXPECT_EQ(g.position(g.dest()), (Point{51, 100}));
  EXPECT_EQ(g.nodes().size(), 17u);
  EXPECT_EQ(g.lattice_edge_count(), 23u);
  EXPECT_EQ(g.edges().size(), 25u);
  EXPECT_EQ(g.nodes()[g.dest()].kind, GridNodeKind::terminal);
}

TEST(BuildGrid, DestinationConflictingOnBothAxesHangsOffCorner) {
  const RoutingGrid g = build_grid(ObstacleSet{}, {0, 0}, {0.5, 0.25}, 6);
  EXPECT_EQ(g.dest_attachment(), TerminalAttachment::stub);
  EXPECT_EQ(g.position(g.dest()), (Point{0.5, 0.25}));
  EXPECT_EQ(g.nodes().size(), 38u);
  EXPECT_EQ(g.edges().size(), 62u);
  int corners = 0;
  for (const GridNode& node : g.nodes()) corners += node.kind == GridNodeKind::corner ? 1 : 0;
  EXPECT_EQ(corners, 1);
}

TEST(BuildGrid, AdjacencyIsConsistent) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(0, 200);
  for (int i = 0; i < 300; ++i) {
    const Point s{c(rng) / 2.0, c(rng) / 2.0};
    const Point d{c(rng) / 2.0, c(rng) / 2.0};
    if (s == d) continue;
    const RoutingGrid g = build_grid(ObstacleSet{}, s, d, 2 + i % 10);
    EXPECT_EQ(g.position(g.source()), s);
    EXPECT_EQ(g.position(g.dest()), d);
    for (GridEdgeId e = 0; e < g.edges().size(); ++e) {
      const GridEdge& edge = g.edges()[e];
      const Point a = g.position(edge.a), b = g.position(edge.b);
      ASSERT_TRUE(a.x == b.x || a.y == b.y);
      ASSERT_FALSE(a == b);
      const Direction dir = g.step_direction(edge.a, edge.b);
      ASSERT_EQ(g.edge_towards(edge.a, dir), e);
      ASSERT_EQ(g.edge_towards(edge.b, opposite(dir)), e);
      ASSERT_EQ(g.other_end(e, edge.a), edge.b);
    }
  }
}

TEST(BuildGrid, ObstacleChargesPerEdge) {
  ObstacleSet obstacles;
  obstacles.lines.push_back({{75, 40}, {75, 60}});
  obstacles.species.push_back({10, 90, 40, 110});
  const RoutingGrid g = build_grid(obstacles, {0, 0}, {100, 100}, 3);
  int crossings = 0;
  int overlaps = 0;
  for (const GridEdge& e : g.edges()) {
    crossings += e.line_crossings;
    overlaps += e.species_overlaps;
  }
  EXPECT_EQ(crossings, 1);
  EXPECT_EQ(overlaps, 1);
  const CostModel costs;
  const auto e = g.edge_towards(g.lattice_node(1, 1), Direction::east);
  ASSERT_TRUE(e);
  EXPECT_EQ(g.edge_cost(*e, costs), 25);
}

TEST(SegmentCharges, CountsDistinctObjects) {
  ObstacleSet obstacles;
  // A polyline crossing the segment twice is charged once.
  obstacles.lines.push_back({{2, -5}, {2, 5}, {4, 5}, {4, -5}});
  obstacles.lines.push_back({{6, -5}, {6, 5}});
  obstacles.species.push_back({7, -1, 8, 1});
  const StepCharges c = segment_charges({0, 0}, {10, 0}, obstacles);
  EXPECT_EQ(c.line_crossings, 2);
  EXPECT_EQ(c.species_overlaps, 1);
}

TEST(BuildGrid, Errors) {
  const ObstacleSet none;
  EXPECT_THROW(build_grid(none, {0, 0}, {1, 1}, 1), Error);
  EXPECT_THROW(build_grid(none, {0, 0}, {1, 1}, kMaxGridSize + 1), Error);
  try {
    build_grid(none, {3, 3}, {3, 3}, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_terminals);
  }
}

TEST(Direction, Helpers) {
  EXPECT_EQ(opposite(Direction::north), Direction::south);
  EXPECT_EQ(opposite(Direction::east), Direction::west);
  EXPECT_TRUE(same_axis(Direction::north, Direction::south));
  EXPECT_FALSE(same_axis(Direction::north, Direction::east));
}
