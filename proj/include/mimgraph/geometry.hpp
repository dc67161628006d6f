#pragma once

#include <span>
#include <vector>

namespace mimgraph {

/// Absolute tolerance for every coordinate comparison, in scene units.
inline constexpr double kGeometryTolerance = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Size {
  double width = 0.0;
  double height = 0.0;

  friend bool operator==(const Size&, const Size&) = default;
};

/// Closed axis-aligned rectangle; y grows downwards (SVG convention).
struct Rect {
  double left = 0.0;
  double top = 0.0;
  double right = 0.0;
  double bottom = 0.0;

  bool intersects(const Rect& other) const;
};

using Polyline = std::vector<Point>;

bool nearly_equal(double a, double b);
bool same_point(Point a, Point b);

/// Axis-aligned segment. Precondition for the predicates below:
/// a.x == b.x or a.y == b.y, and a != b.
struct OrthoSegment {
  Point a;
  Point b;

  bool horizontal() const;
  Rect bounds() const;
};

/// True iff the two segments share a point that is interior to both. That
/// covers perpendicular interior crossings and collinear overlaps of positive
/// length; shared endpoints and T-junctions are not crossings.
bool segments_cross(const OrthoSegment& s1, const OrthoSegment& s2);

/// True iff the segment meets the closed rectangle along a stretch of
/// positive length. Touching the boundary at a single point is not a hit;
/// running along the boundary is.
bool segment_hits_rect(const OrthoSegment& s, const Rect& r);

struct SpeciesNode;

/// Bounding-box collision against a species; rounded corners are ignored.
bool segment_hits_node(const OrthoSegment& s, const SpeciesNode& node);

// Polyline helpers -----------------------------------------------------------

/// Every consecutive pair shares an x or a y coordinate. Repeated points are
/// tolerated here; `simplify` removes them.
bool is_orthogonal(std::span<const Point> points);

bool has_zero_length_segment(std::span<const Point> points);

/// Drops repeated points and interior points collinear with their
/// neighbours. Endpoints are kept. Idempotent.
Polyline simplify(std::span<const Point> points);

double polyline_length(std::span<const Point> points);

/// Point at arc-length fraction t in [0,1]. Requires at least one point.
Point point_along(std::span<const Point> points, double t);

Rect polyline_bounds(std::span<const Point> points);

}  // namespace mimgraph
