#include "mimgraph/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "mimgraph/scene.hpp"

namespace mimgraph {

namespace {

struct Interval {
  double lo;
  double hi;
};

Interval span_of(double a, double b) { return {std::min(a, b), std::max(a, b)}; }

double overlap_length(Interval a, Interval b) {
  return std::min(a.hi, b.hi) - std::max(a.lo, b.lo);
}

bool strictly_inside(double v, Interval iv) {
  return v > iv.lo + kGeometryTolerance && v < iv.hi - kGeometryTolerance;
}

bool collinear(Point a, Point b, Point c) {
  return (nearly_equal(a.x, b.x) && nearly_equal(b.x, c.x)) ||
         (nearly_equal(a.y, b.y) && nearly_equal(b.y, c.y));
}

}  // namespace

bool Rect::intersects(const Rect& other) const {
  return left <= other.right + kGeometryTolerance && other.left <= right + kGeometryTolerance &&
         top <= other.bottom + kGeometryTolerance && other.top <= bottom + kGeometryTolerance;
}

bool nearly_equal(double a, double b) { return std::abs(a - b) <= kGeometryTolerance; }

bool same_point(Point a, Point b) { return nearly_equal(a.x, b.x) && nearly_equal(a.y, b.y); }

bool OrthoSegment::horizontal() const { return nearly_equal(a.y, b.y); }

Rect OrthoSegment::bounds() const {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)};
}

bool segments_cross(const OrthoSegment& s1, const OrthoSegment& s2) {
  const bool h1 = s1.horizontal();
  const bool h2 = s2.horizontal();
  if (h1 == h2) {
    if (h1) {
      if (!nearly_equal(s1.a.y, s2.a.y)) return false;
      return overlap_length(span_of(s1.a.x, s1.b.x), span_of(s2.a.x, s2.b.x)) > kGeometryTolerance;
    }
    if (!nearly_equal(s1.a.x, s2.a.x)) return false;
    return overlap_length(span_of(s1.a.y, s1.b.y), span_of(s2.a.y, s2.b.y)) > kGeometryTolerance;
  }
  const OrthoSegment& h = h1 ? s1 : s2;
  const OrthoSegment& v = h1 ? s2 : s1;
  return strictly_inside(v.a.x, span_of(h.a.x, h.b.x)) &&
         strictly_inside(h.a.y, span_of(v.a.y, v.b.y));
}

bool segment_hits_rect(const OrthoSegment& s, const Rect& r) {
  if (s.horizontal()) {
    const double y = s.a.y;
    if (y < r.top - kGeometryTolerance || y > r.bottom + kGeometryTolerance) return false;
    return overlap_length(span_of(s.a.x, s.b.x), {r.left, r.right}) > kGeometryTolerance;
  }
  const double x = s.a.x;
  if (x < r.left - kGeometryTolerance || x > r.right + kGeometryTolerance) return false;
  return overlap_length(span_of(s.a.y, s.b.y), {r.top, r.bottom}) > kGeometryTolerance;
}

bool segment_hits_node(const OrthoSegment& s, const SpeciesNode& node) {
  return segment_hits_rect(s, node.bounds());
}

bool is_orthogonal(std::span<const Point> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Point a = points[i - 1];
    const Point b = points[i];
    if (!nearly_equal(a.x, b.x) && !nearly_equal(a.y, b.y)) return false;
  }
  return true;
}

bool has_zero_length_segment(std::span<const Point> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (same_point(points[i - 1], points[i])) return true;
  }
  return false;
}

Polyline simplify(std::span<const Point> points) {
  Polyline out;
  out.reserve(points.size());
  for (const Point& p : points) {
    if (!out.empty() && same_point(out.back(), p)) continue;
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) out.pop_back();
    if (!out.empty() && same_point(out.back(), p)) continue;
    out.push_back(p);
  }
  return out;
}

double polyline_length(std::span<const Point> points) {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    total += std::abs(points[i].x - points[i - 1].x) + std::abs(points[i].y - points[i - 1].y);
  }
  return total;
}

Point point_along(std::span<const Point> points, double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double target = t * polyline_length(points);
  double walked = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Point a = points[i - 1];
    const Point b = points[i];
    const double len = std::abs(b.x - a.x) + std::abs(b.y - a.y);
    if (len > 0.0 && walked + len >= target) {
      const double f = (target - walked) / len;
      return {a.x + (b.x - a.x) * f, a.y + (b.y - a.y) * f};
    }
    walked += len;
  }
  return points.back();
}

Rect polyline_bounds(std::span<const Point> points) {
  Rect r{points.front().x, points.front().y, points.front().x, points.front().y};
  for (const Point& p : points) {
    r.left = std::min(r.left, p.x);
    r.top = std::min(r.top, p.y);
    r.right = std::max(r.right, p.x);
    r.bottom = std::max(r.bottom, p.y);
  }
  return r;
}

}  // namespace mimgraph
