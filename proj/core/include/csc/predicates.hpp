#pragma once

#include <vector>

#include "csc/point.hpp"

namespace csc {

enum class PointStatus { Vertex, OnEdge, Interior };

struct HullClassification {
  std::vector<Point> hull;          // CCW, starting at the lexicographically smallest vertex
  std::vector<PointStatus> status;  // one entry per input point, in input order
};

/// Sign of the cross product (q - p) x (r - p): +1 for a counter-clockwise
/// turn, -1 for clockwise, 0 for collinear. Exact.
int orientation(const Point& p, const Point& q, const Point& r);

/// Strict convex hull (no three consecutive collinear vertices) plus a
/// classification of every input point. All-collinear inputs yield a
/// two-point hull with the inner points classified OnEdge.
HullClassification convex_hull(const PointSet& x);

/// Every point is a hull vertex.
bool in_strict_convex_position(const PointSet& x);

/// No point lies strictly inside the hull (points on edges allowed).
bool in_weak_convex_position(const PointSet& x);

/// {2*center - p : p in x}, order and labels preserved.
PointSet reflect_set(const PointSet& x, const Point& center);

/// Strict-weak order of nonzero direction vectors by counter-clockwise
/// angle from the positive x-axis; equal directions compare equal.
bool ccw_angle_less(const Point& u, const Point& v);

}  // namespace csc
