#include "csc/predicates.hpp"

#include <algorithm>
#include <cassert>

namespace csc {

int orientation(const Point& p, const Point& q, const Point& r) {
  Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return cross.sign();
}

namespace {

// Andrew's monotone chain over a lexicographically sorted copy; popping on
// orientation <= 0 keeps only strictly convex vertices.
std::vector<Point> strict_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;

  std::vector<Point> h;
  h.reserve(2 * n);
  for (const Point& p : pts) {  // lower chain
    while (h.size() >= 2 && orientation(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  const std::size_t lower = h.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
    while (h.size() >= lower && orientation(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();  // last == first
  return h;
}

}  // namespace

HullClassification convex_hull(const PointSet& x) {
  const auto& pts = x.points();
  assert(!pts.empty());

  HullClassification out;
  out.hull = strict_hull(pts);
  out.status.reserve(pts.size());

  std::vector<Point> verts = out.hull;
  std::sort(verts.begin(), verts.end());
  auto is_vertex = [&](const Point& p) {
    return std::binary_search(verts.begin(), verts.end(), p);
  };

  const std::size_t h = out.hull.size();
  for (const Point& p : pts) {
    if (is_vertex(p)) {
      out.status.push_back(PointStatus::Vertex);
      continue;
    }
    if (h <= 2) {
      // Degenerate collinear input: everything between the two hull
      // endpoints sits on the segment.
      out.status.push_back(PointStatus::OnEdge);
      continue;
    }
    int min_side = 1;
    for (std::size_t i = 0; i < h; ++i) {
      int side = orientation(out.hull[i], out.hull[(i + 1) % h], p);
      assert(side >= 0);  // inputs are never outside their own hull
      min_side = std::min(min_side, side);
    }
    out.status.push_back(min_side == 0 ? PointStatus::OnEdge : PointStatus::Interior);
  }
  return out;
}

bool in_strict_convex_position(const PointSet& x) {
  auto hc = convex_hull(x);
  return std::all_of(hc.status.begin(), hc.status.end(),
                     [](PointStatus s) { return s == PointStatus::Vertex; });
}

bool in_weak_convex_position(const PointSet& x) {
  auto hc = convex_hull(x);
  return std::none_of(hc.status.begin(), hc.status.end(),
                      [](PointStatus s) { return s == PointStatus::Interior; });
}

PointSet reflect_set(const PointSet& x, const Point& center) {
  std::vector<Point> pts;
  pts.reserve(x.size());
  for (const Point& p : x.points()) pts.push_back(reflect(p, center));
  return PointSet::make(std::move(pts), x.labels());
}

bool ccw_angle_less(const Point& u, const Point& v) {
  assert(!(u.x.is_zero() && u.y.is_zero()));
  assert(!(v.x.is_zero() && v.y.is_zero()));
  auto half = [](const Point& w) {
    return (w.y.sign() > 0 || (w.y.sign() == 0 && w.x.sign() > 0)) ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  Rat cross = u.x * v.y - u.y * v.x;
  return cross.sign() > 0;
}

}  // namespace csc
