#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csc/error.hpp"
#include "csc/rational.hpp"

namespace csc {

struct Point {
  Rat x, y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Lexicographic (x, then y).
inline int compare(const Point& a, const Point& b) {
  if (int c = compare(a.x, b.x); c != 0) return c;
  return compare(a.y, b.y);
}
inline bool operator<(const Point& a, const Point& b) { return compare(a, b) < 0; }

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Point midpoint(const Point& a, const Point& b) {
  return Rat(1, 2) * (a + b);
}

/// 2*center - p
inline Point reflect(const Point& p, const Point& center) {
  return {Rat(2) * center.x - p.x, Rat(2) * center.y - p.y};
}

inline std::string point_str(const Point& p) {
  return "(" + p.x.str() + "," + p.y.str() + ")";
}

/// Finite planar point set: pairwise distinct, optionally labeled
/// (labels are all-or-nothing, pairwise distinct).
class PointSet {
 public:
  PointSet() = default;

  static PointSet make(std::vector<Point> pts) {
    return make(std::move(pts), {});
  }

  static PointSet make(std::vector<Point> pts, std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != pts.size())
      throw Error(ErrorCode::InvalidArgument, "label count does not match point count");
    {
      std::vector<Point> copy = pts;
      std::sort(copy.begin(), copy.end());
      if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        throw Error(ErrorCode::InvalidArgument, "duplicate point in set");
    }
    if (!labels.empty()) {
      std::vector<std::string> copy = labels;
      std::sort(copy.begin(), copy.end());
      if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        throw Error(ErrorCode::InvalidArgument, "duplicate label in set");
    }
    PointSet s;
    s.points_ = std::move(pts);
    s.labels_ = std::move(labels);
    return s;
  }

  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool labeled() const { return !labels_.empty(); }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  std::optional<std::size_t> index_of_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  /// Copy without point (and label) at `index`.
  PointSet without(std::size_t index) const {
    PointSet s;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (i == index) continue;
      s.points_.push_back(points_[i]);
      if (!labels_.empty()) s.labels_.push_back(labels_[i]);
    }
    return s;
  }

  /// Subset by (strictly increasing) indices; labels restricted alongside.
  PointSet subset(const std::vector<std::size_t>& indices) const {
    PointSet s;
    for (std::size_t i : indices) {
      s.points_.push_back(points_[i]);
      if (!labels_.empty()) s.labels_.push_back(labels_[i]);
    }
    return s;
  }

 private:
  std::vector<Point> points_;
  std::vector<std::string> labels_;
};

}  // namespace csc
