#pragma once

#include "georamsey/point.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace georamsey::detail {

// Non-negative rational num/den with den > 0.
struct Ratio {
  Integer num{0};
  Integer den{1};
};

inline bool less(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }

struct Box {
  Integer xmin, xmax, ymin, ymax;
};

inline Box bounding_box(std::span<const ExactPoint> pts) {
  Box b{pts.front().x, pts.front().x, pts.front().y, pts.front().y};
  for (const auto& p : pts) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

// Largest |slope| over all pairs of an x-sorted set. The extreme slopes of an
// x-sorted set are always attained by neighbours, so one pass is enough.
inline Ratio max_abs_slope(std::span<const ExactPoint> pts) {
  Ratio best;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Ratio r{abs(pts[i].y - pts[i - 1].y), pts[i].x - pts[i - 1].x};
    if (less(best, r)) {
      best = std::move(r);
    }
  }
  return best;
}

inline std::vector<ExactPoint> translated(std::span<const ExactPoint> pts, const Integer& dx, const Integer& dy) {
  std::vector<ExactPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    out.push_back({p.x + dx, p.y + dy});
  }
  return out;
}

// Places `right` (x-sorted) just to the right of `left` (x-sorted) and high
// enough that every line through two points of `left` passes strictly below
// all of `right`, and every line through two points of `right` passes strictly
// above all of `left`. Returns the concatenation.
//
// With S the largest |slope| in either set and W the joint x-span, a line
// through a left pair stays below max_y(left) + S*W over the joint span, so a
// vertical offset putting min_y(right) above that bound is enough for both
// conditions.
inline std::vector<ExactPoint> place_right_above(std::span<const ExactPoint> left,
                                                 std::span<const ExactPoint> right) {
  const Box a = bounding_box(left);
  const Box b = bounding_box(right);
  const Integer dx = a.xmax + 1 - b.xmin;
  const Integer span = (a.xmax - a.xmin) + 1 + (b.xmax - b.xmin);
  Ratio slope = max_abs_slope(left);
  if (Ratio s = max_abs_slope(right); less(slope, s)) {
    slope = std::move(s);
  }
  const Integer dy = a.ymax - b.ymin + (slope.num * span) / slope.den + 1;

  std::vector<ExactPoint> out(left.begin(), left.end());
  auto moved = translated(right, dx, dy);
  out.insert(out.end(), moved.begin(), moved.end());
  return out;
}

}  // namespace georamsey::detail
