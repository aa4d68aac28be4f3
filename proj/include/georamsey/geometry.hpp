#pragma once

#include "georamsey/errors.hpp"
#include "georamsey/point.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace georamsey {

enum class ChainKind { Cup, Cap, Neither };

inline const char* to_string(ChainKind k) {
  switch (k) {
    case ChainKind::Cup:
      return "CUP";
    case ChainKind::Cap:
      return "CAP";
    case ChainKind::Neither:
      break;
  }
  return "NEITHER";
}

namespace detail {

// Sorts the directions from each point to all others by angle and reports the
// first pair of parallel directions. O(N^2 log N) instead of O(N^3).
template <class T>
std::optional<std::array<std::size_t, 3>> find_collinear_triple_impl(std::span<const BasicPoint<T>> pts) {
  const std::size_t n = pts.size();
  if (n < 3) {
    return std::nullopt;
  }
  using W = typename Widened<T>::type;
  struct Dir {
    W dx;
    W dy;
    std::size_t to;
  };
  std::vector<Dir> dirs;
  dirs.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    dirs.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) {
        continue;
      }
      W dx = W(pts[j].x) - W(pts[i].x);
      W dy = W(pts[j].y) - W(pts[i].y);
      if (dx == 0 && dy == 0) {
        // A repeated point is collinear with anything; pair it with the first free index.
        std::size_t k = 0;
        while (k == i || k == j) {
          ++k;
        }
        std::array<std::size_t, 3> t{i, j, k};
        std::sort(t.begin(), t.end());
        return t;
      }
      // Fold into the half-open upper half-plane so parallel means equal angle.
      if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({std::move(dx), std::move(dy), j});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) {
      return sign_of(W(a.dx * b.dy - a.dy * b.dx)) > 0;
    });
    for (std::size_t k = 1; k < dirs.size(); ++k) {
      const Dir& a = dirs[k - 1];
      const Dir& b = dirs[k];
      if (sign_of(W(a.dx * b.dy - a.dy * b.dx)) == 0) {
        std::array<std::size_t, 3> t{i, a.to, b.to};
        std::sort(t.begin(), t.end());
        return t;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Indices of some collinear triple, or nullopt when the set is in general position.
inline std::optional<std::array<std::size_t, 3>> find_collinear_triple(std::span<const ExactPoint> points) {
  if (auto small = detail::to_small(points)) {
    return detail::find_collinear_triple_impl<std::int64_t>(*small);
  }
  return detail::find_collinear_triple_impl<Integer>(points);
}

inline bool is_general_position(std::span<const ExactPoint> points) {
  return !find_collinear_triple(points).has_value();
}

inline void require_general_position(std::span<const ExactPoint> points) {
  if (auto t = find_collinear_triple(points)) {
    throw GeneralPositionViolated((*t)[0], (*t)[1], (*t)[2]);
  }
}

/// Indices of the strict convex hull in counterclockwise order, starting from
/// the leftmost (then lowest) point.
/// Throws GeneralPositionViolated when a collinear triple shows up on the boundary.
inline std::vector<std::size_t> convex_hull_indices(std::span<const ExactPoint> points) {
  const std::size_t n = points.size();
  if (n == 0) {
    throw BadInput("convex hull of an empty set");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].x != points[b].x) {
      return points[a].x < points[b].x;
    }
    return points[a].y < points[b].y;
  });
  for (std::size_t k = 1; k < n; ++k) {
    if (points[order[k]] == points[order[k - 1]]) {
      throw BadInput("duplicate point at indices " + std::to_string(order[k - 1]) + " and " +
                     std::to_string(order[k]));
    }
  }
  if (n <= 2) {
    return order;
  }

  std::vector<std::size_t> hull(2 * n);
  std::size_t m = 0;
  auto push = [&](std::size_t idx, std::size_t floor) {
    while (m >= floor) {
      const Orientation o = orientation(points[hull[m - 2]], points[hull[m - 1]], points[idx]);
      if (o == Orientation::Collinear) {
        throw GeneralPositionViolated(hull[m - 2], hull[m - 1], idx);
      }
      if (o == Orientation::Counterclockwise) {
        break;
      }
      --m;
    }
    hull[m++] = idx;
  };
  for (std::size_t k = 0; k < n; ++k) {
    push(order[k], 2);
  }
  const std::size_t lower = m + 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    push(order[k], lower);
  }
  hull.resize(m - 1);
  return hull;
}

inline std::vector<ExactPoint> convex_hull(std::span<const ExactPoint> points) {
  std::vector<ExactPoint> out;
  for (std::size_t i : convex_hull_indices(points)) {
    out.push_back(points[i]);
  }
  return out;
}

/// True iff every point is a hull vertex. Requires general position.
inline bool is_convex_position(std::span<const ExactPoint> points) {
  require_general_position(points);
  if (points.size() <= 3) {
    return true;
  }
  return convex_hull_indices(points).size() == points.size();
}

/// Cup: every consecutive triple turns left. Cap: every consecutive triple turns right.
inline ChainKind classify_cup_cap(std::span<const ExactPoint> points) {
  if (points.size() < 3) {
    throw BadInput("classify_cup_cap needs at least 3 points, got " + std::to_string(points.size()));
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) {
      throw BadInput("x-coordinates not strictly increasing at index " + std::to_string(i));
    }
  }
  const Orientation first = orientation(points[0], points[1], points[2]);
  if (first == Orientation::Collinear) {
    return ChainKind::Neither;
  }
  for (std::size_t i = 3; i < points.size(); ++i) {
    if (orientation(points[i - 2], points[i - 1], points[i]) != first) {
      return ChainKind::Neither;
    }
  }
  return first == Orientation::Counterclockwise ? ChainKind::Cup : ChainKind::Cap;
}

struct ShearResult {
  std::vector<ExactPoint> points;
  Integer shear;
};

/// Applies (x, y) -> (x + s*y, y) with the smallest natural s giving distinct x.
inline ShearResult shear_to_distinct_x(std::span<const ExactPoint> points) {
  // Each pair with different y rules out at most one s, so the search is finite.
  std::vector<Integer> bad;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw BadInput("duplicate point at indices " + std::to_string(i) + " and " + std::to_string(j));
      }
      const Integer dy = points[i].y - points[j].y;
      const Integer dx = points[j].x - points[i].x;
      if (dy == 0) {
        continue;
      }
      // x_i + s y_i == x_j + s y_j  <=>  s = (x_j - x_i) / (y_i - y_j)
      if (dx % dy == 0) {
        Integer s = dx / dy;
        if (s >= 0) {
          bad.push_back(std::move(s));
        }
      }
    }
  }
  std::sort(bad.begin(), bad.end());
  Integer s = 0;
  for (const auto& b : bad) {
    if (b == s) {
      ++s;
    } else if (b > s) {
      break;
    }
  }
  ShearResult out{{}, s};
  out.points.reserve(points.size());
  for (const auto& p : points) {
    out.points.push_back({p.x + s * p.y, p.y});
  }
  return out;
}

/// True iff d lies strictly inside triangle abc (general position assumed).
template <class T>
bool in_triangle(const BasicPoint<T>& a, const BasicPoint<T>& b, const BasicPoint<T>& c,
                 const BasicPoint<T>& d) {
  const Orientation o1 = orientation(a, b, d);
  return o1 != Orientation::Collinear && o1 == orientation(b, c, d) && o1 == orientation(c, a, d);
}

/// An x-sorted point sequence in general position. Construction validates both invariants.
class PointConfig {
 public:
  PointConfig() = default;

  explicit PointConfig(std::vector<ExactPoint> points) : points_(std::move(points)) {
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(points_[i - 1].x < points_[i].x)) {
        throw BadInput("x-coordinates not strictly increasing at index " + std::to_string(i));
      }
    }
    require_general_position(points_);
  }

  std::span<const ExactPoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const ExactPoint& operator[](std::size_t i) const { return points_[i]; }

  std::vector<ExactPoint> subset(std::span<const std::size_t> indices) const {
    std::vector<ExactPoint> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) {
      out.push_back(points_.at(i));
    }
    return out;
  }

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::vector<ExactPoint> points_;
};

}  // namespace georamsey
