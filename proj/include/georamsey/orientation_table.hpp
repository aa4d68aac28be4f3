#pragma once

#include "georamsey/point.hpp"

#include <optional>
#include <span>
#include <vector>

namespace georamsey {

/// Orientation of every ordered triple, precomputed for sets small enough that
/// N^3 bytes is cheap. Larger sets fall back to computing on demand.
class OrientationTable {
 public:
  static constexpr std::size_t kMaxTabulated = 160;

  explicit OrientationTable(std::span<const ExactPoint> points)
      : points_(points.begin(), points.end()), n_(points.size()), small_(detail::to_small(points)) {
    if (n_ > kMaxTabulated) {
      return;
    }
    table_.resize(n_ * n_ * n_, Orientation::Collinear);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        for (std::size_t c = b + 1; c < n_; ++c) {
          const Orientation o = compute(a, b, c);
          const Orientation f = flip(o);
          at(a, b, c) = o;
          at(b, c, a) = o;
          at(c, a, b) = o;
          at(b, a, c) = f;
          at(a, c, b) = f;
          at(c, b, a) = f;
        }
      }
    }
  }

  std::size_t size() const noexcept { return n_; }

  Orientation operator()(std::size_t a, std::size_t b, std::size_t c) const {
    if (table_.empty()) {
      return compute(a, b, c);
    }
    return table_[(a * n_ + b) * n_ + c];
  }

  /// d strictly inside triangle abc.
  bool inside(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    const Orientation o = (*this)(a, b, d);
    return o != Orientation::Collinear && o == (*this)(b, c, d) && o == (*this)(c, a, d);
  }

  /// Four points (general position) are in convex position iff none lies
  /// inside the triangle of the other three.
  bool convex4(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return !inside(a, b, c, d) && !inside(a, b, d, c) && !inside(a, c, d, b) && !inside(b, c, d, a);
  }

 private:
  Orientation compute(std::size_t a, std::size_t b, std::size_t c) const {
    if (small_) {
      return orientation((*small_)[a], (*small_)[b], (*small_)[c]);
    }
    return orientation(points_[a], points_[b], points_[c]);
  }

  Orientation& at(std::size_t a, std::size_t b, std::size_t c) { return table_[(a * n_ + b) * n_ + c]; }

  std::vector<ExactPoint> points_;
  std::size_t n_;
  std::optional<std::vector<detail::SmallPoint>> small_;
  std::vector<Orientation> table_;
};

}  // namespace georamsey
