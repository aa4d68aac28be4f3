#pragma once

// Recursive point sets P_t for lifting a pair coloring on M vertices to a
// triple coloring on 2^M points. P_{t+1} is two copies L, R of P_t with every
// line through a pair of L passing below R and every line through a pair of R
// passing above L. Point i of P_t carries label i (x-order), so the copies of
// P_s inside P_t are exactly the aligned label blocks of size 2^s.

#include "georamsey/coloring.hpp"
#include "georamsey/detail/placement.hpp"
#include "georamsey/errors.hpp"
#include "georamsey/geometry.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace georamsey {

inline constexpr unsigned kMaxStepUpLevel = 12;

/// Recursion level of the smallest copy holding one label in its left half
/// and the other in its right half.
struct DeltaValue {
  unsigned level = 0;

  friend auto operator<=>(const DeltaValue&, const DeltaValue&) = default;
};

/// One-indexed position of the most significant bit where a and b differ.
inline DeltaValue delta(std::uint64_t a, std::uint64_t b, unsigned level) {
  if (level >= 64) {
    throw BadLabels("level " + std::to_string(level) + " out of range");
  }
  const std::uint64_t n = std::uint64_t{1} << level;
  if (!(a < b) || b >= n) {
    throw BadLabels("labels must satisfy 0 <= a < b < 2^t, got a=" + std::to_string(a) +
                    " b=" + std::to_string(b) + " t=" + std::to_string(level));
  }
  return {static_cast<unsigned>(std::bit_width(a ^ b))};
}

struct SteppingUpSet {
  unsigned level = 0;
  PointConfig config;

  std::size_t size() const noexcept { return config.size(); }
  DeltaValue delta(std::size_t a, std::size_t b) const { return georamsey::delta(a, b, level); }
};

namespace detail {

// Exact check of every nested L/R line condition. For a fixed point r to the
// right of L, "r above every line through two points of L" is equivalent to
// the directions r->a being angularly sorted along the x-order of L (they all
// lie in the open left half-plane, where angular order is transitive), so
// neighbouring pairs suffice. Same for L-points against lines through R.
// Returns the first violating (a, b, p) label triple.
inline std::optional<std::array<std::size_t, 3>> stepup_violation_fast(std::span<const ExactPoint> pts,
                                                                        unsigned level) {
  for (unsigned s = 2; s <= level; ++s) {
    const std::size_t block = std::size_t{1} << s;
    const std::size_t half = block / 2;
    for (std::size_t base = 0; base < pts.size(); base += block) {
      const std::size_t mid = base + half;
      for (std::size_t r = mid; r < base + block; ++r) {
        for (std::size_t a = base; a + 1 < mid; ++a) {
          if (orientation(pts[a], pts[a + 1], pts[r]) != Orientation::Counterclockwise) {
            return std::array<std::size_t, 3>{a, a + 1, r};
          }
        }
      }
      for (std::size_t l = base; l < mid; ++l) {
        for (std::size_t a = mid; a + 1 < base + block; ++a) {
          if (orientation(pts[a], pts[a + 1], pts[l]) != Orientation::Clockwise) {
            return std::array<std::size_t, 3>{a, a + 1, l};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Builds P_t (2^t points). P_1 is {(0,0), (1,0)}; each step shifts a copy
/// right by width + 1 and up by the smallest integer clearing every line.
inline SteppingUpSet gen_stepup_points(unsigned t) {
  if (t < 1) {
    throw BadInput("stepping-up level must be at least 1");
  }
  if (t > kMaxStepUpLevel) {
    throw LevelTooLarge("stepping-up level " + std::to_string(t) + " exceeds the practical bound " +
                        std::to_string(kMaxStepUpLevel));
  }
  std::vector<ExactPoint> pts = make_points({{0, 0}, {1, 0}});
  for (unsigned level = 1; level < t; ++level) {
    pts = detail::place_right_above(pts, pts);
  }
  if (auto bad = detail::stepup_violation_fast(pts, t)) {
    throw Error("stepping-up construction violated a line constraint at labels " +
                std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]));
  }
  return SteppingUpSet{t, PointConfig(std::move(pts))};
}

/// Triple coloring chi'(i, j, k) = chi(delta(i, j), delta(j, k)) on the labels
/// of P_M, computed on demand. Base vertex v stands for delta level v + 1.
class StepUpColoring {
 public:
  explicit StepUpColoring(EdgeColoring base) : base_(std::move(base)) {
    if (base_.arity() != 2) {
      throw BadBase("base coloring must color pairs, got arity " + std::to_string(base_.arity()));
    }
    if (base_.colors() != 2) {
      throw BadBase("base coloring must use exactly 2 colors, got " + std::to_string(base_.colors()));
    }
    if (base_.vertex_count() < 1 || base_.vertex_count() >= 64) {
      throw BadBase("base coloring must have between 1 and 63 vertices");
    }
    if (base_.subset_count() != binomial(base_.vertex_count(), 2)) {
      throw BadBase("base coloring is not total");
    }
  }

  std::size_t arity() const noexcept { return 3; }
  std::size_t colors() const noexcept { return 2; }
  std::size_t vertex_count() const noexcept { return std::size_t{1} << base_.vertex_count(); }
  unsigned level() const noexcept { return static_cast<unsigned>(base_.vertex_count()); }
  const EdgeColoring& base() const noexcept { return base_; }

  Color color(std::span<const std::size_t> triple) const {
    if (triple.size() != 3) {
      throw BadInput("stepping-up coloring colors triples");
    }
    return color(triple[0], triple[1], triple[2]);
  }

  Color color(std::size_t i, std::size_t j, std::size_t k) const {
    const unsigned d1 = delta(i, j, level()).level;
    const unsigned d2 = delta(j, k, level()).level;
    // d1 != d2 for every i < j < k, so the base is always asked about a genuine pair.
    return base_.color({std::min(d1, d2) - 1u, std::max(d1, d2) - 1u});
  }

 private:
  EdgeColoring base_;
};

inline constexpr unsigned kMaxMaterializedStepUpBase = 5;

/// Dense chi' for base colorings on at most 5 vertices (32 points); larger
/// bases should keep using StepUpColoring as an on-demand oracle.
inline EdgeColoring gen_stepup_coloring(const EdgeColoring& pair_coloring) {
  StepUpColoring lazy(pair_coloring);
  if (pair_coloring.vertex_count() > kMaxMaterializedStepUpBase) {
    throw BadBase("base on " + std::to_string(pair_coloring.vertex_count()) +
                  " vertices is too large to materialize; use StepUpColoring");
  }
  return materialize(lazy);
}

}  // namespace georamsey
