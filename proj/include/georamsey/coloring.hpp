#pragma once

#include "georamsey/combinatorics.hpp"
#include "georamsey/errors.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace georamsey {

using Color = std::uint16_t;

/// Anything that colors the arity-subsets of {0..vertex_count()-1}. Subsets
/// are passed strictly increasing.
template <class C>
concept SubsetColoring = requires(const C& c, std::span<const std::size_t> s) {
  { c.arity() } -> std::convertible_to<std::size_t>;
  { c.colors() } -> std::convertible_to<std::size_t>;
  { c.vertex_count() } -> std::convertible_to<std::size_t>;
  { c.color(s) } -> std::convertible_to<Color>;
};

/// Colex rank of a strictly increasing subset: sum of C(s[i], i + 1).
inline std::uint64_t subset_rank(std::span<const std::size_t> subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    r += binomial(subset[i], i + 1);
  }
  return r;
}

/// Total mapping from arity-subsets of the vertex range to colors 0..colors-1,
/// stored densely by colex rank.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  EdgeColoring(std::size_t arity, std::size_t colors, std::size_t vertices, Color fill = 0)
      : arity_(arity), colors_(colors), vertices_(vertices) {
    if (arity < 1) {
      throw BadInput("coloring arity must be at least 1");
    }
    if (colors < 1) {
      throw BadInput("coloring needs at least one color");
    }
    if (fill >= colors) {
      throw BadInput("fill color " + std::to_string(fill) + " out of range");
    }
    const std::uint64_t count = binomial(vertices, arity);
    if (count > (std::uint64_t{1} << 32)) {
      throw BadInput("coloring with " + std::to_string(count) + " subsets is too large to store");
    }
    table_.assign(static_cast<std::size_t>(count), fill);
  }

  std::size_t arity() const noexcept { return arity_; }
  std::size_t colors() const noexcept { return colors_; }
  std::size_t vertex_count() const noexcept { return vertices_; }
  std::size_t subset_count() const noexcept { return table_.size(); }

  Color color(std::span<const std::size_t> subset) const { return table_[checked_rank(subset)]; }

  Color color(std::initializer_list<std::size_t> subset) const {
    return color(std::span<const std::size_t>(subset.begin(), subset.size()));
  }

  void set(std::span<const std::size_t> subset, Color c) {
    if (c >= colors_) {
      throw BadInput("color " + std::to_string(c) + " out of range 0.." + std::to_string(colors_ - 1));
    }
    table_[checked_rank(subset)] = c;
  }

  void set(std::initializer_list<std::size_t> subset, Color c) {
    set(std::span<const std::size_t>(subset.begin(), subset.size()), c);
  }

  /// Direct access by colex rank, for tight loops that already hold the rank.
  Color color_at_rank(std::uint64_t rank) const { return table_[static_cast<std::size_t>(rank)]; }

  void set_at_rank(std::uint64_t rank, Color c) {
    if (c >= colors_) {
      throw BadInput("color " + std::to_string(c) + " out of range 0.." + std::to_string(colors_ - 1));
    }
    table_.at(static_cast<std::size_t>(rank)) = c;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t checked_rank(std::span<const std::size_t> subset) const {
    if (subset.size() != arity_) {
      throw BadInput("subset of size " + std::to_string(subset.size()) + " for a coloring of arity " +
                     std::to_string(arity_));
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] >= vertices_ || (i > 0 && subset[i] <= subset[i - 1])) {
        throw BadInput("subset is not strictly increasing within the vertex range");
      }
    }
    return static_cast<std::size_t>(subset_rank(subset));
  }

  std::size_t arity_ = 2;
  std::size_t colors_ = 1;
  std::size_t vertices_ = 0;
  std::vector<Color> table_;
};

/// Copies any coloring into dense storage.
template <SubsetColoring C>
EdgeColoring materialize(const C& source) {
  EdgeColoring out(source.arity(), source.colors(), source.vertex_count());
  for_each_combination(source.vertex_count(), source.arity(), [&](std::span<const std::size_t> s) {
    out.set(s, source.color(s));
    return true;
  });
  return out;
}

/// True iff all arity-subsets of `vertices` (sorted) share one color. Vacuous
/// when fewer vertices than the arity.
template <SubsetColoring C>
bool is_monochromatic(const C& coloring, std::span<const std::size_t> vertices) {
  const std::size_t l = coloring.arity();
  if (vertices.size() < l) {
    return true;
  }
  bool first = true;
  Color ref = 0;
  bool mono = true;
  std::vector<std::size_t> sub(l);
  for_each_combination(vertices.size(), l, [&](std::span<const std::size_t> pick) {
    for (std::size_t i = 0; i < l; ++i) {
      sub[i] = vertices[pick[i]];
    }
    const Color c = coloring.color(sub);
    if (first) {
      ref = c;
      first = false;
    } else if (c != ref) {
      mono = false;
      return false;
    }
    return true;
  });
  return mono;
}

}  // namespace georamsey
