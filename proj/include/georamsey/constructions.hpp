#pragma once

// Lower-bound point sets: sets with no long cups or caps, sets with no large
// convex subset, and the blow-up coloring of pairs with no monochromatic
// convex n-subset.

#include "georamsey/coloring.hpp"
#include "georamsey/combinatorics.hpp"
#include "georamsey/detail/placement.hpp"
#include "georamsey/errors.hpp"
#include "georamsey/geometry.hpp"
#include "georamsey/orientation_table.hpp"

#include <map>
#include <optional>
#include <utility>
#include <set>
#include <vector>

namespace georamsey {

namespace detail {

inline const std::vector<ExactPoint>& cupcap_free_points(std::size_t k, std::size_t l,
                                                         std::map<std::pair<std::size_t, std::size_t>,
                                                                  std::vector<ExactPoint>>& memo) {
  const auto key = std::make_pair(k, l);
  if (auto it = memo.find(key); it != memo.end()) {
    return it->second;
  }
  std::vector<ExactPoint> pts;
  if (k == 0 || l == 0) {
    pts = make_points({{0, 0}});
  } else {
    // A cup reaching into the right block has at most one point there, and a
    // cap reaching into the left block has at most one point there.
    const auto left = cupcap_free_points(k - 1, l, memo);
    const auto right = cupcap_free_points(k, l - 1, memo);
    pts = place_right_above(left, right);
  }
  return memo.emplace(key, std::move(pts)).first->second;
}

}  // namespace detail

/// C(k+l, k) points with no (k+2)-cup and no (l+2)-cap.
inline PointConfig gen_cupcap_free(std::size_t k, std::size_t l) {
  if (binomial(k + l, k) > (std::uint64_t{1} << 16)) {
    throw BadInput("gen_cupcap_free(" + std::to_string(k) + ", " + std::to_string(l) + ") is too large");
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ExactPoint>> memo;
  return PointConfig(detail::cupcap_free_points(k, l, memo));
}

inline constexpr std::size_t kMaxNoConvexN = 14;

/// 2^(n-2) points with no n of them in convex position.
///
/// Blocks B_i = gen_cupcap_free(i, n-2-i), i = 0..n-2, sit left to right. The
/// scale is doubled until, exactly,
///   * every slope between two blocks exceeds every slope inside a block, and
///   * for blocks i < j < k, every slope between B_i and B_j is below every
///     slope between B_j and B_k, so any three points from distinct blocks
///     form a cup.
/// A convex subset then has a cup in its first block, a cap in its last block
/// and at most one point in each block between, which totals at most n-1.
inline PointConfig gen_no_convex(std::size_t n) {
  if (n < 3) {
    throw BadInput("gen_no_convex needs n >= 3");
  }
  if (n > kMaxNoConvexN) {
    throw BadInput("gen_no_convex(" + std::to_string(n) + ") exceeds the practical bound");
  }
  const std::size_t blocks = n - 1;
  std::vector<PointConfig> parts;
  Integer width = 0;
  for (std::size_t i = 0; i < blocks; ++i) {
    parts.push_back(gen_cupcap_free(i, n - 2 - i));
    const auto box = detail::bounding_box(parts.back().points());
    width = std::max(width, box.xmax - box.xmin);
  }

  using detail::Ratio;
  // Signed slope b - a as a ratio with positive denominator.
  auto slope = [](const ExactPoint& a, const ExactPoint& b) { return Ratio{b.y - a.y, b.x - a.x}; };

  // Largest slope inside any block; neighbours in x-order attain it.
  std::optional<Ratio> inner_max;
  for (const auto& part : parts) {
    const auto p = part.points();
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (auto s = slope(p[i - 1], p[i]); !inner_max || detail::less(*inner_max, s)) {
        inner_max = s;
      }
    }
  }

  for (Integer scale = 1;; scale *= 2) {
    if (scale > (Integer(1) << 256)) {
      throw Error("gen_no_convex: no admissible scale found");
    }
    std::vector<std::vector<ExactPoint>> placed;
    for (std::size_t i = 0; i < blocks; ++i) {
      // Gaps grow like scale and rises like scale^2, so block-to-block slopes
      // grow like scale while the blocks shrink relative to the gaps.
      const Integer dx = Integer(i) * (width + 1) * scale;
      const Integer dy = scale * scale * Integer(i * (i + 1) / 2);
      placed.push_back(detail::translated(parts[i].points(), dx, dy));
    }
    // lo[i][j], hi[i][j]: extreme slopes between blocks i < j.
    std::vector<std::vector<Ratio>> lo(blocks, std::vector<Ratio>(blocks));
    std::vector<std::vector<Ratio>> hi(blocks, std::vector<Ratio>(blocks));
    bool ok = true;
    for (std::size_t i = 0; i < blocks && ok; ++i) {
      for (std::size_t j = i + 1; j < blocks && ok; ++j) {
        bool first = true;
        for (const auto& a : placed[i]) {
          for (const auto& b : placed[j]) {
            Ratio s = slope(a, b);
            if (first || detail::less(s, lo[i][j])) {
              lo[i][j] = s;
            }
            if (first || detail::less(hi[i][j], s)) {
              hi[i][j] = s;
            }
            first = false;
          }
        }
        ok = !inner_max || detail::less(*inner_max, lo[i][j]);
      }
    }
    for (std::size_t i = 0; i < blocks && ok; ++i) {
      for (std::size_t j = i + 1; j < blocks && ok; ++j) {
        for (std::size_t k = j + 1; k < blocks && ok; ++k) {
          ok = detail::less(hi[i][j], lo[j][k]);
        }
      }
    }
    if (!ok) {
      continue;
    }
    std::vector<ExactPoint> all;
    for (auto& block : placed) {
      all.insert(all.end(), block.begin(), block.end());
    }
    return PointConfig(std::move(all));
  }
}

struct BlowupInstance {
  PointConfig config;
  EdgeColoring coloring;
  Integer scale;  // copies of the base set sit at scale * v_i
};

namespace detail {

// Doubles the spread of the coarse instance until every triple taken from three
// distinct copies is oriented like the corresponding coarse triple, the whole
// set is in general position and x-order is copy-major.
inline BlowupInstance blow_up(const PointConfig& coarse, const EdgeColoring& coarse_colors, const PointConfig& base,
                              Color inner_color) {
  const std::size_t m = coarse.size();
  const std::size_t b = base.size();
  const std::size_t total = m * b;

  const OrientationTable coarse_orient(coarse.points());
  std::vector<std::size_t> copy_of(total);
  for (std::size_t i = 0; i < total; ++i) {
    copy_of[i] = i / b;
  }

  // A copy edge parallel to a coarse edge makes a collinear triple at every
  // scale, so the copies are stretched vertically by the least factor that
  // avoids all such parallels. The stretch preserves orientations.
  auto direction = [](Integer dx, Integer dy) {
    const Integer g = gcd(dx, dy);
    return std::pair<Integer, Integer>(dx / g, dy / g);
  };
  std::set<std::pair<Integer, Integer>> coarse_dirs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      coarse_dirs.insert(direction(coarse[j].x - coarse[i].x, coarse[j].y - coarse[i].y));
    }
  }
  Integer stretch = 1;
  for (bool clash = true; clash; ) {
    clash = false;
    for (std::size_t i = 0; i < b && !clash; ++i) {
      for (std::size_t j = i + 1; j < b && !clash; ++j) {
        clash = coarse_dirs.contains(direction(base[j].x - base[i].x, stretch * (base[j].y - base[i].y)));
      }
    }
    if (clash) {
      ++stretch;
    }
  }

  for (Integer scale = 1;; scale *= 2) {
    if (scale > (Integer(1) << 512)) {
      throw Error("blow-up: no admissible scale found");
    }
    std::vector<ExactPoint> pts;
    pts.reserve(total);
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& g : base.points()) {
        pts.push_back({scale * coarse[i].x + g.x, scale * coarse[i].y + stretch * g.y});
      }
    }
    bool ok = true;
    for (std::size_t i = 1; i < total && ok; ++i) {
      ok = pts[i - 1].x < pts[i].x;
    }
    if (!ok) {
      continue;
    }
    auto small = to_small(pts);
    auto orient = [&](std::size_t u, std::size_t v, std::size_t w) {
      return small ? orientation((*small)[u], (*small)[v], (*small)[w]) : orientation(pts[u], pts[v], pts[w]);
    };
    for (std::size_t u = 0; u < total && ok; ++u) {
      for (std::size_t v = u + 1; v < total && ok; ++v) {
        if (copy_of[v] == copy_of[u]) {
          continue;
        }
        for (std::size_t w = v + 1; w < total && ok; ++w) {
          if (copy_of[w] == copy_of[v]) {
            continue;
          }
          ok = orient(u, v, w) == coarse_orient(copy_of[u], copy_of[v], copy_of[w]);
        }
      }
    }
    if (!ok || !is_general_position(pts)) {
      continue;
    }

    EdgeColoring colors(2, coarse_colors.colors() + 1, total);
    for (std::size_t u = 0; u < total; ++u) {
      for (std::size_t v = u + 1; v < total; ++v) {
        const Color c = copy_of[u] == copy_of[v] ? inner_color : coarse_colors.color({copy_of[u], copy_of[v]});
        colors.set({u, v}, c);
      }
    }
    return BlowupInstance{PointConfig(std::move(pts)), std::move(colors), scale};
  }
}

}  // namespace detail

inline constexpr std::size_t kMaxBlowupExponent = 9;

/// 2^(q(n-2)) points with a q-coloring of pairs and no monochromatic convex
/// n-subset. Color c < q-1 lives between copies made at an earlier level;
/// color q-1 lives inside the innermost copies.
inline BlowupInstance gen_blowup_coloring(std::size_t n, std::size_t q) {
  if (n < 4) {
    throw BadInput("gen_blowup_coloring needs n >= 4");
  }
  if (q < 1) {
    throw BadInput("gen_blowup_coloring needs q >= 1");
  }
  if ((n - 2) * q > kMaxBlowupExponent) {
    throw BadInput("gen_blowup_coloring: 2^(q(n-2)) exceeds 2^" + std::to_string(kMaxBlowupExponent) + " points");
  }
  const PointConfig base = gen_no_convex(n);
  BlowupInstance current{base, EdgeColoring(2, 1, base.size(), 0), 1};
  for (std::size_t level = 2; level <= q; ++level) {
    current = detail::blow_up(current.config, current.coloring, base, static_cast<Color>(level - 1));
  }
  return current;
}

}  // namespace georamsey
