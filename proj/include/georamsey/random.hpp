#pragma once

// Seeded random instances. Boost's distributions are used because their output
// is fixed by the seed on every platform, unlike the standard library's.

#include "georamsey/coloring.hpp"
#include "georamsey/errors.hpp"
#include "georamsey/geometry.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace georamsey {

inline constexpr unsigned kDefaultCoordinateBits = 24;

/// N points with distinct x and no three collinear, coordinates in [0, 2^bits).
inline PointConfig random_points(std::size_t n, std::uint64_t seed, unsigned bits = kDefaultCoordinateBits) {
  if (bits < 4 || bits > 62) {
    throw BadInput("coordinate bits must lie in [4, 62]");
  }
  const std::int64_t hi = (std::int64_t{1} << bits) - 1;
  if (static_cast<std::uint64_t>(n) > static_cast<std::uint64_t>(hi) / 2) {
    throw BadInput("too many points for " + std::to_string(bits) + "-bit coordinates");
  }
  boost::random::mt19937_64 rng(seed);
  boost::random::uniform_int_distribution<std::int64_t> coord(0, hi);

  std::set<std::int64_t> xs;
  while (xs.size() < n) {
    xs.insert(coord(rng));
  }
  std::vector<ExactPoint> pts;
  pts.reserve(n);
  for (std::int64_t x : xs) {
    pts.push_back({Integer(x), Integer(coord(rng))});
  }
  while (auto bad = find_collinear_triple(pts)) {
    pts[(*bad)[2]].y = Integer(coord(rng));
  }
  return PointConfig(std::move(pts));
}

/// Uniformly random q-coloring of all arity-subsets of n vertices.
inline EdgeColoring random_coloring(std::size_t arity, std::size_t q, std::size_t n, std::uint64_t seed) {
  if (q < 1) {
    throw BadInput("need at least one color");
  }
  EdgeColoring out(arity, q, n);
  boost::random::mt19937_64 rng(seed);
  boost::random::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(q - 1));
  for (std::uint64_t r = 0; r < out.subset_count(); ++r) {
    out.set_at_rank(r, static_cast<Color>(pick(rng)));
  }
  return out;
}

}  // namespace georamsey
