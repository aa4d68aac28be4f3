#pragma once

// Two-colorings of pairs without a monochromatic K_n, used as the base of the
// stepping-up construction. Built-in witnesses first, then a seeded local
// search; every candidate is verified exhaustively before it is returned.

#include "georamsey/coloring.hpp"
#include "georamsey/combinatorics.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace georamsey {

inline constexpr Color kRed = 0;
inline constexpr Color kBlue = 1;

/// C5: red iff the circular distance is 1.
inline EdgeColoring pentagon_coloring() {
  EdgeColoring c(2, 2, 5, kBlue);
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t j = (i + 1) % 5;
    c.set({std::min(i, j), std::max(i, j)}, kRed);
  }
  return c;
}

/// Paley graph on 17 vertices: red iff the difference is a nonzero square mod 17.
inline EdgeColoring paley17_coloring() {
  constexpr std::size_t p = 17;
  std::vector<bool> residue(p, false);
  for (std::size_t x = 1; x < p; ++x) {
    residue[(x * x) % p] = true;
  }
  EdgeColoring c(2, 2, p, kBlue);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      if (residue[j - i]) {
        c.set({i, j}, kRed);
      }
    }
  }
  return c;
}

/// Lexicographically first monochromatic n-clique, if any.
inline std::optional<std::vector<std::size_t>> find_monochromatic_clique(const EdgeColoring& pairs, std::size_t n) {
  std::optional<std::vector<std::size_t>> found;
  for_each_combination(pairs.vertex_count(), n, [&](std::span<const std::size_t> s) {
    if (is_monochromatic(pairs, s)) {
      found.emplace(s.begin(), s.end());
      return false;
    }
    return true;
  });
  return found;
}

struct RamseySearchOptions {
  std::uint64_t seed = 1;
  std::size_t restarts = 8;
  std::size_t flips_per_restart = 2000;
};

namespace detail {

// Random coloring, then repeatedly recolor a random edge of a random
// monochromatic n-clique until none is left.
inline std::optional<EdgeColoring> local_search(std::size_t m, std::size_t n, std::uint64_t seed,
                                                std::size_t flips) {
  std::mt19937_64 rng(seed);
  EdgeColoring c(2, 2, m);
  for_each_combination(m, 2, [&](std::span<const std::size_t> e) {
    c.set(e, static_cast<Color>(rng() & 1u));
    return true;
  });
  std::vector<std::vector<std::size_t>> bad;
  for (std::size_t step = 0; step <= flips; ++step) {
    bad.clear();
    for_each_combination(m, n, [&](std::span<const std::size_t> s) {
      if (is_monochromatic(c, s)) {
        bad.emplace_back(s.begin(), s.end());
      }
      return true;
    });
    if (bad.empty()) {
      return c;
    }
    const auto& clique = bad[rng() % bad.size()];
    std::size_t a = rng() % n;
    std::size_t b = rng() % (n - 1);
    if (b >= a) {
      ++b;
    }
    const std::size_t u = clique[std::min(a, b)];
    const std::size_t v = clique[std::max(a, b)];
    c.set({u, v}, static_cast<Color>(1 - c.color({u, v})));
  }
  return std::nullopt;
}

}  // namespace detail

/// A 2-coloring of the pairs of {0..m-1} with no monochromatic K_n, or nullopt
/// when the search budget runs out (which proves nothing).
inline std::optional<EdgeColoring> find_ramsey_witness(std::size_t m, std::size_t n,
                                                       const RamseySearchOptions& options = {}) {
  if (n < 2) {
    return std::nullopt;
  }
  if (m < n) {
    return EdgeColoring(2, 2, m);
  }
  // Any single edge is already a monochromatic K_2.
  if (n == 2) {
    return std::nullopt;
  }
  auto verified = [&](EdgeColoring c) -> std::optional<EdgeColoring> {
    if (find_monochromatic_clique(c, n)) {
      return std::nullopt;
    }
    return c;
  };
  if (m == 5 && n == 3) {
    if (auto c = verified(pentagon_coloring())) {
      return c;
    }
  }
  if (m == 17 && n == 4) {
    if (auto c = verified(paley17_coloring())) {
      return c;
    }
  }
  // Seeds are tried in increasing order, so the result depends only on options.seed.
  for (std::size_t r = 0; r < options.restarts; ++r) {
    if (auto c = detail::local_search(m, n, options.seed + r, options.flips_per_restart)) {
      if (auto v = verified(std::move(*c))) {
        return v;
      }
    }
  }
  return std::nullopt;
}

}  // namespace georamsey
