#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace georamsey {

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step; divide by the gcd first to stay in range.
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    const std::uint64_t g = std::gcd(r, den);
    r /= g;
    den /= g;
    num /= den;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= num;
  }
  return r;
}

/// Advances `subset` (strictly increasing, values < n) to the next subset in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::span<std::size_t> subset, std::size_t n) {
  const std::size_t k = subset.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (subset[i] < n - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        subset[j] = subset[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early when f returns false.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) {
    return;
  }
  auto s = first_combination(k);
  do {
    if (!f(std::span<const std::size_t>(s))) {
      return;
    }
  } while (next_combination(s, n));
}

}  // namespace georamsey
