#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Small coordinates only; nothing here shares code with include/.

#include "georamsey/coloring.hpp"
#include "georamsey/point.hpp"
#include "georamsey/stepping_up.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracle {

struct P {
  long long x;
  long long y;
};

inline std::vector<P> small(std::span<const georamsey::ExactPoint> pts) {
  std::vector<P> out;
  for (const auto& p : pts) {
    if (abs(p.x) > (1LL << 40) || abs(p.y) > (1LL << 40)) {
      throw std::runtime_error("oracle: coordinates too large");
    }
    out.push_back({p.x.convert_to<long long>(), p.y.convert_to<long long>()});
  }
  return out;
}

inline int turn(P a, P b, P c) {
  const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

inline bool strictly_inside(P p, P a, P b, P c) {
  const int s1 = turn(a, b, p);
  const int s2 = turn(b, c, p);
  const int s3 = turn(c, a, p);
  return s1 != 0 && s1 == s2 && s2 == s3;
}

// Convex position for general-position input: no point inside a triangle of
// three others.
inline bool convex(const std::vector<P>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          if (p != a && p != b && p != c && strictly_inside(pts[p], pts[a], pts[b], pts[c])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline std::vector<P> pick(const std::vector<P>& pts, std::uint32_t mask) {
  std::vector<P> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (mask >> i & 1U) {
      out.push_back(pts[i]);
    }
  }
  return out;
}

inline std::size_t max_convex(const std::vector<P>& pts) {
  std::size_t best = std::min<std::size_t>(pts.size(), 3);
  for (std::uint32_t mask = 0; mask < (1U << pts.size()); ++mask) {
    const auto sub = pick(pts, mask);
    if (sub.size() > best && convex(sub)) {
      best = sub.size();
    }
  }
  return best;
}

// +1 cup, -1 cap, 0 neither; x-sorted input of size >= 3.
inline int cup_or_cap(const std::vector<P>& pts) {
  int all = turn(pts[0], pts[1], pts[2]);
  for (std::size_t i = 1; i + 2 < pts.size(); ++i) {
    if (turn(pts[i], pts[i + 1], pts[i + 2]) != all) {
      return 0;
    }
  }
  return all;
}

// Longest subsequence in which every triple turns the same way.
inline std::size_t longest_convex_chain(const std::vector<P>& pts) {
  std::size_t best = std::min<std::size_t>(pts.size(), 2);
  for (std::uint32_t mask = 0; mask < (1U << pts.size()); ++mask) {
    const auto sub = pick(pts, mask);
    if (sub.size() <= best) {
      continue;
    }
    for (int want : {1, -1}) {
      bool ok = true;
      for (std::size_t i = 0; i < sub.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < sub.size() && ok; ++j) {
          for (std::size_t k = j + 1; k < sub.size() && ok; ++k) {
            ok = turn(sub[i], sub[j], sub[k]) == want;
          }
        }
      }
      if (ok) {
        best = sub.size();
      }
    }
  }
  return best;
}

// Level of the smallest aligned block of labels holding a in its left half and
// b in its right half, found by scanning the blocks.
inline unsigned delta_by_blocks(std::uint64_t a, std::uint64_t b, unsigned t) {
  for (unsigned s = 1; s <= t; ++s) {
    const std::uint64_t size = std::uint64_t{1} << s;
    for (std::uint64_t start = 0; start < (std::uint64_t{1} << t); start += size) {
      const std::uint64_t mid = start + size / 2;
      if (start <= a && a < mid && mid <= b && b < start + size) {
        return s;
      }
    }
  }
  return 0;
}

// True iff pts[start, start + copy.size()) is a translate of copy.
inline bool is_translate(std::span<const georamsey::ExactPoint> pts, std::size_t start,
                         std::span<const georamsey::ExactPoint> copy) {
  if (start + copy.size() > pts.size()) {
    return false;
  }
  const georamsey::Integer dx = pts[start].x - copy[0].x;
  const georamsey::Integer dy = pts[start].y - copy[0].y;
  for (std::size_t i = 0; i < copy.size(); ++i) {
    if (pts[start + i].x != copy[i].x + dx || pts[start + i].y != copy[i].y + dy) {
      return false;
    }
  }
  return true;
}

// Smallest s such that some translated copy of P_s inside P_t holds a in its
// left half and b in its right half; copies are searched at every offset.
inline unsigned delta_by_geometry(std::span<const georamsey::ExactPoint> pts,
                                  const std::vector<georamsey::SteppingUpSet>& levels, std::size_t a, std::size_t b) {
  for (unsigned s = 1; s < levels.size(); ++s) {
    const auto copy = levels[s].config.points();
    const std::size_t half = copy.size() / 2;
    for (std::size_t start = 0; start + copy.size() <= pts.size(); ++start) {
      if (start <= a && a < start + half && start + half <= b && b < start + copy.size() &&
          is_translate(pts, start, copy)) {
        return s;
      }
    }
  }
  return 0;
}

template <class C>
bool pairs_share_color(const C& coloring, const std::vector<std::size_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (coloring.color({v[i], v[j]}) != coloring.color({v[0], v[1]})) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
