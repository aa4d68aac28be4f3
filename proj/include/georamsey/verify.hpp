#pragma once

// Exhaustive oracles. Every construction and every extracted witness in this
// library is checked against these, so they favour plain enumeration over
// cleverness; the pruned search is cross-checked against the unpruned one.

#include "georamsey/certificate.hpp"
#include "georamsey/coloring.hpp"
#include "georamsey/combinatorics.hpp"
#include "georamsey/errors.hpp"
#include "georamsey/geometry.hpp"
#include "georamsey/orientation_table.hpp"
#include "georamsey/stepping_up.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace georamsey {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  bool prune = true;
};

namespace detail {

template <SubsetColoring C>
void require_matching(std::span<const ExactPoint> points, const C& coloring) {
  if (coloring.vertex_count() != points.size()) {
    throw BadInput("coloring has " + std::to_string(coloring.vertex_count()) + " vertices but there are " +
                   std::to_string(points.size()) + " points");
  }
}

// Depth-first search over index-increasing subsets that stay monochromatic and
// in convex position (both properties are inherited by subsets). Subsets are
// visited in lexicographic order, so the first full-size hit is the
// lexicographically least witness.
template <SubsetColoring C>
class MonoConvexSearch {
 public:
  MonoConvexSearch(std::span<const ExactPoint> points, const C& coloring, std::size_t target, std::uint64_t budget)
      : table_(points), coloring_(coloring), n_(points.size()), target_(target), budget_(budget) {}

  Certificate run() {
    Certificate cert;
    cert.property = "mono-convex";
    cert.details.emplace_back("n", std::to_string(target_));
    if (target_ <= n_ && descend(0)) {
      cert.verdict = Verdict::Pass;
      cert.witness = chosen_;
    } else {
      cert.verdict = Verdict::Fail;
    }
    cert.examined = examined_;
    return cert;
  }

 private:
  bool descend(std::size_t from) {
    const std::size_t depth = chosen_.size();
    if (depth == target_) {
      ++examined_;
      return true;
    }
    const std::size_t remaining = target_ - depth;
    for (std::size_t v = from; v + remaining <= n_; ++v) {
      if (++work_ > budget_) {
        throw BudgetExceeded(examined_, budget_);
      }
      if (!accepts(v)) {
        // Every target-size subset extending chosen + v is ruled out at once.
        examined_ += binomial(n_ - v - 1, remaining - 1);
        continue;
      }
      chosen_.push_back(v);
      if (descend(v + 1)) {
        return true;
      }
      chosen_.pop_back();
    }
    return false;
  }

  bool accepts(std::size_t v) {
    const std::size_t l = coloring_.arity();
    const std::size_t d = chosen_.size();
    if (d + 1 >= l) {
      sub_.resize(l);
      bool ok = true;
      for_each_combination(d, l - 1, [&](std::span<const std::size_t> pick) {
        for (std::size_t i = 0; i + 1 < l; ++i) {
          sub_[i] = chosen_[pick[i]];
        }
        sub_[l - 1] = v;
        const Color c = coloring_.color(sub_);
        if (d + 1 == l) {
          reference_ = c;
        } else if (c != reference_) {
          ok = false;
        }
        return ok;
      });
      if (!ok) {
        return false;
      }
    }
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        for (std::size_t c = b + 1; c < d; ++c) {
          if (!table_.convex4(chosen_[a], chosen_[b], chosen_[c], v)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  OrientationTable table_;
  const C& coloring_;
  std::size_t n_;
  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::uint64_t examined_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> sub_;
  Color reference_ = 0;
};

}  // namespace detail

/// Searches for an n-subset in convex position all of whose arity-subsets share
/// one color. Pass carries the lexicographically least such subset; fail means
/// none exists. Throws BudgetExceeded rather than guessing.
template <SubsetColoring C>
Certificate has_mono_convex_subset(std::span<const ExactPoint> points, const C& coloring, std::size_t n,
                                   const EnumerationOptions& options = {}) {
  detail::require_matching(points, coloring);
  require_general_position(points);
  if (options.prune) {
    return detail::MonoConvexSearch<C>(points, coloring, n, options.budget).run();
  }

  Certificate cert;
  cert.property = "mono-convex";
  cert.details.emplace_back("n", std::to_string(n));
  cert.verdict = Verdict::Fail;
  std::vector<ExactPoint> sub;
  for_each_combination(points.size(), n, [&](std::span<const std::size_t> s) {
    if (cert.examined >= options.budget) {
      throw BudgetExceeded(cert.examined, options.budget);
    }
    ++cert.examined;
    sub.clear();
    for (std::size_t i : s) {
      sub.push_back(points[i]);
    }
    if (is_monochromatic(coloring, s) && is_convex_position(sub)) {
      cert.verdict = Verdict::Pass;
      cert.witness.emplace(s.begin(), s.end());
      return false;
    }
    return true;
  });
  return cert;
}

/// Largest k such that some k points are in convex position.
///
/// Every convex polygon splits at its leftmost point a and rightmost point r
/// into a cup below segment ar and a cap above it, so the answer is the best
/// (longest cup from a to r) + (longest cap from a to r) - 2. O(N^4).
inline std::size_t max_convex_subset_size(std::span<const ExactPoint> input) {
  require_general_position(input);
  const std::size_t n = input.size();
  if (n <= 3) {
    return n;
  }
  std::vector<ExactPoint> pts = shear_to_distinct_x(input).points;
  std::sort(pts.begin(), pts.end(), [](const ExactPoint& a, const ExactPoint& b) { return a.x < b.x; });
  const OrientationTable orient(pts);

  std::size_t best = 3;
  std::vector<std::size_t> cup(n * n);
  std::vector<std::size_t> cap(n * n);
  for (std::size_t a = 0; a + 2 < n; ++a) {
    // cup[i*n+j]: longest cup a, ..., i, j; likewise cap. Index a doubles as "just a".
    for (std::size_t j = a + 1; j < n; ++j) {
      std::size_t best_cup = 2;
      std::size_t best_cap = 2;
      cup[a * n + j] = 2;
      cap[a * n + j] = 2;
      for (std::size_t i = a + 1; i < j; ++i) {
        std::size_t cu = 0;
        std::size_t ca = 0;
        for (std::size_t h = a; h < i; ++h) {
          const Orientation o = orient(h, i, j);
          if (o == Orientation::Counterclockwise && cup[h * n + i]) {
            cu = std::max(cu, cup[h * n + i] + 1);
          } else if (o == Orientation::Clockwise && cap[h * n + i]) {
            ca = std::max(ca, cap[h * n + i] + 1);
          }
        }
        cup[i * n + j] = cu;
        cap[i * n + j] = ca;
        best_cup = std::max(best_cup, cu);
        best_cap = std::max(best_cap, ca);
      }
      best = std::max(best, best_cup + best_cap - 2);
    }
    // Clear the rows used with this anchor so the next anchor starts fresh.
    std::fill(cup.begin(), cup.end(), 0);
    std::fill(cap.begin(), cap.end(), 0);
  }
  return best;
}

/// Same quantity by trying every subset. N <= 20.
inline std::size_t max_convex_subset_size_brute(std::span<const ExactPoint> pts) {
  const std::size_t n = pts.size();
  if (n > 20) {
    throw BadInput("brute-force convex subset search is limited to 20 points");
  }
  std::size_t best = 0;
  std::vector<ExactPoint> sub;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) {
      continue;
    }
    sub.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sub.push_back(pts[i]);
      }
    }
    if (is_convex_position(sub)) {
      best = size;
    }
  }
  return best;
}

/// Pass iff no (k+2)-subset is a cup and no (l+2)-subset is a cap.
inline Certificate verify_cupcap_free(std::span<const ExactPoint> pts, std::size_t k, std::size_t l) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].x < pts[i].x)) {
      throw BadInput("verify_cupcap_free needs strictly increasing x");
    }
  }
  Certificate cert;
  cert.property = "cupcap-free";
  cert.details.emplace_back("k", std::to_string(k));
  cert.details.emplace_back("l", std::to_string(l));
  std::vector<ExactPoint> sub;
  auto scan = [&](std::size_t size, ChainKind forbidden) {
    if (size < 3) {
      // Any 2 points count as both a cup and a cap.
      if (pts.size() >= size) {
        cert.verdict = Verdict::Fail;
        cert.witness = first_combination(size);
        cert.details.emplace_back("kind", to_string(forbidden));
      }
      return;
    }
    for_each_combination(pts.size(), size, [&](std::span<const std::size_t> s) {
      ++cert.examined;
      sub.clear();
      for (std::size_t i : s) {
        sub.push_back(pts[i]);
      }
      if (classify_cup_cap(sub) == forbidden) {
        cert.verdict = Verdict::Fail;
        cert.witness.emplace(s.begin(), s.end());
        cert.details.emplace_back("kind", to_string(forbidden));
        return false;
      }
      return true;
    });
  };
  scan(k + 2, ChainKind::Cup);
  if (cert.passed()) {
    scan(l + 2, ChainKind::Cap);
  }
  return cert;
}

/// Every aligned label block of size 2^s (s = 2..t) with halves L, R: each line
/// through a pair of L passes strictly below each point of R, and each line
/// through a pair of R passes strictly above each point of L. Exhaustive over
/// all (pair, point) combinations.
inline Certificate verify_stepup_constraints(const SteppingUpSet& set) {
  const auto pts = set.config.points();
  Certificate cert;
  cert.property = "stepup";
  cert.details.emplace_back("t", std::to_string(set.level));
  if (pts.size() != (std::size_t{1} << set.level)) {
    throw BadInput("stepping-up set of level " + std::to_string(set.level) + " has " + std::to_string(pts.size()) +
                   " points");
  }
  const OrientationTable orient(pts);
  auto fail = [&](std::size_t a, std::size_t b, std::size_t p) {
    cert.verdict = Verdict::Fail;
    cert.witness = std::vector<std::size_t>{a, b, p};
  };
  for (unsigned s = 2; s <= set.level; ++s) {
    const std::size_t block = std::size_t{1} << s;
    const std::size_t half = block / 2;
    for (std::size_t base = 0; base < pts.size(); base += block) {
      const std::size_t mid = base + half;
      const std::size_t end = base + block;
      for (std::size_t a = base; a < mid; ++a) {
        for (std::size_t b = a + 1; b < mid; ++b) {
          for (std::size_t r = mid; r < end; ++r) {
            ++cert.examined;
            if (orient(a, b, r) != Orientation::Counterclockwise) {
              fail(a, b, r);
              return cert;
            }
          }
        }
      }
      for (std::size_t a = mid; a < end; ++a) {
        for (std::size_t b = a + 1; b < end; ++b) {
          for (std::size_t p = base; p < mid; ++p) {
            ++cert.examined;
            if (orient(a, b, p) != Orientation::Clockwise) {
              fail(a, b, p);
              return cert;
            }
          }
        }
      }
    }
  }
  return cert;
}

/// Consecutive delta values of an index-sorted label subset.
inline std::vector<unsigned> delta_sequence(std::span<const std::size_t> labels, unsigned level) {
  std::vector<unsigned> out;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    out.push_back(delta(labels[i - 1], labels[i], level).level);
  }
  return out;
}

/// Index i of the first local minimum d[i-1] > d[i] < d[i+1], if any.
inline std::optional<std::size_t> first_local_minimum(std::span<const unsigned> d) {
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    if (d[i - 1] > d[i] && d[i] < d[i + 1]) {
      return i;
    }
  }
  return std::nullopt;
}

inline unsigned label_level(std::size_t count) {
  unsigned t = 1;
  while ((std::size_t{1} << t) < count) {
    ++t;
  }
  return t;
}

/// Over every m-subset in convex position (labels = indices in x-order), the
/// consecutive delta sequence never has a local minimum.
inline Certificate check_delta_local_minimum_exclusion(std::span<const ExactPoint> pts, std::size_t m) {
  if (pts.size() > 64) {
    throw BadInput("local-minimum check is limited to 64 points");
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].x < pts[i].x)) {
      throw BadInput("local-minimum check needs strictly increasing x");
    }
  }
  require_general_position(pts);
  const unsigned level = label_level(pts.size());
  const OrientationTable orient(pts);
  Certificate cert;
  cert.property = "delta-local-min";
  cert.details.emplace_back("m", std::to_string(m));

  std::vector<std::size_t> chosen;
  // Returns true when a violation is found.
  auto descend = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == m) {
      ++cert.examined;
      const auto d = delta_sequence(chosen, level);
      return first_local_minimum(d).has_value();
    }
    for (std::size_t v = from; v + (m - chosen.size()) <= pts.size(); ++v) {
      bool convex = true;
      const std::size_t k = chosen.size();
      for (std::size_t a = 0; a < k && convex; ++a) {
        for (std::size_t b = a + 1; b < k && convex; ++b) {
          for (std::size_t c = b + 1; c < k && convex; ++c) {
            convex = orient.convex4(chosen[a], chosen[b], chosen[c], v);
          }
        }
      }
      if (!convex) {
        continue;
      }
      chosen.push_back(v);
      if (self(self, v + 1)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  if (descend(descend, 0)) {
    cert.verdict = Verdict::Fail;
    cert.witness = chosen;
  }
  return cert;
}

inline Certificate check_delta_local_minimum_exclusion(const SteppingUpSet& set, std::size_t m) {
  return check_delta_local_minimum_exclusion(set.config.points(), m);
}

/// Pass iff the stepping-up triple coloring on P_M has no monochromatic convex
/// 2n-subset. A witness on failure is annotated with the shape of its delta
/// sequence: a monotone run of n consecutive deltas, or a local minimum.
template <SubsetColoring C>
Certificate check_monotone_case_bound(const EdgeColoring& pair_coloring, const C& triple_coloring, std::size_t n,
                                      const EnumerationOptions& options = {}) {
  const auto level = static_cast<unsigned>(pair_coloring.vertex_count());
  if (triple_coloring.arity() != 3 || triple_coloring.vertex_count() != (std::size_t{1} << level)) {
    throw BadInput("triple coloring does not live on the 2^M points of the stepping-up set");
  }
  const SteppingUpSet set = gen_stepup_points(level);
  Certificate found = has_mono_convex_subset(set.config.points(), triple_coloring, 2 * n, options);
  Certificate cert;
  cert.property = "monotone-case";
  cert.examined = found.examined;
  cert.details.emplace_back("n", std::to_string(n));
  if (!found.passed()) {
    return cert;
  }
  cert.verdict = Verdict::Fail;
  cert.witness = found.witness;
  const auto d = delta_sequence(*found.witness, level);
  std::size_t up = 1;
  std::size_t down = 1;
  std::size_t longest = d.empty() ? 0 : 1;
  for (std::size_t i = 1; i < d.size(); ++i) {
    up = d[i] > d[i - 1] ? up + 1 : 1;
    down = d[i] < d[i - 1] ? down + 1 : 1;
    longest = std::max({longest, up, down});
  }
  cert.details.emplace_back("longest_monotone_run", std::to_string(longest));
  cert.details.emplace_back("local_minimum", first_local_minimum(d) ? "yes" : "no");
  return cert;
}

}  // namespace georamsey
