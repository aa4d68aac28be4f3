#pragma once

// Constructive side for colorings of pairs: grow a sequence p_1, p_2, ... with
// a shrinking survivor set S_t such that
//   1. every pair (p_i, p) with p later in the sequence or in S_t has one
//      color chi'(p_i);
//   2. for i < j, every later p makes (p_i, p_j, p) a cup, or every later p
//      makes it a cap;
//   3. S_t lies strictly to the right of p_t.
// Pigeonholing on chi' gives a monochromatic set in which every pair is
// comparable under "later points above the line" or "later points below the
// line"; a longest chain in one of these orders is a cup or a cap.
//
// Also the two recolorings that reduce convex monochromatic cliques in
// 3-uniform and >=4-uniform colorings to ordinary ones.

#include "georamsey/certificate.hpp"
#include "georamsey/coloring.hpp"
#include "georamsey/errors.hpp"
#include "georamsey/geometry.hpp"
#include "georamsey/orientation_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace georamsey {

struct SeparatedSequence {
  std::vector<std::size_t> sequence;
  // chi'(p_i); empty for a final element with nothing after it.
  std::vector<std::optional<Color>> vertex_color;
  std::vector<std::size_t> survivors;
  // |S_0|, |S_1|, ..., |S_t|
  std::vector<std::size_t> survivor_history;

  std::size_t steps() const noexcept { return sequence.size(); }
};

namespace detail {

inline void require_pair_coloring(const PointConfig& config, const EdgeColoring& coloring) {
  if (coloring.arity() != 2) {
    throw BadInput("expected a coloring of pairs, got arity " + std::to_string(coloring.arity()));
  }
  if (coloring.vertex_count() != config.size()) {
    throw BadInput("coloring has " + std::to_string(coloring.vertex_count()) + " vertices but the configuration has " +
                   std::to_string(config.size()) + " points");
  }
}

}  // namespace detail

/// Runs up to `steps` rounds. Each round takes the leftmost survivor, keeps the
/// largest cell of the line arrangement through it and the earlier sequence
/// points (cells are equal orientation signatures), then the largest color
/// class towards the new point. Ties go to the lexicographically smallest
/// signature and the smallest color.
inline SeparatedSequence build_separated_sequence(const PointConfig& config, const EdgeColoring& coloring,
                                                  std::size_t steps) {
  if (config.empty()) {
    throw EmptyInput("build_separated_sequence on an empty configuration");
  }
  detail::require_pair_coloring(config, coloring);
  const auto pts = config.points();
  SeparatedSequence seq;
  seq.survivors.resize(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    seq.survivors[i] = i;
  }
  seq.survivor_history.push_back(seq.survivors.size());

  while (seq.steps() < steps && !seq.survivors.empty()) {
    const std::size_t p = seq.survivors.front();

    std::map<std::vector<std::int8_t>, std::vector<std::size_t>> cells;
    std::vector<std::int8_t> signature(seq.sequence.size());
    for (std::size_t k = 1; k < seq.survivors.size(); ++k) {
      const std::size_t s = seq.survivors[k];
      for (std::size_t i = 0; i < seq.sequence.size(); ++i) {
        signature[i] = static_cast<std::int8_t>(orientation(pts[seq.sequence[i]], pts[p], pts[s]));
      }
      cells[signature].push_back(s);
    }
    const std::vector<std::size_t>* cell = nullptr;
    for (const auto& [sig, members] : cells) {
      if (!cell || members.size() > cell->size()) {
        cell = &members;
      }
    }

    std::optional<Color> chosen;
    std::vector<std::size_t> next;
    if (cell) {
      std::vector<std::vector<std::size_t>> classes(coloring.colors());
      for (std::size_t s : *cell) {
        classes[coloring.color({p, s})].push_back(s);
      }
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (!chosen || classes[c].size() > classes[*chosen].size()) {
          chosen = static_cast<Color>(c);
        }
      }
      next = std::move(classes[*chosen]);
    }
    seq.sequence.push_back(p);
    seq.vertex_color.push_back(chosen);
    seq.survivors = std::move(next);
    seq.survivor_history.push_back(seq.survivors.size());
  }
  return seq;
}

/// Exhaustively re-checks conditions 1-3 and reports the size bound
/// |S_t| >= N / (q^t t!) - t. Violations are collected, sorted, and the least
/// one becomes the witness.
inline Certificate check_sequence_invariants(const SeparatedSequence& seq, const PointConfig& config,
                                             const EdgeColoring& coloring) {
  detail::require_pair_coloring(config, coloring);
  const auto pts = config.points();
  const std::size_t t = seq.sequence.size();
  Certificate cert;
  cert.property = "separated-sequence";
  std::vector<std::vector<std::size_t>> violations;

  auto later = [&](std::size_t i) {
    std::vector<std::size_t> out(seq.sequence.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.sequence.end());
    out.insert(out.end(), seq.survivors.begin(), seq.survivors.end());
    return out;
  };

  // Condition 1.
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t p = seq.sequence[i];
    for (std::size_t q : later(i)) {
      ++cert.examined;
      const Color c = coloring.color({std::min(p, q), std::max(p, q)});
      if (i >= seq.vertex_color.size() || !seq.vertex_color[i] || c != *seq.vertex_color[i]) {
        violations.push_back({p, q});
      }
    }
  }
  // Condition 2.
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const auto rest = later(j);
      std::optional<Orientation> side;
      std::size_t first = 0;
      for (std::size_t q : rest) {
        ++cert.examined;
        const Orientation o = orientation(pts[seq.sequence[i]], pts[seq.sequence[j]], pts[q]);
        if (o == Orientation::Collinear) {
          violations.push_back({seq.sequence[i], seq.sequence[j], q});
        } else if (!side) {
          side = o;
          first = q;
        } else if (o != *side) {
          violations.push_back({seq.sequence[i], seq.sequence[j], first, q});
        }
      }
    }
  }
  // Condition 3.
  if (t > 0) {
    const ExactPoint& last = pts[seq.sequence.back()];
    for (std::size_t s : seq.survivors) {
      ++cert.examined;
      if (!(last.x < pts[s].x)) {
        violations.push_back({seq.sequence.back(), s});
      }
    }
  }

  // Condition 4 is reported, not enforced: N / (q^t t!) - t.
  double bound = static_cast<double>(config.size());
  for (std::size_t k = 1; k <= t; ++k) {
    bound /= static_cast<double>(coloring.colors()) * static_cast<double>(k);
  }
  bound -= static_cast<double>(t);
  std::ostringstream b;
  b << bound;
  cert.details.emplace_back("steps", std::to_string(t));
  cert.details.emplace_back("survivors", std::to_string(seq.survivors.size()));
  cert.details.emplace_back("size_bound", b.str());
  cert.details.emplace_back("size_bound_holds",
                            static_cast<double>(seq.survivors.size()) >= bound ? "yes" : "no");
  cert.details.emplace_back("violations", std::to_string(violations.size()));

  if (!violations.empty()) {
    std::sort(violations.begin(), violations.end());
    cert.verdict = Verdict::Fail;
    cert.witness = violations.front();
  }
  return cert;
}

struct MonochromaticClass {
  Color color = 0;
  std::vector<std::size_t> vertices;
};

/// Largest class of sequence vertices by chi' (smallest color on ties). A final
/// vertex with nothing after it has no constraint and joins the chosen class.
inline MonochromaticClass pigeonhole_monochromatic(const SeparatedSequence& seq, std::size_t q) {
  if (q < 1) {
    throw BadInput("pigeonhole needs at least one color");
  }
  std::vector<std::size_t> count(q, 0);
  for (const auto& c : seq.vertex_color) {
    if (!c) {
      continue;
    }
    if (*c < q) {
      ++count[*c];
    } else {
      throw BadInput("vertex color " + std::to_string(*c) + " out of range for q=" + std::to_string(q));
    }
  }
  MonochromaticClass out;
  out.color = static_cast<Color>(std::max_element(count.begin(), count.end()) - count.begin());
  for (std::size_t i = 0; i < seq.sequence.size(); ++i) {
    if (!seq.vertex_color[i] || *seq.vertex_color[i] == out.color) {
      out.vertices.push_back(seq.sequence[i]);
    }
  }
  return out;
}

struct ChainWitness {
  ChainKind kind = ChainKind::Cup;
  std::vector<std::size_t> vertices;
};

/// For an x-ordered vertex list in which later points always sit on one side
/// of the line through any earlier pair: the relations "all later points
/// above" (chains are cups) and "all later points below" (chains are caps).
/// above[i][j] / below[i][j] for positions i < j. Throws IncomparablePair.
struct ChainOrders {
  std::vector<std::vector<bool>> above;
  std::vector<std::vector<bool>> below;
};

inline ChainOrders chain_orders(std::span<const std::size_t> subset, const PointConfig& config) {
  const auto pts = config.points();
  const std::size_t k = subset.size();
  ChainOrders orders{std::vector<std::vector<bool>>(k, std::vector<bool>(k, false)),
                     std::vector<std::vector<bool>>(k, std::vector<bool>(k, false))};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool up = true;
      bool down = true;
      for (std::size_t r = j + 1; r < k; ++r) {
        const Orientation o = orientation(pts[subset[i]], pts[subset[j]], pts[subset[r]]);
        up = up && o == Orientation::Counterclockwise;
        down = down && o == Orientation::Clockwise;
      }
      if (!up && !down) {
        throw IncomparablePair(subset[i], subset[j]);
      }
      orders.above[i][j] = up;
      orders.below[i][j] = down;
    }
  }
  return orders;
}

/// Longest chain under either order, by dynamic programming over x-order.
/// Ties and chains shorter than 3 are reported as cups.
inline ChainWitness find_cup_or_cap_chain(std::span<const std::size_t> subset, const PointConfig& config) {
  for (std::size_t i = 1; i < subset.size(); ++i) {
    if (!(subset[i - 1] < subset[i])) {
      throw BadInput("chain extraction needs vertices in increasing x-order");
    }
  }
  const ChainOrders orders = chain_orders(subset, config);
  const std::size_t k = subset.size();

  auto longest = [&](const std::vector<std::vector<bool>>& rel) {
    std::vector<std::size_t> len(k, 1);
    std::vector<std::size_t> prev(k, k);
    std::size_t end = 0;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (rel[i][j] && len[i] + 1 > len[j]) {
          len[j] = len[i] + 1;
          prev[j] = i;
        }
      }
      if (len[j] > len[end]) {
        end = j;
      }
    }
    std::vector<std::size_t> chain;
    if (k == 0) {
      return chain;
    }
    for (std::size_t at = end; at != k; at = prev[at]) {
      chain.push_back(subset[at]);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  ChainWitness cup{ChainKind::Cup, longest(orders.above)};
  ChainWitness cap{ChainKind::Cap, longest(orders.below)};
  ChainWitness best = cap.vertices.size() > cup.vertices.size() ? std::move(cap) : std::move(cup);
  if (best.vertices.size() < 3) {
    best.kind = ChainKind::Cup;
  } else if (classify_cup_cap(config.subset(best.vertices)) != best.kind) {
    throw Error("chain extraction produced a chain that is not a " + std::string(to_string(best.kind)));
  }
  return best;
}

struct ExtractionResult {
  std::optional<ChainWitness> witness;
  std::optional<Color> color;
  // key=value lines describing how far each stage got
  std::vector<std::pair<std::string, std::string>> report;

  bool found() const noexcept { return witness.has_value(); }
};

inline std::string format_report(const ExtractionResult& r) {
  std::string out;
  for (const auto& [k, v] : r.report) {
    out += k + "=" + v + "\n";
  }
  return out;
}

/// Sequence with q*n^2 steps, pigeonhole, chain. Success needs a chain of
/// length n at the end; below the guaranteed size that is a matter of luck, and
/// every returned witness is re-checked (monochromatic and convex).
inline ExtractionResult extract_mono_convex(const PointConfig& config, const EdgeColoring& coloring, std::size_t n,
                                            std::optional<std::size_t> steps = std::nullopt) {
  detail::require_pair_coloring(config, coloring);
  const std::size_t q = coloring.colors();
  const std::size_t quota = steps.value_or(q * n * n);
  ExtractionResult result;
  auto& rep = result.report;
  rep.emplace_back("points", std::to_string(config.size()));
  rep.emplace_back("q", std::to_string(q));
  rep.emplace_back("n", std::to_string(n));
  rep.emplace_back("steps_requested", std::to_string(quota));

  if (config.empty()) {
    rep.emplace_back("status", "not_found");
    rep.emplace_back("failed_stage", "sequence");
    return result;
  }
  const SeparatedSequence seq = build_separated_sequence(config, coloring, quota);
  rep.emplace_back("steps_achieved", std::to_string(seq.steps()));
  rep.emplace_back("survivors_final", std::to_string(seq.survivors.size()));

  const MonochromaticClass mono = pigeonhole_monochromatic(seq, q);
  rep.emplace_back("pigeonhole_color", std::to_string(mono.color));
  rep.emplace_back("pigeonhole_size", std::to_string(mono.vertices.size()));
  rep.emplace_back("pigeonhole_target", std::to_string(n * n));

  const ChainWitness chain = find_cup_or_cap_chain(mono.vertices, config);
  rep.emplace_back("chain_kind", to_string(chain.kind));
  rep.emplace_back("chain_length", std::to_string(chain.vertices.size()));

  if (chain.vertices.size() < n) {
    rep.emplace_back("status", "not_found");
    rep.emplace_back("failed_stage", "chain");
    return result;
  }
  ChainWitness w{chain.kind, {chain.vertices.begin(), chain.vertices.begin() + static_cast<std::ptrdiff_t>(n)}};
  if (w.vertices.size() < 3) {
    w.kind = ChainKind::Cup;
  }
  const auto sub = config.subset(w.vertices);
  if (!is_monochromatic(coloring, w.vertices) || !is_convex_position(sub)) {
    throw Error("extracted witness failed the monochromatic convex re-check");
  }
  result.color = w.vertices.size() >= 2 ? std::optional<Color>(coloring.color({w.vertices[0], w.vertices[1]}))
                                        : std::optional<Color>(mono.color);
  result.witness = std::move(w);
  rep.emplace_back("status", "found");
  rep.emplace_back("color", std::to_string(*result.color));
  return result;
}

/// Triple (i<j<k) gets color 2*old + (1 if counterclockwise else 0). A
/// monochromatic clique of the result is monochromatic before and uniformly
/// oriented, hence in convex position.
template <SubsetColoring C>
EdgeColoring orientation_augmented_coloring(std::span<const ExactPoint> points, const C& coloring) {
  if (coloring.arity() != 3) {
    throw BadInput("orientation augmentation expects a coloring of triples");
  }
  if (coloring.vertex_count() != points.size()) {
    throw BadInput("coloring and point set sizes differ");
  }
  const OrientationTable orient(points);
  EdgeColoring out(3, 2 * coloring.colors(), points.size());
  for_each_combination(points.size(), 3, [&](std::span<const std::size_t> s) {
    const Orientation o = orient(s[0], s[1], s[2]);
    if (o == Orientation::Collinear) {
      throw GeneralPositionViolated(s[0], s[1], s[2]);
    }
    out.set(s, static_cast<Color>(2 * coloring.color(s) + (o == Orientation::Counterclockwise ? 1 : 0)));
    return true;
  });
  return out;
}

/// Every arity-subset that is not in convex position gets the new color q.
template <SubsetColoring C>
EdgeColoring nonconvex_augmented_coloring(std::span<const ExactPoint> points, const C& coloring) {
  const std::size_t l = coloring.arity();
  if (l < 4) {
    throw BadInput("non-convex augmentation expects arity at least 4");
  }
  if (coloring.vertex_count() != points.size()) {
    throw BadInput("coloring and point set sizes differ");
  }
  require_general_position(points);
  const OrientationTable orient(points);
  const auto fresh = static_cast<Color>(coloring.colors());
  EdgeColoring out(l, coloring.colors() + 1, points.size());
  for_each_combination(points.size(), l, [&](std::span<const std::size_t> s) {
    bool convex = true;
    for_each_combination(l, 4, [&](std::span<const std::size_t> f) {
      convex = orient.convex4(s[f[0]], s[f[1]], s[f[2]], s[f[3]]);
      return convex;
    });
    out.set(s, convex ? coloring.color(s) : fresh);
    return true;
  });
  return out;
}

}  // namespace georamsey
