#include "oracles.hpp"

#include "georamsey/extraction.hpp"
#include "georamsey/random.hpp"

#include <gtest/gtest.h>

using namespace georamsey;

namespace {

// Seeds pinned by running them once; the assertions below must stay stable.
constexpr std::uint64_t kSeed500 = 1;
constexpr std::uint64_t kSeed400 = 1;

PointConfig parabola(std::size_t n) {
  std::vector<ExactPoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(make_point(static_cast<long long>(i), static_cast<long long>(i * i)));
  }
  return PointConfig(pts);
}

}  // namespace

TEST(Sequence, ZeroStepsKeepsEverything) {
  const PointConfig cfg = random_points(10, 3);
  const auto seq = build_separated_sequence(cfg, EdgeColoring(2, 2, 10), 0);
  EXPECT_TRUE(seq.sequence.empty());
  EXPECT_EQ(seq.survivors.size(), 10u);
  EXPECT_TRUE(check_sequence_invariants(seq, cfg, EdgeColoring(2, 2, 10)).passed());
}

TEST(Sequence, ConvexQuadrilateral) {
  const PointConfig cfg(make_points({{0, 0}, {1, -2}, {3, -1}, {4, 2}}));
  const EdgeColoring one(2, 1, 4);
  const auto seq = build_separated_sequence(cfg, one, 2);
  EXPECT_EQ(seq.steps(), 2u);
  EXPECT_TRUE(check_sequence_invariants(seq, cfg, one).passed());
}

TEST(Sequence, EmptyInputThrows) {
  EXPECT_THROW(build_separated_sequence(PointConfig{}, EdgeColoring(2, 1, 0), 3), EmptyInput);
}

TEST(Sequence, PinnedFiveHundredPointInstance) {
  const PointConfig cfg = random_points(500, kSeed500);
  const EdgeColoring col = random_coloring(2, 2, 500, kSeed500);
  const auto seq = build_separated_sequence(cfg, col, 2 * 4 * 4);
  EXPECT_GE(seq.steps(), 8u);
  EXPECT_TRUE(check_sequence_invariants(seq, cfg, col).passed());
}

TEST(Sequence, InvariantsOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 50 + 17 * seed;
    const std::size_t q = 1 + seed % 3;
    const PointConfig cfg = random_points(n, seed);
    const EdgeColoring col = random_coloring(2, q, n, seed + 1000);
    const auto seq = build_separated_sequence(cfg, col, 64);
    const Certificate c = check_sequence_invariants(seq, cfg, col);
    ASSERT_TRUE(c.passed()) << to_string(c);
    for (std::size_t i = 1; i < seq.survivor_history.size(); ++i) {
      ASSERT_LT(seq.survivor_history[i], seq.survivor_history[i - 1]);
    }
  }
}

TEST(Sequence, PlantedColorDefectIsReported) {
  const PointConfig cfg = random_points(40, 8);
  EdgeColoring col = random_coloring(2, 2, 40, 8);
  const auto seq = build_separated_sequence(cfg, col, 4);
  ASSERT_GE(seq.steps(), 2u);
  ASSERT_FALSE(seq.survivors.empty());
  const std::size_t p = seq.sequence[0];
  const std::size_t s = seq.survivors[0];
  col.set({std::min(p, s), std::max(p, s)}, static_cast<Color>(1 - col.color({std::min(p, s), std::max(p, s)})));
  const Certificate c = check_sequence_invariants(seq, cfg, col);
  ASSERT_FALSE(c.passed());
  EXPECT_EQ(*c.witness, (std::vector<std::size_t>{p, s}));
}

TEST(Sequence, EmptySequenceIsVacuous) {
  const PointConfig cfg = random_points(5, 1);
  SeparatedSequence seq;
  const Certificate c = check_sequence_invariants(seq, cfg, EdgeColoring(2, 2, 5));
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.examined, 0u);
}

TEST(Pigeonhole, Counting) {
  SeparatedSequence seq;
  seq.sequence = {0, 1, 2, 3, 4, 5};
  for (Color c : {0, 0, 1, 0, 1, 0}) {
    seq.vertex_color.push_back(c);
  }
  const auto m = pigeonhole_monochromatic(seq, 2);
  EXPECT_EQ(m.color, 0);
  EXPECT_EQ(m.vertices, (std::vector<std::size_t>{0, 1, 3, 5}));

  seq.vertex_color.assign(6, Color{1});
  EXPECT_EQ(pigeonhole_monochromatic(seq, 2).vertices, seq.sequence);
}

TEST(Pigeonhole, ClassesAreMonochromaticAndComparable) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 200 + 10 * seed;
    const std::size_t q = 1 + seed % 3;
    const PointConfig cfg = random_points(n, seed);
    const EdgeColoring col = random_coloring(2, q, n, seed);
    const auto seq = build_separated_sequence(cfg, col, q * 16);
    const auto mono = pigeonhole_monochromatic(seq, q);
    EXPECT_GE(mono.vertices.size() * q, seq.steps());
    EXPECT_TRUE(oracle::pairs_share_color(col, mono.vertices));
    EXPECT_NO_THROW(chain_orders(mono.vertices, cfg));
  }
}

TEST(Chain, Examples) {
  const PointConfig cup = parabola(4);
  const std::vector<std::size_t> all{0, 1, 2, 3};
  const auto w = find_cup_or_cap_chain(all, cup);
  EXPECT_EQ(w.kind, ChainKind::Cup);
  EXPECT_EQ(w.vertices, all);

  const std::vector<std::size_t> two{1, 3};
  const auto t = find_cup_or_cap_chain(two, cup);
  EXPECT_EQ(t.kind, ChainKind::Cup);
  EXPECT_EQ(t.vertices.size(), 2u);
}

TEST(Chain, NineElementSubsetMeetsTheSquareRootBound) {
  const PointConfig cfg = random_points(1000, 4);
  const EdgeColoring one(2, 1, 1000);
  const auto seq = build_separated_sequence(cfg, one, 9);
  ASSERT_EQ(seq.steps(), 9u);
  const auto mono = pigeonhole_monochromatic(seq, 1);
  ASSERT_EQ(mono.vertices.size(), 9u);
  const auto w = find_cup_or_cap_chain(mono.vertices, cfg);
  EXPECT_GE(w.vertices.size(), 3u);
  EXPECT_EQ(w.vertices.size(), oracle::longest_convex_chain(oracle::small(cfg.subset(mono.vertices))));
}

TEST(Chain, DynamicProgramMatchesBruteForce) {
  std::size_t compared = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 400 + 20 * seed;
    const PointConfig cfg = random_points(n, seed + 77);
    const EdgeColoring one(2, 1, n);
    const auto seq = build_separated_sequence(cfg, one, 12);
    const auto mono = pigeonhole_monochromatic(seq, 1);
    for (std::size_t len = 1; len <= mono.vertices.size(); ++len) {
      const std::vector<std::size_t> sub(mono.vertices.begin(), mono.vertices.begin() + static_cast<long>(len));
      const auto w = find_cup_or_cap_chain(sub, cfg);
      ASSERT_EQ(w.vertices.size(), oracle::longest_convex_chain(oracle::small(cfg.subset(sub))));
      if (w.vertices.size() >= 3) {
        ASSERT_EQ(classify_cup_cap(cfg.subset(w.vertices)), w.kind);
      }
      ++compared;
    }
  }
  EXPECT_GT(compared, 100u);
}

TEST(Chain, IncomparablePairThrows) {
  const PointConfig cfg(make_points({{0, 0}, {1, 0}, {2, 1}, {3, -1}}));
  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_THROW(find_cup_or_cap_chain(all, cfg), IncomparablePair);
}

TEST(Extract, OneColorTriangle) {
  const PointConfig cfg = random_points(12, 2);
  const auto r = extract_mono_convex(cfg, EdgeColoring(2, 1, 12), 3);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witness->vertices.size(), 3u);
  EXPECT_EQ(*r.color, 0);
}

TEST(Extract, ConvexOneColorSet) {
  const PointConfig cfg = parabola(5);
  const auto r = extract_mono_convex(cfg, EdgeColoring(2, 1, 5), 5);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witness->vertices, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.witness->kind, ChainKind::Cup);
}

TEST(Extract, QuotaOutOfReachReportsStages) {
  const PointConfig cfg = random_points(20, 6);
  const auto r = extract_mono_convex(cfg, random_coloring(2, 2, 20, 6), 10);
  EXPECT_FALSE(r.found());
  const std::string report = format_report(r);
  EXPECT_NE(report.find("status=not_found"), std::string::npos);
  EXPECT_NE(report.find("failed_stage=chain"), std::string::npos);
  EXPECT_NE(report.find("steps_requested=200"), std::string::npos);
}

TEST(Extract, PinnedFourHundredPointInstance) {
  const PointConfig cfg = random_points(400, kSeed400);
  const EdgeColoring col = random_coloring(2, 2, 400, kSeed400);
  const auto r = extract_mono_convex(cfg, col, 4);
  ASSERT_TRUE(r.found()) << format_report(r);
  EXPECT_TRUE(oracle::pairs_share_color(col, r.witness->vertices));
  EXPECT_TRUE(oracle::convex(oracle::small(cfg.subset(r.witness->vertices))));
  EXPECT_EQ(r.witness->vertices, (std::vector<std::size_t>{1, 57, 148, 365}));
}

TEST(Augment, OrientationBitOnACup) {
  const PointConfig cfg = parabola(6);
  const EdgeColoring red(3, 1, 6);
  const EdgeColoring aug = orientation_augmented_coloring(cfg.points(), red);
  EXPECT_EQ(aug.colors(), 2u);
  for_each_combination(6, 3, [&](std::span<const std::size_t> s) {
    EXPECT_EQ(aug.color(s), 1);
    return true;
  });
}

TEST(Augment, TriangleWithInteriorPointUsesTwoColors) {
  const auto pts = make_points({{0, 0}, {3, 2}, {4, 6}, {6, 0}});
  const EdgeColoring aug = orientation_augmented_coloring(pts, EdgeColoring(3, 1, 4));
  std::set<Color> used;
  for_each_combination(4, 3, [&](std::span<const std::size_t> s) {
    used.insert(aug.color(s));
    return true;
  });
  EXPECT_EQ(used.size(), 2u);
  EXPECT_EQ(orientation_augmented_coloring(pts, EdgeColoring(3, 2, 4)).colors(), 4u);
}

TEST(Augment, MonochromaticCliquesOfTheAugmentedColoringAreConvex) {
  std::size_t cliques = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointConfig cfg = random_points(10, seed, 10);
    const EdgeColoring base = random_coloring(3, seed % 2 + 1, 10, seed);
    const EdgeColoring aug = orientation_augmented_coloring(cfg.points(), base);
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
      const int k = std::popcount(mask);
      if (k < 4 || k > 8) {
        continue;
      }
      std::vector<std::size_t> v;
      for (std::size_t i = 0; i < 10; ++i) {
        if (mask >> i & 1U) {
          v.push_back(i);
        }
      }
      if (is_monochromatic(aug, v)) {
        ++cliques;
        ASSERT_TRUE(oracle::convex(oracle::small(cfg.subset(v))));
      }
    }
  }
  EXPECT_GT(cliques, 0u);
}

TEST(Augment, NonconvexTuplesGetTheNewColor) {
  const auto convex5 = make_points({{0, 10}, {9, 3}, {6, -8}, {-6, -8}, {-9, 3}});
  const EdgeColoring kept = nonconvex_augmented_coloring(convex5, EdgeColoring(4, 1, 5));
  EXPECT_EQ(kept.colors(), 2u);
  for_each_combination(5, 4, [&](std::span<const std::size_t> s) {
    EXPECT_EQ(kept.color(s), 0);
    return true;
  });

  const auto pts = make_points({{0, 0}, {6, 0}, {3, 6}, {3, 2}, {20, 21}});
  const EdgeColoring aug = nonconvex_augmented_coloring(pts, EdgeColoring(4, 1, 5));
  const auto small = oracle::small(pts);
  std::size_t recolored = 0;
  for_each_combination(5, 4, [&](std::span<const std::size_t> s) {
    std::vector<oracle::P> sub;
    for (std::size_t i : s) {
      sub.push_back(small[i]);
    }
    EXPECT_EQ(aug.color(s), oracle::convex(sub) ? 0 : 1);
    recolored += aug.color(s);
    return true;
  });
  EXPECT_GE(recolored, 1u);
  EXPECT_THROW(nonconvex_augmented_coloring(pts, EdgeColoring(3, 1, 5)), BadInput);
}
