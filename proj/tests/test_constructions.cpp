#include "oracles.hpp"

#include "georamsey/constructions.hpp"
#include "georamsey/ramsey.hpp"
#include "georamsey/verify.hpp"

#include <gtest/gtest.h>

using namespace georamsey;

namespace {

// Longest cup (+1) or cap (-1) among all subsets, by brute force.
std::size_t longest_run(const std::vector<oracle::P>& pts, int kind) {
  std::size_t best = std::min<std::size_t>(pts.size(), 2);
  for (std::uint32_t mask = 0; mask < (1U << pts.size()); ++mask) {
    const auto sub = oracle::pick(pts, mask);
    if (sub.size() > best && oracle::cup_or_cap(sub) == kind) {
      best = sub.size();
    }
  }
  return best;
}

}  // namespace

TEST(CupCapFree, Examples) {
  EXPECT_EQ(gen_cupcap_free(0, 0).size(), 1u);
  const auto two = gen_cupcap_free(1, 1);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_TRUE(verify_cupcap_free(two.points(), 1, 1).passed());
  const auto six = gen_cupcap_free(2, 2);
  EXPECT_EQ(six.size(), 6u);
  const Certificate c = verify_cupcap_free(six.points(), 2, 2);
  EXPECT_TRUE(c.passed()) << to_string(c);
}

TEST(CupCapFree, SizesAndCertificatesUpToSix) {
  for (std::size_t k = 0; k <= 6; ++k) {
    for (std::size_t l = 0; k + l <= 6; ++l) {
      const auto cfg = gen_cupcap_free(k, l);
      ASSERT_EQ(cfg.size(), binomial(k + l, k));
      EXPECT_TRUE(verify_cupcap_free(cfg.points(), k, l).passed()) << k << "," << l;
    }
  }
}

TEST(CupCapFree, LongestCupAndCapByBruteForce) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t l = 1; k + l <= 6; ++l) {
      const auto pts = oracle::small(gen_cupcap_free(k, l).points());
      if (pts.size() < 3) {
        continue;
      }
      // Tight: a (k+1)-cup and an (l+1)-cap exist, nothing longer.
      EXPECT_EQ(longest_run(pts, 1), std::max<std::size_t>(k + 1, 2)) << k << "," << l;
      EXPECT_EQ(longest_run(pts, -1), std::max<std::size_t>(l + 1, 2)) << k << "," << l;
    }
  }
}

TEST(NoConvex, Examples) {
  EXPECT_EQ(gen_no_convex(3).size(), 2u);
  const auto four = gen_no_convex(4);
  ASSERT_EQ(four.size(), 4u);
  EXPECT_FALSE(oracle::convex(oracle::small(four.points())));
  const auto eight = gen_no_convex(5);
  ASSERT_EQ(eight.size(), 8u);
  std::size_t convex5 = 0;
  for_each_combination(8, 5, [&](std::span<const std::size_t> s) {
    convex5 += oracle::convex(oracle::small(eight.subset(s)));
    return true;
  });
  EXPECT_EQ(convex5, 0u);
  EXPECT_THROW(gen_no_convex(2), BadInput);
  EXPECT_THROW(gen_no_convex(kMaxNoConvexN + 1), BadInput);
}

TEST(NoConvex, MaxConvexIsNMinusOne) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto cfg = gen_no_convex(n);
    ASSERT_EQ(cfg.size(), std::size_t{1} << (n - 2));
    EXPECT_EQ(oracle::max_convex(oracle::small(cfg.points())), n - 1) << "n=" << n;
  }
  for (std::size_t n = 7; n <= 8; ++n) {
    const auto cfg = gen_no_convex(n);
    ASSERT_EQ(cfg.size(), std::size_t{1} << (n - 2));
    EXPECT_EQ(max_convex_subset_size(cfg.points()), n - 1) << "n=" << n;
  }
}

TEST(Blowup, Examples) {
  const auto one = gen_blowup_coloring(4, 1);
  EXPECT_EQ(one.config.size(), 4u);
  EXPECT_EQ(one.coloring.colors(), 1u);
  EXPECT_FALSE(has_mono_convex_subset(one.config.points(), one.coloring, 4).passed());

  const auto b = gen_blowup_coloring(4, 2);
  ASSERT_EQ(b.config.size(), 16u);
  EXPECT_EQ(b.coloring.colors(), 2u);
  const Certificate c = has_mono_convex_subset(b.config.points(), b.coloring, 4);
  EXPECT_FALSE(c.passed());
  EXPECT_EQ(c.examined, 1820u);

  const auto five = gen_blowup_coloring(5, 1);
  EXPECT_EQ(five.config, gen_no_convex(5));
}

TEST(Blowup, NoMonochromaticConvexSubsetByBruteForce) {
  const auto b = gen_blowup_coloring(4, 2);
  const auto pts = oracle::small(b.config.points());
  for_each_combination(16, 4, [&](std::span<const std::size_t> s) {
    const std::vector<std::size_t> v(s.begin(), s.end());
    std::vector<oracle::P> sub;
    for (std::size_t i : v) {
      sub.push_back(pts[i]);
    }
    EXPECT_FALSE(oracle::pairs_share_color(b.coloring, v) && oracle::convex(sub));
    return true;
  });
}

TEST(Blowup, CrossCopyTriplesMirrorTheBase) {
  const auto base = gen_no_convex(4);
  const auto b = gen_blowup_coloring(4, 2);
  const std::size_t m = base.size();
  for_each_combination(16, 3, [&](std::span<const std::size_t> s) {
    const std::size_t ca = s[0] / m, cb = s[1] / m, cc = s[2] / m;
    if (ca != cb && cb != cc) {
      EXPECT_EQ(orientation(b.config[s[0]], b.config[s[1]], b.config[s[2]]),
                orientation(base[ca], base[cb], base[cc]));
    }
    return true;
  });
  for_each_combination(16, 2, [&](std::span<const std::size_t> s) {
    const Color expect = s[0] / m == s[1] / m ? 1 : 0;
    EXPECT_EQ(b.coloring.color(s), expect);
    return true;
  });
}

TEST(Blowup, LargerInstancesCertify) {
  const auto b43 = gen_blowup_coloring(4, 3);
  EXPECT_EQ(b43.config.size(), 64u);
  EXPECT_FALSE(has_mono_convex_subset(b43.config.points(), b43.coloring, 4).passed());
  const auto b52 = gen_blowup_coloring(5, 2);
  EXPECT_EQ(b52.config.size(), 64u);
  EXPECT_FALSE(has_mono_convex_subset(b52.config.points(), b52.coloring, 5).passed());
}

TEST(Blowup, Contracts) {
  EXPECT_THROW(gen_blowup_coloring(3, 1), BadInput);
  EXPECT_THROW(gen_blowup_coloring(4, 0), BadInput);
  EXPECT_THROW(gen_blowup_coloring(6, 3), BadInput);
}

TEST(Ramsey, Pentagon) {
  const auto c = find_ramsey_witness(5, 3);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, pentagon_coloring());
  std::size_t bichromatic = 0;
  for_each_combination(5, 3, [&](std::span<const std::size_t> s) {
    bichromatic += !is_monochromatic(*c, s);
    return true;
  });
  EXPECT_EQ(bichromatic, 10u);
}

TEST(Ramsey, ForcedAndImpossibleCases) {
  EXPECT_FALSE(find_ramsey_witness(2, 2));
  EXPECT_FALSE(find_ramsey_witness(6, 3));
  EXPECT_TRUE(find_ramsey_witness(2, 3));
}

TEST(Ramsey, Paley17) {
  const auto c = find_ramsey_witness(17, 4);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, paley17_coloring());
  std::size_t checked = 0;
  for_each_combination(17, 4, [&](std::span<const std::size_t> s) {
    ++checked;
    EXPECT_FALSE(oracle::pairs_share_color(*c, {s.begin(), s.end()}));
    return true;
  });
  EXPECT_EQ(checked, 2380u);
}

TEST(Ramsey, SeededSearchIsVerifiedAndDeterministic) {
  const auto a = find_ramsey_witness(10, 4, {.seed = 3});
  ASSERT_TRUE(a);
  EXPECT_FALSE(find_monochromatic_clique(*a, 4));
  EXPECT_EQ(*a, *find_ramsey_witness(10, 4, {.seed = 3}));
}
