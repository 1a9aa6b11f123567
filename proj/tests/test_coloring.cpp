#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace schur;

namespace {

Coloring make(std::vector<Color> v, int n) { return Coloring(std::move(v), n, EmptySubsets::allow); }

}  // namespace

TEST(Coloring, RejectsMalformedInput) {
  EXPECT_THROW(Coloring({}, 2), MalformedColoring);
  EXPECT_THROW(Coloring({1, 2}, 0), MalformedColoring);
  EXPECT_THROW(Coloring({1, 3}, 2), MalformedColoring);
  EXPECT_THROW(Coloring({1, 0}, 2), MalformedColoring);
  EXPECT_THROW(Coloring({1, 1}, 2), MalformedColoring);
  EXPECT_NO_THROW(Coloring({1, 1}, 2, EmptySubsets::allow));
}

TEST(Coloring, SubsetsAndAccessors) {
  const Coloring c({1, 2, 2, 1}, 2);
  EXPECT_EQ(c.length(), 4);
  EXPECT_EQ(c.num_colors(), 2);
  EXPECT_EQ(c(3), 2);
  EXPECT_EQ(c.subset(1), (std::vector<int>{1, 4}));
  EXPECT_EQ(c.subset(2), (std::vector<int>{2, 3}));
}

TEST(Verify, SmallKnownCases) {
  EXPECT_FALSE(verify_sum_free(Coloring({1, 2, 2, 1}, 2)));
  const auto v = verify_sum_free(Coloring({1, 2, 2, 1, 1}, 2));
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (Violation{1, 4, 5, 1, Clause::sum_free}));
  // {1,2} is weakly sum-free but 1 + 1 = 2 breaks sum-freeness.
  EXPECT_TRUE(verify_sum_free(Coloring({1, 1}, 1)));
  EXPECT_FALSE(verify_weakly_sum_free(Coloring({1, 1}, 1)));
  EXPECT_TRUE(verify_weakly_sum_free(Coloring({1, 1, 1}, 1)));
}

TEST(Verify, WitnessDescribesItself) {
  const auto v = verify_sum_free(Coloring({1, 1}, 1));
  ASSERT_TRUE(v);
  EXPECT_EQ(describe(*v), "sum-free violation: x=1 y=1 image=2 color=1");
}

TEST(Verify, AgreesWithOracleExhaustively) {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= 12; ++p) {
      if (n == 3 && p == 12) continue;  // AgreesWithOracleExhaustivelyThreeColorsTwelve
      oracle::for_each_coloring(p, n, [&](const std::vector<Color>& f) {
        const Coloring c = make(f, n);
        for (bool weak : {false, true}) {
          const auto want = oracle::sums(f, weak);
          const auto got = weak ? verify_weakly_sum_free(c) : verify_sum_free(c);
          ASSERT_EQ(want.has_value(), got.has_value());
          if (want) {
            EXPECT_EQ(got->x, want->x);
            EXPECT_EQ(got->y, want->y);
            EXPECT_EQ(got->sum_image, want->image);
            EXPECT_EQ(got->color, want->color);
          }
        }
      });
    }
  }
}

TEST(Verify, AgreesWithOracleExhaustivelyThreeColorsTwelve) {
  long checked = 0;
  oracle::for_each_coloring(12, 3, [&](const std::vector<Color>& f) {
    const Coloring c = make(f, 3);
    ASSERT_EQ(oracle::sums(f, false).has_value(), verify_sum_free(c).has_value());
    ASSERT_EQ(oracle::sums(f, true).has_value(), verify_weakly_sum_free(c).has_value());
    ++checked;
  });
  EXPECT_EQ(checked, 531441);
}

TEST(Verify, AgreesWithOracleOnRandomColorings) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 200), cols(1, 6);
  int positives = 0;
  for (int i = 0; i < 1000; ++i) {
    const int p = len(rng);
    const int n = cols(rng);
    std::vector<Color> f;
    // Half the samples are random sum-free colorings so both outcomes are exercised.
    if (i % 2 == 0) {
      SearchSpec s;
      s.kind = i % 4 == 0 ? TargetKind::sumfree_partition : TargetKind::weak_partition;
      s.length = std::min(p, 12 * n);
      s.num_colors = n;
      SearchOptions o;
      o.canonical_colors = false;
      if (auto found = random_solution(s, rng, 20000, o)) f.assign(found->coloring.colors().begin(), found->coloring.colors().end());
    }
    if (f.empty()) f = oracle::random_colors(rng, p, n);
    const Coloring c = make(f, n);
    for (bool weak : {false, true}) {
      const auto want = oracle::sums(f, weak);
      const auto got = weak ? verify_weakly_sum_free(c) : verify_sum_free(c);
      ASSERT_EQ(want.has_value(), got.has_value()) << "p=" << f.size() << " n=" << n;
      if (want) {
        EXPECT_EQ(got->x, want->x);
        EXPECT_EQ(got->y, want->y);
      } else {
        ++positives;
      }
    }
  }
  EXPECT_GT(positives, 200);
}

TEST(Verify, LongInputsCrossWordBoundaries) {
  // Residue classes mod 3 over many 64-bit words.
  std::vector<Color> f;
  for (int x = 1; x <= 1000; ++x) f.push_back(x % 3 == 1 ? 1 : (x % 3 == 2 ? 2 : 3));
  const Coloring c = make(f, 3);
  EXPECT_EQ(oracle::sums(f, false).has_value(), verify_sum_free(c).has_value());
  EXPECT_EQ(oracle::sums(f, true).has_value(), verify_weakly_sum_free(c).has_value());
}

TEST(Subsets, MinElementsAndOrdering) {
  const Coloring c({2, 1, 1, 2, 3}, 3);
  EXPECT_EQ(min_elements(c), (std::vector<int>{2, 1, 5}));
  const Coloring o = order_subsets(c);
  EXPECT_EQ(o, Coloring({1, 2, 2, 1, 3}, 3));
  EXPECT_EQ(min_elements(o), (std::vector<int>{1, 2, 5}));
  EXPECT_THROW(min_elements(make({1, 1}, 2)), MalformedColoring);
}

TEST(Subsets, OrderingPreservesVerification) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto f = oracle::random_colors(rng, 30, 4);
    if (!oracle::uses_all(f, 4)) continue;
    const Coloring c(f, 4);
    EXPECT_EQ(verify_sum_free(c).has_value(), verify_sum_free(order_subsets(c)).has_value());
  }
}

TEST(Subsets, Symmetry) {
  EXPECT_TRUE(is_symmetric(Coloring({1, 2, 2, 1}, 2)));
  EXPECT_TRUE(is_symmetric(Coloring({1, 2, 1}, 2)));
  EXPECT_FALSE(is_symmetric(Coloring({1, 2, 1, 2}, 2)));
}
