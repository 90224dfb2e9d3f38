#include <gtest/gtest.h>

#include <set>

#include "multilin/multiindex.hpp"

using namespace multilin;

TEST(CompareGraded, LargerFirstEntrySortsEarlierWithinAWeight) {
  EXPECT_TRUE(compare_graded(MultiIndex{2, 0}, MultiIndex{1, 1}) < 0);
  EXPECT_TRUE(compare_graded(MultiIndex{1, 1}, MultiIndex{0, 2}) < 0);
  EXPECT_TRUE(compare_graded(MultiIndex{0, 0}, MultiIndex{0, 0}) == 0);
  EXPECT_TRUE(compare_graded(MultiIndex{1, 0, 0}, MultiIndex{0, 0, 2}) < 0);
}

TEST(CompareGraded, LengthMismatchThrows) {
  EXPECT_THROW(compare_graded(MultiIndex{1}, MultiIndex{1, 0}), DimensionError);
}

TEST(CompareGraded, TranslationCompatible) {
  const auto all = enumerate_stratum(3, 2);
  const auto shifts = enumerate_stratum(3, 1);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : shifts) EXPECT_EQ(compare_graded(a, b) < 0, compare_graded(a + c, b + c) < 0);
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank_index(MultiIndex{2, 0}), 0u);
  EXPECT_EQ(rank_index(MultiIndex{1, 1}), 1u);
  EXPECT_EQ(rank_index(MultiIndex{0, 2}), 2u);
  for (int p = 0; p < 5; ++p) EXPECT_EQ(rank_index(MultiIndex{p}), 0u);
  EXPECT_EQ(rank_index(MultiIndex{1, 0, 0}), 0u);
  EXPECT_EQ(rank_index(MultiIndex{0, 1, 0}), 1u);
  EXPECT_EQ(rank_index(MultiIndex{0, 0, 1}), 2u);
}

TEST(Rank, RoundTripsAndIsMonotone) {
  for (int n = 0; n <= 4; ++n)
    for (int p = 0; p <= 4; ++p) {
      const auto s = enumerate_stratum(n, p);
      ASSERT_EQ(s.size(), stratum_size(n, p));
      for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(rank_index(s[i]), i);
        EXPECT_EQ(unrank_index(n, p, i), s[i]);
        if (i > 0) {
          EXPECT_TRUE(compare_graded(s[i - 1], s[i]) < 0);
        }
      }
    }
}

TEST(Rank, UnrankOutOfRangeThrows) {
  EXPECT_THROW(unrank_index(2, 2, 3), DomainError);
  EXPECT_THROW(unrank_index(0, 1, 0), DomainError);
}

TEST(Rank, ZeroDimensionHasOnlyTheEmptyIndex) {
  EXPECT_EQ(stratum_size(0, 0), 1u);
  EXPECT_EQ(stratum_size(0, 3), 0u);
  EXPECT_EQ(enumerate_stratum(0, 0).size(), 1u);
}

TEST(MultiIndex, NegativeEntryRejected) { EXPECT_THROW(MultiIndex({1, -1}), DomainError); }

TEST(MultiIndex, SubtractionRequiresDomination) {
  EXPECT_EQ(MultiIndex({2, 1}) - MultiIndex({1, 1}), MultiIndex({1, 0}));
  EXPECT_THROW(MultiIndex({1, 1}) - MultiIndex({2, 0}), DomainError);
}

TEST(MultiBinomial, SmallCases) {
  EXPECT_EQ(multi_binomial(MultiIndex{2, 0}, MultiIndex{1, 0}), 2);
  EXPECT_EQ(multi_binomial(MultiIndex{3, 1}, MultiIndex{3, 1}), 1);
  EXPECT_EQ(multi_binomial(MultiIndex{1, 1}, MultiIndex{2, 0}), 0);
}

TEST(MultiBinomial, VandermondeSum) {
  const MultiIndex a{3, 1, 2};
  for (int p = 0; p <= a.weight(); ++p) {
    Integer sum = 0;
    for (const auto& b : enumerate_stratum(3, p)) sum += multi_binomial(a, b);
    EXPECT_EQ(sum, binomial(a.weight(), p)) << "p=" << p;
  }
}

TEST(StrictIndex, ValidatesOrderAndRange) {
  EXPECT_NO_THROW(StrictIndex({1, 3}, 3));
  EXPECT_THROW(StrictIndex({2, 2}, 3), DomainError);
  EXPECT_THROW(StrictIndex({0, 1}, 3), DomainError);
  EXPECT_THROW(StrictIndex({1, 4}, 3), DomainError);
  EXPECT_NO_THROW(StrictIndex({}, 0));
}

TEST(StrictIndex, ColexRank) {
  const auto s = enumerate_strict(3, 2);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].entries(), (std::vector<int>{1, 2}));
  EXPECT_EQ(s[1].entries(), (std::vector<int>{1, 3}));
  EXPECT_EQ(s[2].entries(), (std::vector<int>{2, 3}));
  for (int n = 0; n <= 5; ++n)
    for (int p = 0; p <= n + 1; ++p) {
      const auto all = enumerate_strict(n, p);
      EXPECT_EQ(all.size(), choose(n, p));
      for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(rank_strict(all[i]), i);
        EXPECT_EQ(unrank_strict(n, p, i).entries(), all[i].entries());
      }
    }
}

TEST(Permutation, SignAndComposition) {
  const Permutation t({2, 1, 3}), c({2, 3, 1});
  EXPECT_EQ(t.sign(), -1);
  EXPECT_EQ(c.sign(), 1);
  EXPECT_EQ((t * c)(1), t(c(1)));
  EXPECT_EQ((c * c.inverse()), Permutation::identity(3));
  EXPECT_THROW(Permutation({1, 1}), DomainError);
}

TEST(Shuffles, SmallCases) {
  const auto s11 = shuffles(1, 1);
  ASSERT_EQ(s11.size(), 2u);
  EXPECT_EQ(s11[0], Permutation::identity(2));
  EXPECT_EQ(s11[0].sign(), 1);
  EXPECT_EQ(s11[1].sign(), -1);

  ASSERT_EQ(shuffles(0, 3).size(), 1u);
  EXPECT_EQ(shuffles(0, 3)[0], Permutation::identity(3));

  const auto s21 = shuffles(2, 1);
  ASSERT_EQ(s21.size(), 3u);
  EXPECT_EQ(s21[0].sign(), 1);
  EXPECT_EQ(s21[1].sign(), -1);
  EXPECT_EQ(s21[2].sign(), 1);
}

TEST(Shuffles, Counts) {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) EXPECT_EQ(shuffles(p, q).size(), choose(p + q, p));
}

TEST(ShuffleDecompose, IdentitySplitsTrivially) {
  auto [sigma, tau] = shuffle_decompose(Permutation::identity(4), 1, 2, 1);
  EXPECT_EQ(sigma, Permutation::identity(4));
  EXPECT_EQ(tau, Permutation::identity(4));
}

TEST(ShuffleDecompose, RoundTripsForOneOneOne) {
  const auto all = block_shuffles({1, 1, 1});
  EXPECT_EQ(all.size(), 6u);
  for (const auto& s0 : all) {
    auto [sigma, tau] = shuffle_decompose(s0, 1, 1, 1);
    EXPECT_EQ(sigma * tau, s0);
    EXPECT_EQ(sigma.sign() * tau.sign(), s0.sign());
  }
}

TEST(ShuffleDecompose, CountCheck121) {
  EXPECT_EQ(shuffles(1, 3).size() * shuffles(2, 1).size(), block_shuffles({1, 2, 1}).size());
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const auto& s0 : block_shuffles({1, 2, 1})) {
    auto [sigma, tau] = shuffle_decompose(s0, 1, 2, 1);
    EXPECT_TRUE(is_block_shuffle(sigma, {1, 3}));
    EXPECT_TRUE(is_block_shuffle(tau, {1, 2, 1}, {true, false, false}));
    seen.insert({sigma.images(), tau.images()});
  }
  EXPECT_EQ(seen.size(), 12u);
}

TEST(ShuffleDecompose, RejectsNonShuffle) {
  EXPECT_THROW(shuffle_decompose(Permutation({2, 1, 3}), 2, 1, 0), DomainError);
  EXPECT_THROW(shuffle_decompose_tail(Permutation({2, 1, 3}), 2, 1, 0), DomainError);
}
