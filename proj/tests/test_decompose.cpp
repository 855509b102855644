#include <gtest/gtest.h>

#include <numeric>

#include "psg/decompose.hpp"

namespace psg {
namespace {

using Vec = std::vector<std::int64_t>;

Vec range_with(Vec head, std::int64_t lo, std::int64_t hi, const Vec& tail) {
  for (auto n = lo; n <= hi; ++n) head.push_back(n);
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

FiniteSemigroup s2_of_5_9_16() {
  return FiniteSemigroup::from_psemigroup(
      build_psemigroup(validate_generators({5, 9, 16}), PParameter(2)));
}

std::vector<FiniteSemigroup> two_part_pair() {
  const auto g1 = range_with({41, 43, 45, 46, 48}, 50, 81, {83, 85});
  const auto g2 = range_with({41, 45, 46, 47, 48}, 50, 81, {83, 84, 85});
  return {FiniteSemigroup::generated_by(g1), FiniteSemigroup::generated_by(g2)};
}

/// Brute-force closure test on a 0/1 table with everything past the end a member.
bool closed(const FiniteSemigroup& t) {
  for (std::int64_t x = 1; x < t.frontier(); ++x) {
    for (std::int64_t y = x; x + y < t.frontier(); ++y) {
      if (t.contains(x) && t.contains(y) && !t.contains(x + y)) return false;
    }
  }
  return true;
}

TEST(FiniteSemigroup, Basics) {
  const Vec gens{2, 3};
  const auto t = FiniteSemigroup::generated_by(gens);
  EXPECT_EQ(t.frobenius(), 1);
  EXPECT_EQ(t.genus(), 1);
  EXPECT_EQ(t.multiplicity(), 2);
  EXPECT_EQ(t.pseudo_frobenius(), (Vec{1}));
  EXPECT_EQ(t.minimal_generators(), (Vec{2, 3}));
  EXPECT_TRUE(t.is_symmetric());
  EXPECT_FALSE(t.is_pseudo_symmetric());

  const Vec one{1};
  const auto n0 = FiniteSemigroup::generated_by(one);
  EXPECT_EQ(n0.frontier(), 0);
  EXPECT_EQ(n0.frobenius(), -1);
  EXPECT_EQ(n0.pseudo_frobenius(), (Vec{-1}));
}

TEST(FiniteSemigroup, RejectsNonSemigroups) {
  EXPECT_THROW(FiniteSemigroup::from_membership({0, 1, 1}), ValidationError);
  EXPECT_THROW(FiniteSemigroup::from_membership({1, 0, 1, 1, 0}), ValidationError);
  const Vec small{0, 3, 4};
  EXPECT_THROW(FiniteSemigroup::from_small_elements(small, 8), ValidationError);
  const Vec bad{4, 6};
  EXPECT_THROW(FiniteSemigroup::generated_by(bad), ValidationError);
}

TEST(FiniteSemigroup, SmallElementsAndGeneratorsAgree) {
  const Vec gens{5, 9, 16};
  const Vec small{0, 5, 9, 10, 14, 15, 16, 18, 19, 20, 21, 23, 24, 25, 26, 27, 28, 29};
  EXPECT_EQ(FiniteSemigroup::generated_by(gens), FiniteSemigroup::from_small_elements(small, 30));
}

TEST(FiniteSemigroup, MatchesPSemigroupAtPZero) {
  const auto s = build_psemigroup(validate_generators({3, 10, 17}), PParameter(0));
  const Vec gens{3, 10, 17};
  EXPECT_EQ(FiniteSemigroup::from_psemigroup(s), FiniteSemigroup::generated_by(gens));
}

TEST(Irreducible, Classic) {
  const Vec two_three{2, 3};
  EXPECT_TRUE(is_irreducible_classic(FiniteSemigroup::generated_by(two_three)));
  EXPECT_FALSE(is_irreducible_classic(s2_of_5_9_16()));
  const Vec pseudo{3, 4, 5};  // Frobenius 2, gaps {1, 2}
  EXPECT_TRUE(FiniteSemigroup::generated_by(pseudo).is_pseudo_symmetric());
}

TEST(Irreducible, TwoPartPairIsPseudoSymmetricOnlyWhenShifted) {
  for (const auto& part : two_part_pair()) {
    EXPECT_EQ(part.frobenius(), 49);
    EXPECT_EQ(part.multiplicity(), 41);
    EXPECT_TRUE(is_irreducible_shifted(part));
    EXPECT_FALSE(is_irreducible_classic(part));
  }
  EXPECT_FALSE(is_irreducible_shifted(s2_of_5_9_16()));
}

TEST(Decomposition, TwoPartPairPassesShiftedValidity) {
  const auto t = s2_of_5_9_16();
  const auto pair = two_part_pair();
  EXPECT_EQ(intersection(pair), t);
  EXPECT_TRUE(is_valid_decomposition(t, pair, Irreducibility::Shifted));
  EXPECT_FALSE(is_valid_decomposition(t, pair, Irreducibility::Classic));
}

TEST(Decomposition, S2Of5_9_16) {
  const auto t = s2_of_5_9_16();
  const auto parts = irreducible_decomposition(t);
  EXPECT_GE(parts.size(), 2u);
  EXPECT_TRUE(is_valid_decomposition(t, parts));
  for (const auto& p : parts) EXPECT_TRUE(closed(p));
}

TEST(Decomposition, AlreadyIrreducible) {
  const Vec two_three{2, 3};
  const auto t = FiniteSemigroup::generated_by(two_three);
  const auto parts = irreducible_decomposition(t);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], t);
}

TEST(Decomposition, ThreeTenSeventeen) {
  const Vec gens{3, 10, 17};
  const auto t = FiniteSemigroup::generated_by(gens);
  const auto parts = irreducible_decomposition(t);
  EXPECT_EQ(intersection(parts), t);
  EXPECT_TRUE(is_valid_decomposition(t, parts));
}

TEST(Decomposition, InvariantsOverManySemigroups) {
  int reducible = 0;
  for (std::int64_t a = 3; a <= 7; ++a) {
    for (std::int64_t b = a + 1; b <= 11; ++b) {
      for (std::int64_t c = b + 1; c <= 13; ++c) {
        const Vec gens{a, b, c};
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        for (std::int64_t p = 0; p <= 3; ++p) {
          const auto t = FiniteSemigroup::from_psemigroup(
              build_psemigroup(validate_generators(gens), PParameter(p)));
          const auto parts = irreducible_decomposition(t);
          ASSERT_TRUE(is_valid_decomposition(t, parts)) << a << "," << b << "," << c << " p=" << p;
          ASSERT_EQ(parts.size() == 1, is_irreducible_classic(t));
          for (const auto& part : parts) {
            ASSERT_TRUE(closed(part));
            ASSERT_TRUE(t.is_subset_of(part));
          }
          if (parts.size() > 1) ++reducible;
        }
      }
    }
  }
  EXPECT_GT(reducible, 50);
}

TEST(Decomposition, ValidityRejectsRedundantOrWrongParts) {
  const auto t = s2_of_5_9_16();
  auto parts = irreducible_decomposition(t);
  auto with_extra = parts;
  with_extra.push_back(parts.front());
  EXPECT_FALSE(is_valid_decomposition(t, with_extra));
  std::vector<FiniteSemigroup> one{parts.front()};
  EXPECT_FALSE(is_valid_decomposition(t, one));
  EXPECT_FALSE(is_valid_decomposition(t, std::vector<FiniteSemigroup>{}));
}

}  // namespace
}  // namespace psg
