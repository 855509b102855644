#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"
#include "psg/apery.hpp"
#include "psg/closed_forms.hpp"
#include "psg/enumeration.hpp"

namespace psg {
namespace {

using Vec = std::vector<std::int64_t>;

TEST(TwoVar, SmallCases) {
  const auto c = two_var_invariants(2, 3, PParameter(0));
  EXPECT_EQ(c.frobenius, 1);
  EXPECT_EQ(c.genus, 1);
  EXPECT_EQ(c.sylvester_sum, 1);

  const auto d = two_var_invariants(3, 5, PParameter(1));
  EXPECT_EQ(d.frobenius, 22);
  EXPECT_EQ(d.genus, 19);
  EXPECT_EQ(d.sylvester_sum, 179);

  const auto e = two_var_invariants(2, 7, PParameter(4));
  EXPECT_EQ(e.frobenius, 61);
  EXPECT_EQ(e.genus, 59);
  EXPECT_EQ(e.sylvester_sum, 1717);
}

TEST(TwoVar, RejectsNonCoprime) {
  try {
    two_var_invariants(4, 6, PParameter(1));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::GcdNotOne);
  }
}

TEST(TwoVar, LargeValuesStayExact) {
  const auto r = two_var_invariants(1000003, 1000033, PParameter(1000));
  EXPECT_EQ(r.frobenius, BigInt(1001) * 1000003 * 1000033 - 1000003 - 1000033);
  EXPECT_GT(r.sylvester_sum, BigInt(1) << 80);
}

TEST(TwoVar, AgreesWithBruteForceGrid) {
  int cases = 0;
  for (std::int64_t a = 2; a <= 12; ++a) {
    for (std::int64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t p = 0; p <= 5; ++p) {
        const Vec gens{a, b};
        const auto brute = testing::brute_gaps(gens, p, testing::gap_bound(gens, p));
        const auto r = two_var_invariants(a, b, PParameter(p));
        ASSERT_EQ(r.frobenius, brute.frobenius);
        ASSERT_EQ(r.genus, static_cast<std::int64_t>(brute.gaps.size()));
        ASSERT_EQ(r.sylvester_sum, brute.sum);
        for (std::int64_t n = -3; n < static_cast<std::int64_t>(brute.member.size()); ++n) {
          const bool expected = n >= 0 && brute.member[static_cast<std::size_t>(n)];
          ASSERT_EQ(two_var_membership(n, a, b, PParameter(p)), expected) << a << "," << b << " n=" << n;
        }
        ++cases;
      }
    }
  }
  EXPECT_EQ(cases, 204);
}

TEST(TwoVar, MembershipLandmarks) {
  EXPECT_TRUE(two_var_membership(43, 3, 5, PParameter(1)));
  for (std::int64_t p = 0; p <= 4; ++p) {
    EXPECT_TRUE(two_var_membership(p * 7 * 9, 7, 9, PParameter(p)));
    EXPECT_FALSE(two_var_membership((p + 1) * 63 - 16, 7, 9, PParameter(p)));
    if (p > 0) EXPECT_FALSE(two_var_membership(p * 63 - 1, 7, 9, PParameter(p)));
  }
}

TEST(GcdReduce, Example17_20_30) {
  const auto red = gcd_reduce(validate_generators({17, 20, 30}));
  EXPECT_EQ(red.a1, 17);
  EXPECT_EQ(red.d, 10);
  EXPECT_EQ(red.reduced, validate_generators({2, 3, 17}));

  const auto t = build_psemigroup(red.reduced, PParameter(3));
  EXPECT_EQ(genus(t), 17);
  EXPECT_EQ(sylvester_sum(t), 136);

  const auto lifted = lifted_invariants(red, PParameter(3));
  EXPECT_EQ(lifted.sylvester_sum, 30349);
  EXPECT_EQ(lifted.frobenius, 313);
  EXPECT_EQ(lifted.genus, 242);
  EXPECT_EQ(lift_invariants(red, 16, 17, 136).sylvester_sum, 30349);

  const auto direct = build_psemigroup(validate_generators({17, 20, 30}), PParameter(3));
  EXPECT_EQ(sylvester_sum(direct), 30349);
}

TEST(GcdReduce, IdentityWhenCoprime) {
  const auto red = gcd_reduce(validate_generators({3, 10, 17}));
  EXPECT_EQ(red.d, 1);
  EXPECT_EQ(red.reduced, validate_generators({3, 10, 17}));
}

TEST(GcdReduce, TwoGeneratorExample) {
  for (std::int64_t p = 0; p <= 4; ++p) {
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{3, 7}, {5, 8}, {4, 9}}) {
      const auto red = gcd_reduce(validate_generators({a, b}));
      EXPECT_EQ(red.d, b);
      const auto t = build_psemigroup(red.reduced, PParameter(p));
      EXPECT_EQ(t.frobenius(), a * p - 1);
      EXPECT_EQ(genus(t), a * p);
      const auto lifted = lifted_invariants(red, PParameter(p));
      const auto closed = two_var_invariants(a, b, PParameter(p));
      EXPECT_EQ(lifted.frobenius, closed.frobenius);
      EXPECT_EQ(lifted.genus, closed.genus);
      EXPECT_EQ(lifted.sylvester_sum, closed.sylvester_sum);
    }
  }
}

TEST(GcdReduce, LiftedMatchesEnumerationOnCorpus) {
  const std::vector<Vec> corpus = {{17, 20, 30}, {7, 12, 18}, {5, 6, 9}, {11, 14, 21, 35},
                                   {9, 10, 15}, {13, 6, 10}, {7, 15, 25}};
  for (const auto& gens_raw : corpus) {
    const auto gens = validate_generators(gens_raw);
    const auto red = gcd_reduce(gens);
    for (std::int64_t p = 0; p <= 4; ++p) {
      const auto brute = testing::brute_gaps(Vec(gens.elements().begin(), gens.elements().end()), p,
                                             testing::gap_bound(Vec(gens.elements().begin(), gens.elements().end()), p));
      const auto lifted = lifted_invariants(red, PParameter(p));
      EXPECT_EQ(lifted.frobenius, brute.frobenius);
      EXPECT_EQ(lifted.genus, static_cast<std::int64_t>(brute.gaps.size()));
      EXPECT_EQ(lifted.sylvester_sum, brute.sum);
    }
  }
}

TEST(GcdReduce, DuplicateAfterReduction) {
  // a1 = 2, d = gcd(3, 6) = 3, and 6 / 3 collides with a1.
  try {
    gcd_reduce(validate_generators({2, 3, 6}));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateAfterReduction);
  }
}

TEST(Arith, SmallCases) {
  EXPECT_EQ(arith_invariants(4, 1, PParameter(1)).frobenius, 13);
  const auto s = build_psemigroup(validate_generators({3, 4, 5}), PParameter(0));
  EXPECT_EQ(arith_invariants(3, 1, PParameter(0)).frobenius, s.frobenius());
  EXPECT_TRUE(arith_predicts_symmetric(6, 1, PParameter(2)));
  EXPECT_FALSE(arith_predicts_symmetric(6, 1, PParameter(1)));
  EXPECT_FALSE(arith_predicts_symmetric(7, 1, PParameter(2)));
}

TEST(Arith, ValidityRange) {
  try {
    arith_invariants(5, 2, PParameter(3));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfValidityRange);
  }
  EXPECT_THROW(arith_invariants(4, 2, PParameter(0)), ValidationError);
  EXPECT_THROW(arith_invariants(2, 1, PParameter(0)), ValidationError);
}

TEST(Arith, AgreesWithBruteForceGrid) {
  int cases = 0;
  for (std::int64_t a = 3; a <= 12; ++a) {
    for (std::int64_t d = 1; d <= 7; ++d) {
      if (std::gcd(a, d) != 1) continue;
      for (std::int64_t p = 0; p <= a / 2; ++p) {
        const Vec gens{a, a + d, a + 2 * d};
        const auto brute = testing::brute_gaps(gens, p, testing::gap_bound(gens, p));
        const auto r = arith_invariants(a, d, PParameter(p));
        ASSERT_EQ(r.frobenius, brute.frobenius) << a << "," << d << " p=" << p;
        ASSERT_EQ(r.genus, static_cast<std::int64_t>(brute.gaps.size())) << a << "," << d << " p=" << p;
        ASSERT_EQ(r.ell0, brute.ell0) << a << "," << d << " p=" << p;

        Vec ap(static_cast<std::size_t>(a), -1);
        for (std::int64_t n = 0; n < static_cast<std::int64_t>(brute.member.size()); ++n) {
          auto& slot = ap[static_cast<std::size_t>(n % a)];
          if (brute.member[static_cast<std::size_t>(n)] && slot < 0) slot = n;
        }
        std::sort(ap.begin(), ap.end());
        ASSERT_EQ(arith_apery_elements(a, d, PParameter(p)), ap);
        ++cases;
      }
    }
  }
  EXPECT_GT(cases, 150);
}

TEST(Arith, HalfwayEvenCaseUsesListedMinimum) {
  // p = a/2 with a even: the least element is neither 2p(a+d) alone nor the
  // rule's second candidate.
  const Vec gens{4, 5, 6};
  const auto brute = testing::brute_gaps(gens, 2, testing::gap_bound(gens, 2));
  EXPECT_EQ(arith_invariants(4, 1, PParameter(2)).ell0, brute.ell0);
  EXPECT_EQ(brute.ell0, 16);
}

}  // namespace
}  // namespace psg
