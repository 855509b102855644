#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"
#include "psg/hilbert.hpp"
#include "regression.hpp"

namespace psg {
namespace {

using Vec = std::vector<std::int64_t>;

PSemigroup make(const Vec& gens, std::int64_t p) {
  return build_psemigroup(validate_generators(gens), PParameter(p));
}

Vec support(const PowerSeries& s) {
  Vec out;
  for (std::int64_t n = 0; n <= s.truncation(); ++n) {
    if (s[n] != 0) out.push_back(n);
  }
  return out;
}

Vec iota_vec(std::int64_t lo, std::int64_t hi) {
  Vec out(static_cast<std::size_t>(hi - lo + 1));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

TEST(PowerSeries, Arithmetic) {
  const auto one_minus_x = PowerSeries(5, {1, -1});
  const auto ones = PowerSeries::all_ones(5);
  EXPECT_EQ((one_minus_x * ones).coefficients(), (Vec{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(PowerSeries::monomial(5, 2).divided_by_one_minus_x_pow(2).coefficients(),
            (Vec{0, 0, 1, 0, 1, 0}));
  EXPECT_EQ(PowerSeries::monomial(3, 7).coefficients(), (Vec{0, 0, 0, 0}));
  EXPECT_EQ((ones - ones).coefficient_sum(), 0);
  EXPECT_EQ(ones.weighted_sum(), 15);
  EXPECT_EQ(PowerSeries(2, {1, 2, 3, 4, 5}).coefficients(), (Vec{1, 2, 3}));
}

TEST(HilbertDirect, Listings) {
  EXPECT_EQ(hilbert_direct(make({2, 3}, 0), 4).coefficients(), (Vec{1, 0, 1, 1, 1}));
  EXPECT_EQ(support(hilbert_direct(make({3, 10, 17}, 1), 32)),
            (Vec{20, 23, 26, 27, 29, 30, 32}));
  EXPECT_EQ(support(hilbert_direct(make({4, 5, 6}, 8), 41)), (Vec{36, 38, 40, 41}));
}

TEST(GapsSeries, Listings) {
  auto g4 = iota_vec(0, 34);
  g4.push_back(37);
  EXPECT_EQ(support(gaps_series(make({3, 7, 11}, 4), 37)), g4);
  EXPECT_EQ(support(gaps_series(make({3, 10, 17}, 19), 126)), iota_vec(0, 126));
}

TEST(HilbertFromApery, SmallCases) {
  EXPECT_EQ(hilbert_from_apery(apery_set(make({2, 3}, 0)), 4).coefficients(),
            (Vec{1, 0, 1, 1, 1}));
  const auto s = make({6, 17, 28}, 5);
  EXPECT_EQ(hilbert_from_apery(apery_set(s), 400), hilbert_direct(s, 400));
  EXPECT_THROW(hilbert_from_apery(apery_set(s, 17), 10), ValidationError);
}

TEST(Hilbert, IdentitiesOnRegressionTuples) {
  for (const auto& [gens, p] : testing::regression_tuples()) {
    const auto s = make(gens, p);
    const auto n = 3 * (s.frobenius() + 1);
    const auto h = hilbert_direct(s, n);
    const auto psi = gaps_series(s, n);
    EXPECT_EQ(hilbert_from_apery(apery_set(s), n), h);
    const auto sum = PowerSeries(n, {1, -1}) * (h + psi);
    EXPECT_EQ(sum, PowerSeries::monomial(n, 0));
    EXPECT_EQ(psi.coefficient_sum(), genus(s));
    EXPECT_EQ(psi.weighted_sum(), sylvester_sum(s));

    const auto brute = testing::brute_gaps(gens, p, n + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
      ASSERT_EQ(h[k], brute.member[static_cast<std::size_t>(k)]) << k;
    }
  }
}

TEST(ArithClosed, Examples) {
  EXPECT_EQ(arith_hilbert_closed(3, 1, PParameter(0), 50), hilbert_direct(make({3, 4, 5}, 0), 50));
  EXPECT_EQ(arith_hilbert_closed(4, 3, PParameter(2), 200), hilbert_direct(make({4, 7, 10}, 2), 200));
  EXPECT_EQ(arith_hilbert_closed(5, 2, PParameter(2), 200), hilbert_direct(make({5, 7, 9}, 2), 200));
  EXPECT_THROW(arith_hilbert_closed(5, 2, PParameter(3), 10), ValidationError);
}

TEST(ArithClosed, FullGridAgainstBruteForce) {
  constexpr std::int64_t kN = 250;
  int cases = 0;
  for (std::int64_t a = 3; a <= 9; ++a) {
    for (std::int64_t d = 1; d <= 5; ++d) {
      if (std::gcd(a, d) != 1) continue;
      for (std::int64_t p = 0; p <= a / 2; ++p) {
        const Vec gens{a, a + d, a + 2 * d};
        const auto brute = testing::brute_gaps(gens, p, kN + 1);
        const auto closed = arith_hilbert_closed(a, d, PParameter(p), kN);
        for (std::int64_t k = 0; k <= kN; ++k) {
          ASSERT_EQ(closed[k], brute.member[static_cast<std::size_t>(k)])
              << a << "," << d << " p=" << p << " k=" << k;
        }
        ++cases;
      }
    }
  }
  EXPECT_GT(cases, 80);
}

}  // namespace
}  // namespace psg
