#include <gtest/gtest.h>

#include "psg/report.hpp"
#include "regression.hpp"

namespace psg {
namespace {

TEST(Report, FrozenValuesWithVerification) {
  for (const auto& c : testing::frozen_cases()) {
    ReportOptions opts;
    opts.verify = true;
    const auto r = build_report(validate_generators(c.gens), PParameter(c.p), opts);
    EXPECT_EQ(r.frobenius, c.frobenius);
    EXPECT_EQ(r.ell0, c.ell0);
    EXPECT_EQ(r.genus, c.genus);
    EXPECT_EQ(r.sylvester_sum, BigInt(c.sum));
    ASSERT_EQ(r.power_sums.size(), 3u);
    EXPECT_EQ(r.power_sums[1], BigInt(c.sum2));
    EXPECT_EQ(r.power_sums[2], BigInt(c.sum3));
    ASSERT_TRUE(r.classification.valuation.has_value());
    EXPECT_EQ(r.classification.valuation->d3, c.d3);
  }
}

TEST(Report, VerifiesTwoVariableAndArithmeticCases) {
  ReportOptions opts;
  opts.verify = true;
  opts.max_mu = 5;
  for (std::int64_t p = 0; p <= 5; ++p) {
    EXPECT_NO_THROW(build_report(validate_generators({7, 9}), PParameter(p), opts));
    EXPECT_NO_THROW(build_report(validate_generators({6, 11, 16}), PParameter(p), opts));
    EXPECT_NO_THROW(build_report(validate_generators({17, 20, 30}), PParameter(p), opts));
  }
}

TEST(Report, DetectsTamperedValues) {
  const auto gens = validate_generators({3, 10, 17});
  const auto s = build_psemigroup(gens, PParameter(2));
  auto r = build_report(gens, PParameter(2));
  EXPECT_NO_THROW(verify_report(s, r));
  r.sylvester_sum += 1;
  try {
    verify_report(s, r);
    FAIL();
  } catch (const ConsistencyError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CrossCheckFailed);
  }
}

TEST(Report, EmbeddingDimensionCanBeSkipped) {
  ReportOptions opts;
  opts.embedding_dimension = false;
  const auto r = build_report(validate_generators({3, 10, 17}), PParameter(4), opts);
  EXPECT_EQ(r.embedding_dimension, 0);
  EXPECT_EQ(build_report(validate_generators({3, 10, 17}), PParameter(4)).embedding_dimension, 49);
}

}  // namespace
}  // namespace psg
