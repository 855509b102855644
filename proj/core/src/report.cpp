#include "psg/report.hpp"

#include <string>

#include "psg/closed_forms.hpp"

namespace psg {

namespace {

template <class T, class U>
void expect_equal(const T& lhs, const U& rhs, const std::string& what) {
  if (!(lhs == rhs)) {
    throw ConsistencyError(ErrorCode::CrossCheckFailed, what + " mismatch");
  }
}

bool is_arithmetic_triple(const GeneratorTuple& g) {
  return g.size() == 3 && g[1] - g[0] == g[2] - g[1];
}

}  // namespace

InvariantReport build_report(const GeneratorTuple& gens, PParameter p,
                             const ReportOptions& options) {
  const auto s = build_psemigroup(gens, p, options.build);
  InvariantReport r;
  r.gens = gens;
  r.p = p;
  r.ell0 = s.ell0();
  r.apery = apery_set(s);
  r.frobenius = frobenius_from_apery(r.apery);
  r.genus = genus_from_apery(r.apery);
  r.sylvester_sum = sylvester_sum_from_apery(r.apery);
  for (int mu = 1; mu <= options.max_mu; ++mu) r.power_sums.push_back(power_sum(r.apery, mu));
  r.classification = classify(s, options.verify);
  if (options.embedding_dimension) r.embedding_dimension = embedding_dimension(s);
  if (options.verify) verify_report(s, r);
  return r;
}

void verify_report(const PSemigroup& s, const InvariantReport& r) {
  const auto g = gaps(s);
  expect_equal(r.frobenius, s.frobenius(), "g_p (Apery vs table)");
  expect_equal(r.genus, static_cast<std::int64_t>(g.size()), "n_p (Apery vs gaps)");
  for (std::size_t i = 0; i < r.power_sums.size(); ++i) {
    BigInt direct = 0;
    for (auto x : g) direct += boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(i + 1));
    expect_equal(r.power_sums[i], direct, "power sum mu=" + std::to_string(i + 1));
    if (i == 0) expect_equal(r.sylvester_sum, direct, "s_p (Apery vs gaps)");
  }

  const auto& gens = s.generators();
  const auto p = s.p();
  if (gens.size() == 2) {
    const auto two = two_var_invariants(gens[0], gens[1], p);
    expect_equal(two.frobenius, BigInt(r.frobenius), "two-variable g_p");
    expect_equal(two.genus, BigInt(r.genus), "two-variable n_p");
    expect_equal(two.sylvester_sum, r.sylvester_sum, "two-variable s_p");
    for (std::int64_t n = 0; n < s.frontier(); ++n) {
      expect_equal(two_var_membership(n, gens[0], gens[1], p), s.contains(n),
                   "standard-form membership of " + std::to_string(n));
    }
  }
  if (is_arithmetic_triple(gens)) {
    const auto a = gens[0], d = gens[1] - gens[0];
    if (a >= 3 && p.value() <= a / 2) {
      const auto ar = arith_invariants(a, d, p);
      expect_equal(ar.frobenius, r.frobenius, "arithmetic g_p");
      expect_equal(ar.genus, r.genus, "arithmetic n_p");
      expect_equal(ar.ell0, r.ell0, "arithmetic l_0");
    }
  }
  try {
    const auto red = gcd_reduce(gens);
    if (red.d > 1) {
      const auto lifted = lifted_invariants(red, p);
      expect_equal(lifted.frobenius, BigInt(r.frobenius), "gcd-lifted g_p");
      expect_equal(lifted.genus, BigInt(r.genus), "gcd-lifted n_p");
      expect_equal(lifted.sylvester_sum, r.sylvester_sum, "gcd-lifted s_p");
    }
  } catch (const ValidationError& e) {
    if (e.code() != ErrorCode::DuplicateAfterReduction) throw;
  }
}

}  // namespace psg
