#include "psg/apery.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace psg {

std::int64_t AperySet::at_residue(std::int64_t j) const {
  auto r = j % modulus;
  if (r < 0) r += modulus;
  return by_residue[static_cast<std::size_t>(r)];
}

AperySet apery_set(const PSemigroup& s, std::int64_t a) {
  if (!s.generators().contains(a)) {
    throw ValidationError(ErrorCode::ModulusNotGenerator,
                          "Apery modulus " + std::to_string(a) + " is not a generator");
  }
  AperySet ap;
  ap.modulus = a;
  ap.min_generator = s.generators().min();
  ap.by_residue.assign(static_cast<std::size_t>(a), -1);

  // Members of S_p are closed under +a, so the first member seen in each
  // residue class is its Apery element; all classes fill by frontier + a.
  std::int64_t found = 0;
  for (std::int64_t n = s.ell0(); found < a; ++n) {
    if (!s.contains(n)) continue;
    auto& slot = ap.by_residue[static_cast<std::size_t>(n % a)];
    if (slot < 0) {
      slot = n;
      ++found;
    }
  }
  ap.sorted = ap.by_residue;
  std::sort(ap.sorted.begin(), ap.sorted.end());
  return ap;
}

namespace {

void require_min_modulus(const AperySet& ap, const char* what) {
  if (ap.modulus != ap.min_generator) {
    throw ValidationError(ErrorCode::ModulusNotMinimal,
                          std::string(what) + " requires the Apery set modulo min(A)");
  }
}

BigInt power_sum_of(const std::vector<std::int64_t>& xs, int e) {
  BigInt total = 0;
  for (auto x : xs) total += boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(e));
  return total;
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

std::int64_t frobenius_from_apery(const AperySet& ap) {
  require_min_modulus(ap, "frobenius_from_apery");
  return ap.sorted.back() - ap.modulus;
}

std::int64_t genus_from_apery(const AperySet& ap) {
  require_min_modulus(ap, "genus_from_apery");
  const BigInt a = ap.modulus;
  BigRational n = BigRational(power_sum_of(ap.by_residue, 1), a) - BigRational(a - 1, 2);
  return to_int64(exact_integer(n, "genus_from_apery"), "genus_from_apery");
}

BigInt sylvester_sum_from_apery(const AperySet& ap) {
  require_min_modulus(ap, "sylvester_sum_from_apery");
  const BigInt a = ap.modulus;
  BigRational s = BigRational(power_sum_of(ap.by_residue, 2), 2 * a) -
                  BigRational(power_sum_of(ap.by_residue, 1), 2) +
                  BigRational(a * a - 1, 12);
  return exact_integer(s, "sylvester_sum_from_apery");
}

BigInt power_sum(const AperySet& ap, int mu) {
  require_min_modulus(ap, "power_sum");
  if (mu < 1) {
    throw ValidationError(ErrorCode::InvalidArgument, "power_sum requires mu >= 1");
  }
  const BigInt a = ap.modulus;
  BigRational inner = 0;
  for (int kappa = 0; kappa <= mu; ++kappa) {
    // a^(kappa - 1) is 1/a at kappa = 0.
    BigRational a_pow = kappa == 0
                            ? BigRational(1, a)
                            : BigRational(boost::multiprecision::pow(a, static_cast<unsigned>(kappa - 1)));
    inner += BigRational(binomial(mu + 1, kappa)) * bernoulli(kappa) * a_pow *
             BigRational(power_sum_of(ap.by_residue, mu + 1 - kappa));
  }
  BigRational total =
      inner / (mu + 1) + bernoulli(mu + 1) / (mu + 1) *
                             BigRational(boost::multiprecision::pow(a, static_cast<unsigned>(mu + 1)) - 1);
  return exact_integer(total, "power_sum");
}

BigInt power_sum(const PSemigroup& s, int mu) { return power_sum(apery_set(s), mu); }

BigRational bernoulli(int n) {
  if (n < 0) {
    throw ValidationError(ErrorCode::InvalidArgument, "Bernoulli index must be >= 0");
  }
  static std::mutex mutex;
  static std::vector<BigRational> cache{BigRational(1)};

  std::lock_guard lock(mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    BigRational acc = 0;
    for (int j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * cache[static_cast<std::size_t>(j)];
    cache.push_back(-acc / (m + 1));
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace psg
