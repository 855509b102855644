#include "psg/hilbert.hpp"

#include <numeric>
#include <string>

#include "psg/closed_forms.hpp"

namespace psg {

namespace {

std::size_t length_for(std::int64_t truncation) {
  if (truncation < 0) {
    throw ValidationError(ErrorCode::InvalidArgument, "truncation must be >= 0");
  }
  return static_cast<std::size_t>(truncation) + 1;
}

void require_same_truncation(const PowerSeries& x, const PowerSeries& y) {
  if (x.truncation() != y.truncation()) {
    throw ValidationError(ErrorCode::InvalidArgument, "power series truncations differ");
  }
}

}  // namespace

PowerSeries::PowerSeries(std::int64_t truncation) : coeffs_(length_for(truncation), 0) {}

PowerSeries::PowerSeries(std::int64_t truncation, std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(length_for(truncation), 0);
}

PowerSeries PowerSeries::monomial(std::int64_t truncation, std::int64_t exponent,
                                  std::int64_t coefficient) {
  PowerSeries out(truncation);
  if (exponent < 0) {
    throw ValidationError(ErrorCode::InvalidArgument, "negative exponent in power series");
  }
  if (exponent <= truncation) out.coeffs_[static_cast<std::size_t>(exponent)] = coefficient;
  return out;
}

PowerSeries PowerSeries::all_ones(std::int64_t truncation) {
  PowerSeries out(truncation);
  std::fill(out.coeffs_.begin(), out.coeffs_.end(), 1);
  return out;
}

std::int64_t PowerSeries::operator[](std::int64_t n) const {
  if (n < 0 || n > truncation()) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  require_same_truncation(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  require_same_truncation(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries operator*(const PowerSeries& x, const PowerSeries& y) {
  require_same_truncation(x, y);
  PowerSeries out(x.truncation());
  const auto n = x.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return out;
}

PowerSeries PowerSeries::divided_by_one_minus_x_pow(std::int64_t t) const {
  if (t < 1) {
    throw ValidationError(ErrorCode::InvalidArgument, "1/(1 - x^t) needs t >= 1");
  }
  PowerSeries out = *this;
  const auto step = static_cast<std::size_t>(t);
  for (std::size_t n = step; n < out.coeffs_.size(); ++n) out.coeffs_[n] += out.coeffs_[n - step];
  return out;
}

BigInt PowerSeries::coefficient_sum() const {
  BigInt total = 0;
  for (auto c : coeffs_) total += c;
  return total;
}

BigInt PowerSeries::weighted_sum() const {
  BigInt total = 0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) total += BigInt(coeffs_[n]) * n;
  return total;
}

PowerSeries hilbert_direct(const PSemigroup& s, std::int64_t truncation) {
  PowerSeries out(truncation);
  std::vector<std::int64_t> c(length_for(truncation));
  for (std::int64_t n = 0; n <= truncation; ++n) c[static_cast<std::size_t>(n)] = s.contains(n) ? 1 : 0;
  return PowerSeries(truncation, std::move(c));
}

PowerSeries hilbert_from_apery(const AperySet& ap, std::int64_t truncation) {
  if (ap.modulus != ap.min_generator) {
    throw ValidationError(ErrorCode::ModulusNotMinimal,
                          "hilbert_from_apery requires the Apery set modulo min(A)");
  }
  PowerSeries numerator(truncation);
  for (auto m : ap.by_residue) numerator += PowerSeries::monomial(truncation, m);
  return numerator.divided_by_one_minus_x_pow(ap.modulus);
}

PowerSeries gaps_series(const PSemigroup& s, std::int64_t truncation) {
  return PowerSeries::all_ones(truncation) - hilbert_direct(s, truncation);
}

PowerSeries arith_hilbert_closed(std::int64_t a, std::int64_t d, PParameter p,
                                 std::int64_t truncation) {
  // Validates the (a, d, p) window.
  (void)arith_predicts_symmetric(a, d, p);
  const std::int64_t P = p.value();
  const std::int64_t q = a + 2 * d;
  const std::int64_t N = truncation;
  auto x = [N](std::int64_t e, std::int64_t c = 1) { return PowerSeries::monomial(N, e, c); };

  if (a % 2 != 0) {
    // 1/(1-x^a) * [ x^E (1 - x^{2pd}) / (1 - x^d)
    //   + x^{2p(a+d)} (1 - x^{Kq} + x^{a+d} - x^{a+d+(K-1)q}) / (1 - x^q) ],
    // E = (a-1)q/2 + pa + d, K = (a+1)/2 - p.
    const std::int64_t e = (a - 1) * q / 2 + P * a + d;
    const std::int64_t k = (a + 1) / 2 - P;
    const std::int64_t base = 2 * P * (a + d);
    PowerSeries first = (x(e) - x(e + 2 * P * d)).divided_by_one_minus_x_pow(d);
    PowerSeries second = x(base) - x(base + k * q) + x(base + a + d) - x(base + a + d + (k - 1) * q);
    second = second.divided_by_one_minus_x_pow(q);
    return (first + second).divided_by_one_minus_x_pow(a);
  }
  // (1 + x^{a+d})/(1-x^a) * [ x^E (1 - x^{2pd}) / (1 - x^{2d})
  //   + x^{2p(a+d)} (1 - x^{(a/2-p)q}) / (1 - x^q) ],  E = aq/2 + (p-1)a.
  const std::int64_t e = a * q / 2 + (P - 1) * a;
  const std::int64_t base = 2 * P * (a + d);
  PowerSeries first = (x(e) - x(e + 2 * P * d)).divided_by_one_minus_x_pow(2 * d);
  PowerSeries second = (x(base) - x(base + (a / 2 - P) * q)).divided_by_one_minus_x_pow(q);
  return ((x(0) + x(a + d)) * (first + second)).divided_by_one_minus_x_pow(a);
}

}  // namespace psg
