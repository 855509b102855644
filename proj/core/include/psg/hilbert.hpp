#pragma once

#include <cstdint>
#include <vector>

#include "psg/apery.hpp"
#include "psg/enumeration.hpp"

namespace psg {

/// Integer power series truncated at degree N (coefficients c_0..c_N).
class PowerSeries {
 public:
  explicit PowerSeries(std::int64_t truncation);
  PowerSeries(std::int64_t truncation, std::vector<std::int64_t> coefficients);

  /// x^e (zero if e > N).
  static PowerSeries monomial(std::int64_t truncation, std::int64_t exponent,
                              std::int64_t coefficient = 1);
  /// 1 / (1 - x).
  static PowerSeries all_ones(std::int64_t truncation);

  [[nodiscard]] std::int64_t truncation() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  [[nodiscard]] std::int64_t operator[](std::int64_t n) const;
  [[nodiscard]] const std::vector<std::int64_t>& coefficients() const noexcept {
    return coeffs_;
  }

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  friend PowerSeries operator+(PowerSeries x, const PowerSeries& y) { return x += y; }
  friend PowerSeries operator-(PowerSeries x, const PowerSeries& y) { return x -= y; }
  friend PowerSeries operator*(const PowerSeries& x, const PowerSeries& y);

  /// Multiplies by 1 / (1 - x^t), t >= 1.
  [[nodiscard]] PowerSeries divided_by_one_minus_x_pow(std::int64_t t) const;

  /// Sum of coefficients (the formal value at x = 1).
  [[nodiscard]] BigInt coefficient_sum() const;
  /// Sum of n * c_n.
  [[nodiscard]] BigInt weighted_sum() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// H_p(A; x) from the membership table.
PowerSeries hilbert_direct(const PSemigroup& s, std::int64_t truncation);

/// (sum_{m in Ape} x^m) / (1 - x^a). Requires a = min(A).
PowerSeries hilbert_from_apery(const AperySet& ap, std::int64_t truncation);

/// Psi_p(A; x), the generating function of the gaps.
PowerSeries gaps_series(const PSemigroup& s, std::int64_t truncation);

/// H_p(a, a+d, a+2d; x) from the closed rational expression.
/// Requires a >= 3, d > 0, gcd(a, d) = 1, 0 <= p <= floor(a/2).
PowerSeries arith_hilbert_closed(std::int64_t a, std::int64_t d, PParameter p,
                                 std::int64_t truncation);

}  // namespace psg
