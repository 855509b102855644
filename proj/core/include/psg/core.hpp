#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psg/bigint.hpp"
#include "psg/error.hpp"

namespace psg {

/// Representation-count threshold p >= 0.
class PParameter {
 public:
  constexpr PParameter() = default;
  explicit PParameter(std::int64_t value);

  [[nodiscard]] constexpr std::int64_t value() const noexcept { return value_; }
  friend constexpr bool operator==(PParameter, PParameter) = default;

 private:
  std::int64_t value_ = 0;
};

/// Validated generator alphabet a_1 < a_2 < ... < a_k with gcd 1.
///
/// Usable instances only come out of validate_generators(); a default-
/// constructed tuple is empty and serves as a placeholder. Non-minimal alphabets are allowed
/// and flagged: every count over the alphabet uses all k coordinates.
class GeneratorTuple {
 public:
  [[nodiscard]] std::span<const std::int64_t> elements() const noexcept {
    return elements_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] std::int64_t min() const noexcept { return elements_.front(); }
  [[nodiscard]] bool contains(std::int64_t a) const noexcept;
  [[nodiscard]] BigInt sum() const;

  [[nodiscard]] bool minimality_checked() const noexcept { return true; }
  /// True when no element lies in the semigroup generated by the others.
  [[nodiscard]] bool is_minimal() const noexcept { return redundant_.empty(); }
  /// Elements a_i with a_i in <A \ {a_i}>, ascending.
  [[nodiscard]] const std::vector<std::int64_t>& redundant() const noexcept {
    return redundant_;
  }

  friend bool operator==(const GeneratorTuple& x, const GeneratorTuple& y) {
    return x.elements_ == y.elements_;
  }

 private:
  friend GeneratorTuple validate_generators(std::span<const std::int64_t> raw);

  std::vector<std::int64_t> elements_;
  std::vector<std::int64_t> redundant_;
};

/// Sorts and deduplicates `raw`, then requires positive entries, at least two
/// distinct generators and gcd 1. Minimality is recorded, not enforced.
GeneratorTuple validate_generators(std::span<const std::int64_t> raw);

inline GeneratorTuple validate_generators(std::initializer_list<std::int64_t> raw) {
  return validate_generators(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

std::int64_t gcd_of(std::span<const std::int64_t> values);

}  // namespace psg
