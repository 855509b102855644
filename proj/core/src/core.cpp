#include "psg/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace psg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ModulusNotGenerator: return "ModulusNotGenerator";
    case ErrorCode::ModulusNotMinimal: return "ModulusNotMinimal";
    case ErrorCode::NoCoprimeElement: return "NoCoprimeElement";
    case ErrorCode::DuplicateAfterReduction: return "DuplicateAfterReduction";
    case ErrorCode::OutOfValidityRange: return "OutOfValidityRange";
    case ErrorCode::NotASemigroup: return "NotASemigroup";
    case ErrorCode::TableLimitExceeded: return "TableLimitExceeded";
    case ErrorCode::CountOverflow: return "CountOverflow";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
  }
  return "Unknown";
}

PParameter::PParameter(std::int64_t value) : value_(value) {
  if (value < 0) {
    throw ValidationError(ErrorCode::InvalidArgument,
                          "p must be non-negative, got " + std::to_string(value));
  }
}

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

bool GeneratorTuple::contains(std::int64_t a) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

BigInt GeneratorTuple::sum() const {
  BigInt total = 0;
  for (auto a : elements_) total += a;
  return total;
}

namespace {

// Membership of `target` in <others> by a bounded reachability sweep.
bool representable(std::int64_t target, std::span<const std::int64_t> others) {
  if (target == 0) return true;
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (auto a : others) {
    for (std::int64_t n = a; n <= target; ++n) {
      if (reach[static_cast<std::size_t>(n - a)]) reach[static_cast<std::size_t>(n)] = 1;
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

}  // namespace

GeneratorTuple validate_generators(std::span<const std::int64_t> raw) {
  if (raw.empty()) {
    throw ValidationError(ErrorCode::EmptyInput, "generator list is empty");
  }
  std::vector<std::int64_t> elems(raw.begin(), raw.end());
  for (auto a : elems) {
    if (a <= 0) {
      throw ValidationError(ErrorCode::NonPositive,
                            "generators must be positive, got " + std::to_string(a));
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  if (auto g = gcd_of(elems); g != 1) {
    throw ValidationError(ErrorCode::GcdNotOne,
                          "gcd of generators is " + std::to_string(g) + ", expected 1");
  }
  if (elems.size() < 2) {
    throw ValidationError(ErrorCode::InvalidArgument,
                          "need at least two distinct generators");
  }

  GeneratorTuple out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<std::int64_t> others;
    others.reserve(elems.size() - 1);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j != i && elems[j] < elems[i]) others.push_back(elems[j]);
    }
    if (!others.empty() && representable(elems[i], others)) {
      out.redundant_.push_back(elems[i]);
    }
  }
  out.elements_ = std::move(elems);
  return out;
}

}  // namespace psg
