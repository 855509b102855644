#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "psg/error.hpp"

namespace psg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Returns the value of `q` if it is an integer; otherwise throws
/// ConsistencyError(NonIntegerResult) tagged with `context`.
inline BigInt exact_integer(const BigRational& q, const char* context) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw ConsistencyError(ErrorCode::NonIntegerResult,
                           std::string(context) + ": non-integer result " +
                               q.str());
  }
  return boost::multiprecision::numerator(q);
}

/// Narrows to int64, throwing CountOverflow when the value does not fit.
inline std::int64_t to_int64(const BigInt& x, const char* context) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw ValidationError(ErrorCode::CountOverflow,
                          std::string(context) + ": value exceeds int64");
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace psg
