#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psg {

enum class ErrorCode {
  // Input validation; the CLI maps these to exit code 2.
  EmptyInput,
  GcdNotOne,
  NonPositive,
  InvalidArgument,
  ModulusNotGenerator,
  ModulusNotMinimal,
  NoCoprimeElement,
  DuplicateAfterReduction,
  OutOfValidityRange,
  NotASemigroup,
  TableLimitExceeded,
  CountOverflow,
  // Internal consistency; the CLI maps these to exit code 1.
  NonIntegerResult,
  CrossCheckFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised for malformed or out-of-range input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Raised when two independent derivations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace psg
