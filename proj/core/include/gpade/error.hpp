#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gpade {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NonPositiveAlpha,
  IntegerDifference,
  SingularSystem,
  NonMonomialDeterminant,
  IntegralityViolation,
  BoundViolation,
  DomainViolation,
  HypothesisFailure,
  PrecisionInsufficient,
};

const char* to_string(ErrorCode code) noexcept;

// Invariant violations (SingularSystem, NonMonomialDeterminant, IntegralityViolation,
// BoundViolation) indicate a construction bug; the rest are input problems.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Error(ErrorCode code, const std::string& message, std::pair<int, int> indices)
      : Error(code, message) {
    indices_ = indices;
  }

  ErrorCode code() const noexcept { return code_; }

  /// Offending index pair, set for IntegerDifference.
  const std::optional<std::pair<int, int>>& indices() const noexcept { return indices_; }

  bool is_invariant_violation() const noexcept {
    return code_ == ErrorCode::SingularSystem || code_ == ErrorCode::NonMonomialDeterminant ||
           code_ == ErrorCode::IntegralityViolation || code_ == ErrorCode::BoundViolation;
  }

 private:
  ErrorCode code_;
  std::optional<std::pair<int, int>> indices_;
};

}  // namespace gpade
