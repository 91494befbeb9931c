#include "gpade/error.hpp"

namespace gpade {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonPositiveAlpha: return "NonPositiveAlpha";
    case ErrorCode::IntegerDifference: return "IntegerDifference";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::NonMonomialDeterminant: return "NonMonomialDeterminant";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::PrecisionInsufficient: return "PrecisionInsufficient";
  }
  return "Unknown";
}

}  // namespace gpade
