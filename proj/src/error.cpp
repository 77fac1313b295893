#include "hardy/error.hpp"

namespace hardy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonMonomialPower: return "NonMonomialPower";
    case ErrorCode::IrrationalCoefficientPower: return "IrrationalCoefficientPower";
    case ErrorCode::NotShiftable: return "NotShiftable";
    case ErrorCode::NonMonomialLog: return "NonMonomialLog";
    case ErrorCode::NotEventuallyPositive: return "NotEventuallyPositive";
    case ErrorCode::NotEventuallySigned: return "NotEventuallySigned";
    case ErrorCode::UndefinedIterLogDeriv: return "UndefinedIterLogDeriv";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DepthTooLargeForNumerics: return "DepthTooLargeForNumerics";
    case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroInRange: return "ZeroInRange";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

bool is_numeric_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::DepthTooLargeForNumerics:
    case ErrorCode::StepSizeUnderflow:
    case ErrorCode::DomainError:
    case ErrorCode::ZeroInRange:
    case ErrorCode::HypothesisViolated:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

SourceError::SourceError(ErrorCode code, const std::string& what, Span span)
    : Error(code, what + " at [" + std::to_string(span.begin) + ", " + std::to_string(span.end) + ")"),
      span_(span) {}

}  // namespace hardy
