#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hardy {

enum class ErrorCode {
  DivisionByZero,
  NonMonomialPower,
  IrrationalCoefficientPower,
  NotShiftable,
  NonMonomialLog,
  NotEventuallyPositive,
  NotEventuallySigned,
  UndefinedIterLogDeriv,
  ZeroPolynomial,
  OrderTooLarge,
  SyntaxError,
  DepthTooLargeForNumerics,
  StepSizeUnderflow,
  DomainError,
  ZeroInRange,
  HypothesisViolated,
};

std::string_view to_string(ErrorCode code);

/// True for the errors raised by the floating-point layer.
bool is_numeric_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

/// Byte range inside a parsed input string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// An error attributed to a region of user input.
class SourceError : public Error {
 public:
  SourceError(ErrorCode code, const std::string& what, Span span);

  Span span() const noexcept { return span_; }

 private:
  Span span_;
};

}  // namespace hardy
