#pragma once

#include <stdexcept>
#include <string>

namespace pezzo {

/// Machine-readable failure categories. The CLI reports these verbatim.
enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidArgument,
  CompositionMismatch,
  ReciprocityViolation,
  RealPlaceOrder,
  OrderViolation,
  NoQuadraticExtension,
  DegenerateSubalgebra,
  NotSplitOverBase,
  NotEmbeddable,
  EnumerationBudgetExceeded,
  WrongLineCount,
  NotAnAutomorphism,
  MalformedCase,
  IndexMismatch,
  ParseError,
  InconsistentObservation,
};

const char* error_code_name(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace pezzo
