#include "pezzo/error.hpp"

namespace pezzo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CompositionMismatch: return "CompositionMismatch";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::RealPlaceOrder: return "RealPlaceOrder";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::NoQuadraticExtension: return "NoQuadraticExtension";
    case ErrorCode::DegenerateSubalgebra: return "DegenerateSubalgebra";
    case ErrorCode::NotSplitOverBase: return "NotSplitOverBase";
    case ErrorCode::NotEmbeddable: return "NotEmbeddable";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::WrongLineCount: return "WrongLineCount";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::MalformedCase: return "MalformedCase";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InconsistentObservation: return "InconsistentObservation";
  }
  return "Unknown";
}

}  // namespace pezzo
