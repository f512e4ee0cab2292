#include "tknots/errors.hpp"

namespace tknots {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "malformed_input";
    case ErrorCode::kSizeMismatch: return "size_mismatch";
    case ErrorCode::kAxiomViolation: return "axiom_violation";
    case ErrorCode::kContract: return "contract_violation";
    case ErrorCode::kNotCocycle: return "not_a_cocycle";
    case ErrorCode::kOverflow: return "integer_overflow";
    case ErrorCode::kInternal: return "internal_error";
  }
  return "unknown";
}

}  // namespace tknots
