#pragma once

#include <stdexcept>
#include <string>

namespace tknots {

/// Machine-readable error categories. The CLI maps InputError to exit status 2.
enum class ErrorCode {
  kMalformedInput,   // ragged tables, out-of-range entries, bad JSON shape
  kSizeMismatch,     // tables that do not fit together
  kAxiomViolation,   // structure fails its defining axioms
  kContract,         // precondition of an operation violated
  kNotCocycle,       // cochain handed to an invariant is not a cocycle
  kOverflow,         // exact integer arithmetic left the int64 range
  kInternal,         // an internal consistency assertion failed
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what, ErrorCode code = ErrorCode::kMalformedInput)
      : Error(code, what) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(ErrorCode::kContract, what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(ErrorCode::kOverflow, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCode::kInternal, what) {}
};

}  // namespace tknots
