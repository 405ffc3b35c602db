#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tame {

enum class ErrorCode {
  // Input / precondition errors.
  EmptyGeneratorSet,
  LengthMismatch,
  UnitIdeal,
  NegativeExponent,
  TooManyVariables,
  NotSquarefree,
  NotAGenerator,
  NotAVertex,
  DegreeTooHigh,
  CircuitNotInClutter,
  VertexNotPartitioned,
  InvalidClutter,
  InvalidPartition,
  NotTame,
  Unsupported,
  SyntaxError,
  UnknownVariable,
  // Internal check failures: a computed result failed re-verification or a
  // search could not complete.
  SearchBudgetExceeded,
  MixedGenerator,
  UniquenessViolation,
  VerificationFailed,
  OracleDisagreement,
};

std::string_view to_string(ErrorCode code);

/// True for codes that signal a failed internal check rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax errors carry the byte offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tame
