#pragma once

#include <stdexcept>
#include <string>

namespace nonblock {

enum class ErrorCode {
  EmptyInitialSet,
  UnknownEvent,
  NondeterministicTransition,
  BadStateId,
  EmptyComposition,
  StateBudgetExceeded,
  EventNotInAlphabet,
  BoundTooLarge,
  LimitExceeded,
  SharedAlphabetViolation,
  Overflow,
  FewerThanTwoComponents,
  AlphabetMismatch,
  RepeatedVariableInClause,
  InstanceTooLarge,
  ReservedEvent,
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// Base error for all library failures. Carries a machine-checkable code
/// next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nonblock
