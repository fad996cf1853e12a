#pragma once

#include <stdexcept>
#include <string>

namespace pv {

enum class ErrorKind {
  DivisionByZero,
  VariableSetMismatch,
  FieldMismatch,
  SettingMismatch,
  NotDualizable,
  NotCIdeal,
  TrivialQuotient,
  SearchExhausted,
  NotAFieldExtension,
  PreconditionFailed,
  NotTrivializedByR,
  NotSubHopf,
  NotNormalHopfIdeal,
  StageOrderError,
  ParseError,
  Inconclusive,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the engine carries one of the kinds above so that
// callers (tests, the CLI) can branch on the cause without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pv
