#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace itergroup {

enum class ErrorCode {
  DegreeMismatch,
  MalformedCycles,
  ParseError,
  NotConjugate,
  NotConjugateInA,
  OddInput,
  OddGamma,
  IdentityInput,
  DegreeTooSmall,
  NotTranspositionProduct,
  TargetTooLarge,
  TargetTooSmall,
  BadTargetShape,
  BadSourceShape,
  NoFreshPoints,
  DegreeNotTwoModFour,
  UnsupportedTarget,
  IdentityElement,
  LengthMismatch,
  MalformedProgram,
  PointOutOfRange,
  BadShape,
  BudgetExceeded,
  OutputTooWide,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI) can branch on the kind of contract violation.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace itergroup
