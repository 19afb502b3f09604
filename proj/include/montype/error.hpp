#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace montype {

enum class ErrorCode {
  NonSquarefreeInput,
  EmptyInput,
  AmbientMismatch,
  UnitGenerator,
  NotAClutter,
  IndexOutOfRange,
  DegenerateCore,
  NotLinearCycle,
  ConeNotStripped,
  SizeLimit,
  PreconditionViolated,
  MinimalityViolated,
  CapTooSmall,
  NotHomogeneous,
  ResourceLimit,
  NotInJ,
  ParseError,
  GenerationFailure,
  Overflow,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this one exception type; the
/// code identifies which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace montype
