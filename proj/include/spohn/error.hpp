#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spohn {

enum class ErrorCode {
  InvalidArgument,
  InvalidOcf,
  EmptyProposition,
  FullProposition,
  EmptyCondition,
  ImpossibleEvidence,
  ContradictoryEvidence,
  AllInfinite,
  UnknownVariable,
  UnknownValue,
  SpaceMismatch,
  InconsistentTables,
  InvalidNetwork,
  NotSinglyConnected,
  InvalidTarget,
  DuplicateTargetVariable,
  TooLargeForOracle,
  Parse,
  Overflow,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace spohn
