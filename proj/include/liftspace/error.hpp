#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liftspace {

enum class ErrorCode {
  InvalidArgument,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotNormal,
  UnknownGenerator,
  BadInvolution,
  Disconnected,
  NotALoop,
  NotIncident,
  NotSurjective,
  NotRegular,
  BondNotSurjective,
  Incompatible,
  DepthExceeded,
  DepthMismatch,
  NotDense,
  LevelOrder,
  SyntaxError,
  UnknownReference,
  DuplicateSection,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `level` is the 1-based tower level the
/// error refers to, or 0 when it does not concern a particular level.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t level = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        level_(level) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t level() const noexcept { return level_; }

 private:
  ErrorCode code_;
  std::size_t level_;
};

}  // namespace liftspace
