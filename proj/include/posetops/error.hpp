#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetops {

enum class Errc {
  DuplicateLabel,
  UnknownLabel,
  InvalidLabel,
  CycleDetected,
  BoundsViolation,
  TooSmall,
  EmptyInput,
  TooManyAtoms,
  AmbiguousBounds,
  InvalidArgument,
  UnknownFixture,
  DegenerateConditional,
  SignedMisuse,
  SyntaxError,
  ArityError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library. `subject` names the offending label
/// (when there is one) so front ends can point back at the source text.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message, std::string subject = {});

  Errc code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

private:
  Errc code_;
  std::string subject_;
};

} // namespace posetops
