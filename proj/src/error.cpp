#include "posetops/error.hpp"

namespace posetops {

std::string_view to_string(Errc code) {
  switch (code) {
  case Errc::DuplicateLabel: return "DuplicateLabel";
  case Errc::UnknownLabel: return "UnknownLabel";
  case Errc::InvalidLabel: return "InvalidLabel";
  case Errc::CycleDetected: return "CycleDetected";
  case Errc::BoundsViolation: return "BoundsViolation";
  case Errc::TooSmall: return "TooSmall";
  case Errc::EmptyInput: return "EmptyInput";
  case Errc::TooManyAtoms: return "TooManyAtoms";
  case Errc::AmbiguousBounds: return "AmbiguousBounds";
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::UnknownFixture: return "UnknownFixture";
  case Errc::DegenerateConditional: return "DegenerateConditional";
  case Errc::SignedMisuse: return "SignedMisuse";
  case Errc::SyntaxError: return "SyntaxError";
  case Errc::ArityError: return "ArityError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string subject)
    : std::runtime_error(message), code_(code), subject_(std::move(subject)) {}

} // namespace posetops
