#include "bigrr/errors.hpp"

namespace bigrr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::ValidationError: return "validation-error";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::NotInvariant: return "not-invariant";
    case ErrorKind::ConditionNotMet: return "condition-not-met";
    case ErrorKind::IdentityResult: return "identity-result";
    case ErrorKind::VerificationFailure: return "verification-failure";
    case ErrorKind::SizeExceeded: return "size-exceeded";
    case ErrorKind::SpaceTooLarge: return "space-too-large";
    case ErrorKind::Usage: return "usage-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace bigrr
