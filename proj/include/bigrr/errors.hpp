#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bigrr {

enum class ErrorKind {
  InvalidSpec,
  ParseError,
  ValidationError,
  CapExceeded,
  NotInvariant,
  ConditionNotMet,
  IdentityResult,
  VerificationFailure,
  SizeExceeded,
  SpaceTooLarge,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  /// Computational limits (order caps, enumeration space) as opposed to bad
  /// input.
  bool is_cap() const noexcept {
    return kind_ == ErrorKind::CapExceeded || kind_ == ErrorKind::SizeExceeded ||
           kind_ == ErrorKind::SpaceTooLarge;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace bigrr
