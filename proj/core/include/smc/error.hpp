#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smc {

enum class ErrorCode {
  NotPairwiseCoprime,
  InvalidField,
  CompleteIntersection,
  OutsideRegion,
  NotHomogeneous,
  NegativeH1,
  DegreeTooSmall,
  EmptyLine,
  NoCandidate,
  ZeroPolynomial,
  FieldMismatch,
  NotDivisible,
  OrderMismatch,
  DegreeMismatch,
  ModXMismatch,
  LeadMismatch,
  MembershipFailure,
  InfiniteColength,
  ParseError,
  DataError,
  InvalidArgument,
  CheckFailed,
};

std::string_view error_code_name(ErrorCode code);

// Every module reports failures through this one exception type; the code
// names the failing condition, the message carries the context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace smc
