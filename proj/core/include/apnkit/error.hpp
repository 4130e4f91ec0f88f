#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apnkit {

enum class ErrorCode {
  kUnsupportedDegree,
  kReducibleModulus,
  kZeroInverse,
  kDegenerateAllZero,
  kIndexOutOfRange,
  kDuplicateAlpha,
  kZeroLeadingCoefficient,
  kZeroDirection,
  kZeroAlpha,
  kNotAPowerFunction,
  kNotAPermutation,
  kNotShiftedLinear,
  kMalformedDDT,
  kRowNotApplicable,
  kOddN,
  kNonIntegralCount,
  kTooLarge,
  kInvalidSpec,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above, so
/// callers can branch on the condition without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace apnkit
