#include "apnkit/error.hpp"

namespace apnkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kDegenerateAllZero: return "DegenerateAllZero";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDuplicateAlpha: return "DuplicateAlpha";
    case ErrorCode::kZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kZeroAlpha: return "ZeroAlpha";
    case ErrorCode::kNotAPowerFunction: return "NotAPowerFunction";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kNotShiftedLinear: return "NotShiftedLinear";
    case ErrorCode::kMalformedDDT: return "MalformedDDT";
    case ErrorCode::kRowNotApplicable: return "RowNotApplicable";
    case ErrorCode::kOddN: return "OddN";
    case ErrorCode::kNonIntegralCount: return "NonIntegralCount";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

}  // namespace apnkit
