#include "flatlat/error.hpp"

namespace flatlat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kEmptyRestriction: return "EmptyRestriction";
    case ErrorCode::kAllLoops: return "AllLoops";
    case ErrorCode::kLoopsPresent: return "LoopsPresent";
    case ErrorCode::kNotAtomistic: return "NotAtomistic";
    case ErrorCode::kWrongHeight: return "WrongHeight";
    case ErrorCode::kMethodNotApplicable: return "MethodNotApplicable";
    case ErrorCode::kConstructionMismatch: return "ConstructionMismatch";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

void Limits::check(std::size_t value, std::size_t soft, const char* what) const {
  if (!lift_soft_limits && value > soft) {
    throw Error(ErrorCode::kLimitExceeded, std::string(what) + " is " + std::to_string(value) +
                                               ", soft limit is " + std::to_string(soft) +
                                               " (set FLATLAT_LIMIT_OVERRIDE=1 to lift)");
  }
}

}  // namespace flatlat
