#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatlat {

enum class ErrorCode {
  kNotAPartialOrder,
  kNotALattice,
  kLimitExceeded,
  kUnknownVertex,
  kEmptyRestriction,
  kAllLoops,
  kLoopsPresent,
  kNotAtomistic,
  kWrongHeight,
  kMethodNotApplicable,
  kConstructionMismatch,
  kSyntaxError,
  kValidationError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::kSyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Soft limits on exhaustive searches. They keep accidental large inputs
/// from running for hours; `lift_soft_limits` disables them. Hard limits
/// (64-element bitmasks) always apply.
struct Limits {
  bool lift_soft_limits = false;

  static constexpr std::size_t kMaxFlatScanVertices = 24;
  static constexpr std::size_t kMaxCanonicalAtoms = 24;
  static constexpr std::size_t kMaxOracleSetSize = 8;
  static constexpr std::size_t kMaxNaiveCliqueVertices = 16;
  static constexpr std::size_t kMaxEnumeratedLatticeSize = 7;
  static constexpr std::size_t kMaxConstructedElements = 10;

  /// Throws kLimitExceeded when `value > soft` and limits are in force.
  void check(std::size_t value, std::size_t soft, const char* what) const;
};

}  // namespace flatlat
