#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flatlat/error.hpp"

namespace flatlat::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kInputError = 2,
  kLimitExceeded = 3,
  kOracleDisagreement = 4,
};

/// Runs one invocation. `args` excludes the program name; `-` as the input
/// path reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Limits& limits = {});

}  // namespace flatlat::cli
