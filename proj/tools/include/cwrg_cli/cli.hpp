// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cwrg::cli {

enum ExitCode : int {
  kVerified = 0,
  kNotVerified = 1,
  kError = 2,
  kOracleViolation = 3,
};

/// Entry point without argv[0]. `cwrg FILE ...` is shorthand for
/// `cwrg analyze FILE ...`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cwrg::cli
