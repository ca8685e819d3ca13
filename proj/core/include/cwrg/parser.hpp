// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "cwrg/ast.hpp"

namespace cwrg {

/// Parses a program file. Throws ParseError (with line/column) on syntax
/// errors, undeclared or misused variables, duplicate threads and malformed
/// assignments.
///
///   vars x, z; local T0: r;
///   pre true;
///   post r == 0;
///   relyvars T0: x, z, r;
///   thread T0 { r := 0; if (z == 0) { x := 0; r := x; } }
///   thread T1 { if (z == 1) { x := 1; } }
Program parse_program(std::string_view text);

}  // namespace cwrg
