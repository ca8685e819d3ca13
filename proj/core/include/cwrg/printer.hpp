// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cwrg/ast.hpp"

namespace cwrg {

using VarNames = std::vector<std::string>;

std::string print_expr(const Expr& e, const VarNames& names);
std::string print_cond(const Cond& c, const VarNames& names);
std::string print_assign(const Assign& a, const VarNames& names);

/// Renders the program in the input file format; parse_program on the result
/// yields an equal Program.
std::string print_program(const Program& p);

}  // namespace cwrg
