// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "cwrg/ast.hpp"
#include "cwrg/state.hpp"

namespace cwrg {

/// Checked arithmetic; std::nullopt on signed overflow.
std::optional<Value> apply_binary(BinaryOp op, Value lhs, Value rhs);
bool apply_cmp(CmpOp op, Value lhs, Value rhs);

/// Throws EvalError on overflow.
Value eval_expr(const Expr& e, const State& s);
bool eval_cond(const Cond& b, const State& s);

/// Simultaneous assignment: every right-hand side is read from `s`.
State exec_assign(const Assign& a, const State& s);

/// Negation pushed through comparisons and De Morgan; the result has no Not.
CondPtr negate(const CondPtr& c);
CondPtr negation_normal_form(const CondPtr& c);

}  // namespace cwrg
