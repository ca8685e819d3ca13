// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg/semantics.hpp"

#include "cwrg/errors.hpp"

namespace cwrg {

std::optional<Value> apply_binary(BinaryOp op, Value lhs, Value rhs) {
  Value out = 0;
  bool overflow = false;
  switch (op) {
    case BinaryOp::Add:
      overflow = __builtin_add_overflow(lhs, rhs, &out);
      break;
    case BinaryOp::Sub:
      overflow = __builtin_sub_overflow(lhs, rhs, &out);
      break;
    case BinaryOp::Mul:
      overflow = __builtin_mul_overflow(lhs, rhs, &out);
      break;
  }
  if (overflow) return std::nullopt;
  return out;
}

bool apply_cmp(CmpOp op, Value lhs, Value rhs) {
  switch (op) {
    case CmpOp::Eq: return lhs == rhs;
    case CmpOp::Ne: return lhs != rhs;
    case CmpOp::Lt: return lhs < rhs;
    case CmpOp::Le: return lhs <= rhs;
    case CmpOp::Gt: return lhs > rhs;
    case CmpOp::Ge: return lhs >= rhs;
  }
  return false;
}

Value eval_expr(const Expr& e, const State& s) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return e.literal;
    case Expr::Kind::Var:
      return s[e.var];
    case Expr::Kind::Binary:
      break;
  }
  auto v = apply_binary(e.op, eval_expr(*e.lhs, s), eval_expr(*e.rhs, s));
  if (!v) throw EvalError("integer overflow");
  return *v;
}

bool eval_cond(const Cond& b, const State& s) {
  switch (b.kind) {
    case Cond::Kind::True:
      return true;
    case Cond::Kind::False:
      return false;
    case Cond::Kind::Cmp:
      return apply_cmp(b.cmp, eval_expr(*b.lhs_expr, s), eval_expr(*b.rhs_expr, s));
    case Cond::Kind::Not:
      return !eval_cond(*b.lhs, s);
    case Cond::Kind::And:
      return eval_cond(*b.lhs, s) && eval_cond(*b.rhs, s);
    case Cond::Kind::Or:
      return eval_cond(*b.lhs, s) || eval_cond(*b.rhs, s);
  }
  return false;
}

State exec_assign(const Assign& a, const State& s) {
  std::vector<Value> rhs;
  rhs.reserve(a.exprs.size());
  for (const auto& e : a.exprs) rhs.push_back(eval_expr(*e, s));
  State out = s;
  for (std::size_t k = 0; k < a.targets.size(); ++k) out[a.targets[k]] = rhs[k];
  return out;
}

namespace {

CmpOp flip(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return CmpOp::Ne;
    case CmpOp::Ne: return CmpOp::Eq;
    case CmpOp::Lt: return CmpOp::Ge;
    case CmpOp::Le: return CmpOp::Gt;
    case CmpOp::Gt: return CmpOp::Le;
    case CmpOp::Ge: return CmpOp::Lt;
  }
  return op;
}

CondPtr nnf(const CondPtr& c, bool negated) {
  switch (c->kind) {
    case Cond::Kind::True:
      return negated ? Cond::make_false() : c;
    case Cond::Kind::False:
      return negated ? Cond::make_true() : c;
    case Cond::Kind::Cmp:
      return negated ? Cond::make_cmp(flip(c->cmp), c->lhs_expr, c->rhs_expr) : c;
    case Cond::Kind::Not:
      return nnf(c->lhs, !negated);
    case Cond::Kind::And:
    case Cond::Kind::Or: {
      CondPtr l = nnf(c->lhs, negated);
      CondPtr r = nnf(c->rhs, negated);
      const bool is_and = (c->kind == Cond::Kind::And) != negated;
      return is_and ? Cond::make_and(l, r) : Cond::make_or(l, r);
    }
  }
  return c;
}

}  // namespace

CondPtr negate(const CondPtr& c) { return nnf(c, true); }

CondPtr negation_normal_form(const CondPtr& c) { return nnf(c, false); }

}  // namespace cwrg
