// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwrg {

ExprPtr Expr::make_literal(Value v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Literal;
  e->literal = v;
  return e;
}

ExprPtr Expr::make_var(VarId v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Var;
  e->var = v;
  return e;
}

ExprPtr Expr::make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Binary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

CondPtr Cond::make_true() {
  auto c = std::make_shared<Cond>();
  c->kind = Kind::True;
  return c;
}

CondPtr Cond::make_false() {
  auto c = std::make_shared<Cond>();
  c->kind = Kind::False;
  return c;
}

CondPtr Cond::make_cmp(CmpOp op, ExprPtr lhs, ExprPtr rhs) {
  auto c = std::make_shared<Cond>();
  c->kind = Kind::Cmp;
  c->cmp = op;
  c->lhs_expr = std::move(lhs);
  c->rhs_expr = std::move(rhs);
  return c;
}

CondPtr Cond::make_not(CondPtr operand) {
  auto c = std::make_shared<Cond>();
  c->kind = Kind::Not;
  c->lhs = std::move(operand);
  return c;
}

CondPtr Cond::make_and(CondPtr lhs, CondPtr rhs) {
  auto c = std::make_shared<Cond>();
  c->kind = Kind::And;
  c->lhs = std::move(lhs);
  c->rhs = std::move(rhs);
  return c;
}

CondPtr Cond::make_or(CondPtr lhs, CondPtr rhs) {
  auto c = std::make_shared<Cond>();
  c->kind = Kind::Or;
  c->lhs = std::move(lhs);
  c->rhs = std::move(rhs);
  return c;
}

VarSet Assign::target_set() const {
  VarSet s;
  for (VarId v : targets) s.insert(v);
  return s;
}

std::string ProgramPoint::name() const {
  const std::string l = "L" + std::to_string(label);
  switch (kind) {
    case Kind::Before:
      return l;
    case Kind::ThenEnd:
      return l + ".then";
    case Kind::ElseEnd:
      return l + ".else";
    case Kind::BodyEnd:
      return l + ".body";
    case Kind::Exit:
      return "exit";
  }
  return l;
}

PointId Thread::find_point(const std::string& point_name) const {
  for (PointId i = 0; i < points.size(); ++i) {
    if (points[i].name() == point_name) return i;
  }
  return kNoPoint;
}

VarId Program::var_id(const std::string& name) const {
  auto it = std::lower_bound(vars.begin(), vars.end(), name);
  if (it == vars.end() || *it != name) throw std::out_of_range("unknown variable " + name);
  return static_cast<VarId>(it - vars.begin());
}

std::size_t Program::thread_index(const std::string& name) const {
  for (std::size_t i = 0; i < threads.size(); ++i) {
    if (threads[i].name == name) return i;
  }
  throw std::out_of_range("unknown thread " + name);
}

namespace {

template <typename T>
bool same_ptr(const std::shared_ptr<const T>& a, const std::shared_ptr<const T>& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

void literals_of(const Expr& e, std::vector<Value>& out) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      out.push_back(e.literal);
      break;
    case Expr::Kind::Var:
      break;
    case Expr::Kind::Binary:
      literals_of(*e.lhs, out);
      literals_of(*e.rhs, out);
      break;
  }
}

void literals_of(const Cond& c, std::vector<Value>& out) {
  if (c.lhs_expr) literals_of(*c.lhs_expr, out);
  if (c.rhs_expr) literals_of(*c.rhs_expr, out);
  if (c.lhs) literals_of(*c.lhs, out);
  if (c.rhs) literals_of(*c.rhs, out);
}

void literals_of(const Block& b, std::vector<Value>& out) {
  for (const auto& s : b) {
    for (const auto& e : s->assign.exprs) literals_of(*e, out);
    if (s->cond) literals_of(*s->cond, out);
    literals_of(s->then_block, out);
    literals_of(s->else_block, out);
  }
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal:
      return a.literal == b.literal;
    case Expr::Kind::Var:
      return a.var == b.var;
    case Expr::Kind::Binary:
      return a.op == b.op && same_ptr(a.lhs, b.lhs) && same_ptr(a.rhs, b.rhs);
  }
  return false;
}

bool operator==(const Cond& a, const Cond& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Cond::Kind::True:
    case Cond::Kind::False:
      return true;
    case Cond::Kind::Cmp:
      return a.cmp == b.cmp && same_ptr(a.lhs_expr, b.lhs_expr) && same_ptr(a.rhs_expr, b.rhs_expr);
    case Cond::Kind::Not:
      return same_ptr(a.lhs, b.lhs);
    case Cond::Kind::And:
    case Cond::Kind::Or:
      return same_ptr(a.lhs, b.lhs) && same_ptr(a.rhs, b.rhs);
  }
  return false;
}

bool same_block(const Block& a, const Block& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const StmtPtr& x, const StmtPtr& y) { return same_ptr(x, y); });
}

bool operator==(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.label != b.label || a.before != b.before ||
      a.then_end != b.then_end || a.else_end != b.else_end || a.has_else != b.has_else) {
    return false;
  }
  if (a.assign.targets != b.assign.targets) return false;
  if (!std::equal(a.assign.exprs.begin(), a.assign.exprs.end(), b.assign.exprs.begin(),
                  b.assign.exprs.end(), [](const ExprPtr& x, const ExprPtr& y) { return same_ptr(x, y); })) {
    return false;
  }
  return same_ptr(a.cond, b.cond) && same_block(a.then_block, b.then_block) &&
         same_block(a.else_block, b.else_block);
}

bool operator==(const Thread& a, const Thread& b) {
  return a.name == b.name && same_block(a.body, b.body) && a.locals == b.locals &&
         a.rely_vars == b.rely_vars && a.explicit_rely_vars == b.explicit_rely_vars &&
         a.points == b.points && a.exit_point == b.exit_point && a.statement_count == b.statement_count;
}

bool operator==(const Program& a, const Program& b) {
  return a.vars == b.vars && a.threads == b.threads && same_ptr(a.pre, b.pre) && same_ptr(a.post, b.post);
}

std::vector<Value> collect_literals(const Program& p) {
  std::vector<Value> out;
  if (p.pre) literals_of(*p.pre, out);
  if (p.post) literals_of(*p.post, out);
  for (const auto& t : p.threads) literals_of(t.body, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cwrg
