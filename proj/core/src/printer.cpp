// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg/printer.hpp"

#include <sstream>

namespace cwrg {
namespace {

int precedence(const Expr& e) {
  if (e.kind != Expr::Kind::Binary) return 3;
  return e.op == BinaryOp::Mul ? 2 : 1;
}

void print_expr_into(std::ostream& os, const Expr& e, const VarNames& names) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      os << e.literal;
      return;
    case Expr::Kind::Var:
      os << names[e.var];
      return;
    case Expr::Kind::Binary:
      break;
  }
  const int p = precedence(e);
  // Left-associative: the right operand needs parentheses at equal precedence.
  const bool paren_l = precedence(*e.lhs) < p;
  const bool paren_r = precedence(*e.rhs) <= p;
  if (paren_l) os << '(';
  print_expr_into(os, *e.lhs, names);
  if (paren_l) os << ')';
  os << (e.op == BinaryOp::Add ? " + " : e.op == BinaryOp::Sub ? " - " : " * ");
  if (paren_r) os << '(';
  print_expr_into(os, *e.rhs, names);
  if (paren_r) os << ')';
}

const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

int precedence(const Cond& c) {
  switch (c.kind) {
    case Cond::Kind::Or: return 1;
    case Cond::Kind::And: return 2;
    case Cond::Kind::Not: return 3;
    default: return 4;
  }
}

void print_cond_into(std::ostream& os, const Cond& c, const VarNames& names) {
  switch (c.kind) {
    case Cond::Kind::True:
      os << "true";
      return;
    case Cond::Kind::False:
      os << "false";
      return;
    case Cond::Kind::Cmp:
      print_expr_into(os, *c.lhs_expr, names);
      os << ' ' << cmp_text(c.cmp) << ' ';
      print_expr_into(os, *c.rhs_expr, names);
      return;
    case Cond::Kind::Not: {
      const bool paren = precedence(*c.lhs) < 4 || c.lhs->kind == Cond::Kind::Cmp;
      os << '!';
      if (paren) os << '(';
      print_cond_into(os, *c.lhs, names);
      if (paren) os << ')';
      return;
    }
    case Cond::Kind::And:
    case Cond::Kind::Or:
      break;
  }
  const int p = precedence(c);
  const bool paren_l = precedence(*c.lhs) < p;
  const bool paren_r = precedence(*c.rhs) <= p;
  if (paren_l) os << '(';
  print_cond_into(os, *c.lhs, names);
  if (paren_l) os << ')';
  os << (c.kind == Cond::Kind::And ? " && " : " || ");
  if (paren_r) os << '(';
  print_cond_into(os, *c.rhs, names);
  if (paren_r) os << ')';
}

void print_block(std::ostream& os, const Block& b, const VarNames& names, int indent);

void print_stmt(std::ostream& os, const Stmt& s, const VarNames& names, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad;
  switch (s.kind) {
    case Stmt::Kind::Skip:
      os << "skip;\n";
      break;
    case Stmt::Kind::Assign:
      os << print_assign(s.assign, names) << ";\n";
      break;
    case Stmt::Kind::If:
      os << "if (" << print_cond(*s.cond, names) << ") {\n";
      print_block(os, s.then_block, names, indent + 1);
      os << pad << "}";
      if (s.has_else) {
        os << " else {\n";
        print_block(os, s.else_block, names, indent + 1);
        os << pad << "}";
      }
      os << "\n";
      break;
    case Stmt::Kind::While:
      os << "while (" << print_cond(*s.cond, names) << ") {\n";
      print_block(os, s.then_block, names, indent + 1);
      os << pad << "}\n";
      break;
  }
}

void print_block(std::ostream& os, const Block& b, const VarNames& names, int indent) {
  for (const auto& s : b) print_stmt(os, *s, names, indent);
}

void print_names(std::ostream& os, VarSet vs, const VarNames& names) {
  bool first = true;
  for (VarId v : vs.members()) {
    os << (first ? "" : ", ") << names[v];
    first = false;
  }
}

}  // namespace

std::string print_expr(const Expr& e, const VarNames& names) {
  std::ostringstream os;
  print_expr_into(os, e, names);
  return os.str();
}

std::string print_cond(const Cond& c, const VarNames& names) {
  std::ostringstream os;
  print_cond_into(os, c, names);
  return os.str();
}

std::string print_assign(const Assign& a, const VarNames& names) {
  std::ostringstream os;
  for (std::size_t k = 0; k < a.targets.size(); ++k) os << (k ? ", " : "") << names[a.targets[k]];
  os << " := ";
  for (std::size_t k = 0; k < a.exprs.size(); ++k) {
    os << (k ? ", " : "");
    print_expr_into(os, *a.exprs[k], names);
  }
  return os.str();
}

std::string print_program(const Program& p) {
  std::ostringstream os;
  VarSet globals = p.all_vars();
  for (const auto& t : p.threads) globals = globals - t.locals;
  os << "vars ";
  print_names(os, globals, p.vars);
  os << ";\n";
  for (const auto& t : p.threads) {
    if (t.locals.empty()) continue;
    os << "local " << t.name << ": ";
    print_names(os, t.locals, p.vars);
    os << ";\n";
  }
  os << "pre " << print_cond(*p.pre, p.vars) << ";\n";
  os << "post " << print_cond(*p.post, p.vars) << ";\n";
  for (const auto& t : p.threads) {
    if (!t.explicit_rely_vars) continue;
    os << "relyvars " << t.name << ": ";
    print_names(os, t.rely_vars, p.vars);
    os << ";\n";
  }
  for (const auto& t : p.threads) {
    os << "thread " << t.name << " {\n";
    print_block(os, t.body, p.vars, 1);
    os << "}\n";
  }
  return os.str();
}

}  // namespace cwrg
