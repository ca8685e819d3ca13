// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cwrg/var_set.hpp"

namespace cwrg {

using Value = std::int64_t;

enum class BinaryOp { Add, Sub, Mul };
enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Var, Binary };

  Kind kind = Kind::Literal;
  Value literal = 0;
  VarId var = 0;
  BinaryOp op = BinaryOp::Add;
  ExprPtr lhs;
  ExprPtr rhs;

  static ExprPtr make_literal(Value v);
  static ExprPtr make_var(VarId v);
  static ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
};

struct Cond;
using CondPtr = std::shared_ptr<const Cond>;

struct Cond {
  enum class Kind { True, False, Cmp, Not, And, Or };

  Kind kind = Kind::True;
  CmpOp cmp = CmpOp::Eq;
  ExprPtr lhs_expr;
  ExprPtr rhs_expr;
  CondPtr lhs;  // operand of Not; left operand of And/Or
  CondPtr rhs;

  static CondPtr make_true();
  static CondPtr make_false();
  static CondPtr make_cmp(CmpOp op, ExprPtr lhs, ExprPtr rhs);
  static CondPtr make_not(CondPtr c);
  static CondPtr make_and(CondPtr lhs, CondPtr rhs);
  static CondPtr make_or(CondPtr lhs, CondPtr rhs);
};

/// Simultaneous multi-assignment `x1, ..., xn := e1, ..., en`.
struct Assign {
  std::vector<VarId> targets;
  std::vector<ExprPtr> exprs;

  VarSet target_set() const;
};

/// Index into Thread::points.
using PointId = std::uint32_t;
inline constexpr PointId kNoPoint = static_cast<PointId>(-1);

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;
using Block = std::vector<StmtPtr>;

struct Stmt {
  enum class Kind { Assign, If, While, Skip };

  Kind kind = Kind::Skip;
  // Preorder statement number within the thread, starting at 1.
  std::uint32_t label = 0;

  Assign assign;
  CondPtr cond;
  Block then_block;  // If: then branch; While: loop body
  Block else_block;
  bool has_else = false;

  PointId before = kNoPoint;
  PointId then_end = kNoPoint;  // If: end of then branch; While: end of body
  PointId else_end = kNoPoint;  // only when has_else
};

/// A location at which the proof outline records an assertion.
struct ProgramPoint {
  enum class Kind { Before, ThenEnd, ElseEnd, BodyEnd, Exit };

  Kind kind = Kind::Exit;
  std::uint32_t label = 0;

  /// "L3", "L2.then", "L2.else", "L5.body" or "exit".
  std::string name() const;
  friend bool operator==(const ProgramPoint&, const ProgramPoint&) = default;
};

struct Thread {
  std::string name;
  Block body;
  VarSet locals;
  VarSet rely_vars;
  bool explicit_rely_vars = false;
  // In source display order; the last entry is the thread exit.
  std::vector<ProgramPoint> points;
  PointId exit_point = kNoPoint;
  std::uint32_t statement_count = 0;

  /// Point id for a given name, or kNoPoint.
  PointId find_point(const std::string& name) const;
};

struct Program {
  // Sorted by name; VarId is the index.
  std::vector<std::string> vars;
  std::vector<Thread> threads;
  CondPtr pre;
  CondPtr post;

  std::size_t num_vars() const { return vars.size(); }
  VarSet all_vars() const { return VarSet::all(vars.size()); }
  /// Index of a variable by name; throws std::out_of_range if unknown.
  VarId var_id(const std::string& name) const;
  /// Index of a thread by name; throws std::out_of_range if unknown.
  std::size_t thread_index(const std::string& name) const;
};

bool operator==(const Expr& a, const Expr& b);
bool operator==(const Cond& a, const Cond& b);
bool operator==(const Stmt& a, const Stmt& b);
bool same_block(const Block& a, const Block& b);
bool operator==(const Thread& a, const Thread& b);
bool operator==(const Program& a, const Program& b);

/// Every literal occurring anywhere in the program, including pre/post.
std::vector<Value> collect_literals(const Program& p);

}  // namespace cwrg
