// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cwrg/errors.hpp"
#include "cwrg/parser.hpp"
#include "cwrg/printer.hpp"
#include "cwrg/semantics.hpp"
#include "support/program_gen.hpp"

namespace cwrg {
namespace {

const char* kWorked = R"(
vars x, z;
local T0: r;
pre true;
post r == 0;
thread T0 { r := 0; if (z == 0) { x := 0; r := x; } }
thread T1 { if (z == 1) { x := 1; } }
)";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

State st(std::initializer_list<Value> vs) { return State{std::vector<Value>(vs)}; }

TEST(Parser, WorkedExampleShape) {
  const Program p = parse_program(kWorked);
  EXPECT_EQ(p.vars, (std::vector<std::string>{"r", "x", "z"}));
  ASSERT_EQ(p.threads.size(), 2u);
  const Thread& t0 = p.threads[0];
  EXPECT_EQ(t0.name, "T0");
  EXPECT_EQ(t0.statement_count, 4u);
  EXPECT_TRUE(t0.locals.contains(p.var_id("r")));
  EXPECT_EQ(t0.rely_vars, p.all_vars());

  std::vector<std::string> names;
  for (const auto& pt : t0.points) names.push_back(pt.name());
  EXPECT_EQ(names, (std::vector<std::string>{"L1", "L2", "L3", "L4", "L2.then", "exit"}));
  EXPECT_EQ(t0.exit_point, t0.points.size() - 1);

  names.clear();
  for (const auto& pt : p.threads[1].points) names.push_back(pt.name());
  EXPECT_EQ(names, (std::vector<std::string>{"L1", "L2", "L1.then", "exit"}));
}

TEST(Parser, ElseWhileAndMultiAssign) {
  const Program p = parse_program(R"(
    vars a, b;
    thread T {
      while (a == 0) { a, b := b, a; }
      if (a == 1) { skip; } else if (b == 1) { b := 0 } else { a := 2 }
    }
  )");
  const Thread& t = p.threads[0];
  ASSERT_EQ(t.body.size(), 2u);
  const Stmt& loop = *t.body[0];
  EXPECT_EQ(loop.kind, Stmt::Kind::While);
  ASSERT_EQ(loop.then_block.size(), 1u);
  EXPECT_EQ(loop.then_block[0]->assign.targets.size(), 2u);
  const Stmt& branch = *t.body[1];
  EXPECT_TRUE(branch.has_else);
  ASSERT_EQ(branch.else_block.size(), 1u);
  EXPECT_EQ(branch.else_block[0]->kind, Stmt::Kind::If);
  EXPECT_NE(t.find_point("L1.body"), kNoPoint);
  EXPECT_NE(t.find_point("L3.else"), kNoPoint);
  EXPECT_NE(t.find_point("L5.else"), kNoPoint);
  EXPECT_EQ(t.statement_count, 7u);
  EXPECT_EQ(t.find_point("L9"), kNoPoint);
}

TEST(Parser, RelyVarsDeclaration) {
  const Program p = parse_program("vars x, y; relyvars T: x; thread T { y := x; }");
  EXPECT_TRUE(p.threads[0].explicit_rely_vars);
  EXPECT_EQ(p.threads[0].rely_vars, VarSet::single(p.var_id("x")));
}

struct BadProgram {
  const char* text;
  const char* message;
};

class ParserErrors : public ::testing::TestWithParam<BadProgram> {};

TEST_P(ParserErrors, ReportsLocation) {
  try {
    parse_program(GetParam().text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 0);
    EXPECT_GT(e.column(), 0);
    EXPECT_NE(std::string(e.what()).find(GetParam().message), std::string::npos) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, ParserErrors,
    ::testing::Values(BadProgram{"vars x; thread T { y := 1; }", "y"},
                      BadProgram{"vars x; thread T { x := 1 }  thread T { x := 2; }", "T"},
                      BadProgram{"vars x, y; thread T { x, y := 1; }", "arity"},
                      BadProgram{"vars x; thread T { x, x := 1, 2; }", "x"},
                      BadProgram{"vars x; local A: r; thread A { r := 1; } thread B { x := r; }", "r"},
                      BadProgram{"vars x;", "thread"},
                      BadProgram{"vars x, x; thread T { x := 1; }", "x"},
                      BadProgram{"vars x; thread T { x := ; }", ""},
                      BadProgram{"vars x; thread T { if x == 1 { skip; } }", ""},
                      BadProgram{"vars x; relyvars U: x; thread T { skip; }", "U"}));

TEST(Parser, ErrorPositionIsExact) {
  try {
    parse_program("vars x;\nthread T {\n  x := y;\n}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 8);
  }
}

TEST(Printer, RoundTripsCorpus) {
  for (const char* name : {"worked_example", "reset", "circular", "mutex1", "mutex2", "spinlock"}) {
    const Program p = parse_program(slurp(std::string(CWRG_CORPUS_DIR) + "/" + name + ".cwp"));
    const std::string printed = print_program(p);
    const Program q = parse_program(printed);
    EXPECT_TRUE(p == q) << name << "\n" << printed;
    EXPECT_EQ(print_program(q), printed) << name;
  }
}

TEST(Printer, RoundTripsRandomPrograms) {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    testing::ProgramGen gen(rng, {});
    const Program p = parse_program(gen.program());
    EXPECT_TRUE(p == parse_program(print_program(p))) << print_program(p);
  }
}

TEST(Printer, MinimalParentheses) {
  const Program p = parse_program("vars a, b, c; thread T { a := a - (b - c); b := (a - b) - c; c := a * (b + c); }");
  const auto& body = p.threads[0].body;
  EXPECT_EQ(print_assign(body[0]->assign, p.vars), "a := a - (b - c)");
  EXPECT_EQ(print_assign(body[1]->assign, p.vars), "b := a - b - c");
  EXPECT_EQ(print_assign(body[2]->assign, p.vars), "c := a * (b + c)");
}

TEST(Semantics, SimultaneousAssignmentSwaps) {
  const Program p = parse_program("vars x, y; thread T { x, y := y, x; }");
  EXPECT_EQ(exec_assign(p.threads[0].body[0]->assign, st({1, 2})), st({2, 1}));
}

TEST(Semantics, ArithmeticAndComparisons) {
  const Program p = parse_program(
      "vars x, y; thread T { x := 3 * y - -2; if (x >= 8 && !(y < 2) || false) { skip; } }");
  EXPECT_EQ(exec_assign(p.threads[0].body[0]->assign, st({0, 2})), st({8, 2}));
  const Cond& c = *p.threads[0].body[1]->cond;
  EXPECT_TRUE(eval_cond(c, st({8, 2})));
  EXPECT_FALSE(eval_cond(c, st({8, 1})));
  EXPECT_FALSE(eval_cond(c, st({7, 2})));
}

TEST(Semantics, OverflowIsAnError) {
  const Program p = parse_program("vars x; thread T { x := x * x; }");
  EXPECT_THROW(exec_assign(p.threads[0].body[0]->assign, st({Value{1} << 40})), EvalError);
}

TEST(Semantics, NegationNormalFormPreservesMeaning) {
  const Program p = parse_program(
      "vars a, b; thread T { if (!(a == 0 && (b != 1 || !(a < b)))) { skip; } }");
  const CondPtr c = p.threads[0].body[0]->cond;
  const CondPtr nnf = negation_normal_form(c);
  const CondPtr neg = negate(c);
  for (Value a = -1; a <= 2; ++a) {
    for (Value b = -1; b <= 2; ++b) {
      const State s = st({a, b});
      EXPECT_EQ(eval_cond(*nnf, s), eval_cond(*c, s));
      EXPECT_EQ(eval_cond(*neg, s), !eval_cond(*c, s));
    }
  }
}

TEST(Universe, EnumeratesLexicographically) {
  const Universe u = Universe::uniform(2, {1, 0, 1});
  EXPECT_EQ(u.product_size(), 4u);
  const auto states = u.states();
  ASSERT_EQ(states.size(), 4u);
  EXPECT_EQ(states.front(), st({0, 0}));
  EXPECT_EQ(states.back(), st({1, 1}));
  EXPECT_THROW(Universe::uniform(1, {}), ConfigError);
  EXPECT_THROW(Universe::uniform(30, {0, 1}, 1000).product_size(), ConfigError);
}

}  // namespace
}  // namespace cwrg
