// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cwrg/errors.hpp"

namespace cwrg {
namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {"vars", "local", "pre",  "post",  "relyvars", "thread",
                                           "if",   "else",  "while", "skip", "true",     "false",
                                           "and",  "or",    "not"};
  return kw;
}

std::vector<Token> lex(std::string_view text) {
  static const char* const kTwoChar[] = {":=", "==", "!=", "<=", ">=", "&&", "||"};
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Token::Kind::Int;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else {
      tok.kind = Token::Kind::Punct;
      for (const char* two : kTwoChar) {
        if (text.substr(i, 2) == two) tok.text = two;
      }
      if (tok.text.empty()) {
        if (std::string_view("+-*()<>{};,:!").find(c) == std::string_view::npos) {
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        tok.text = std::string(1, c);
      }
      advance(tok.text.size());
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program run() {
    prescan_declarations();
    while (!at_end()) parse_top_level();
    finish();
    return std::move(prog_);
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == p;
  }
  bool is_keyword(const char* k, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Ident && peek(ahead).text == k;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.column);
  }
  [[noreturn]] void fail_expected(const std::string& what) const {
    const Token& t = peek();
    fail("expected " + what + ", found " + (t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'"),
         t);
  }
  void expect_punct(const char* p) {
    if (!is_punct(p)) fail_expected(std::string("'") + p + "'");
    ++pos_;
  }
  bool accept_punct(const char* p) {
    if (!is_punct(p)) return false;
    ++pos_;
    return true;
  }
  void expect_keyword(const char* k) {
    if (!is_keyword(k)) fail_expected(std::string("'") + k + "'");
    ++pos_;
  }
  const Token& expect_name(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || keywords().count(t.text) != 0) fail_expected(what);
    ++pos_;
    return t;
  }

  // ---- declarations ----
  // Variables are collected up front so that VarIds can follow sorted name
  // order regardless of where declarations appear.
  void prescan_declarations() {
    std::map<std::string, std::string> local_owner;
    std::set<std::string> names;
    int depth = 0;
    for (std::size_t i = 0; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.kind == Token::Kind::Punct && t.text == "{") ++depth;
      if (t.kind == Token::Kind::Punct && t.text == "}") --depth;
      if (depth != 0 || t.kind != Token::Kind::Ident) continue;
      std::string owner;
      std::size_t j = i + 1;
      if (t.text == "local") {
        if (toks_[j].kind != Token::Kind::Ident) continue;  // reported by the main pass
        owner = toks_[j].text;
        j += 2;
      } else if (t.text != "vars") {
        continue;
      }
      for (; j < toks_.size() && toks_[j].kind == Token::Kind::Ident; j += 2) {
        const Token& v = toks_[j];
        if (keywords().count(v.text) != 0) break;
        if (!names.insert(v.text).second) fail("duplicate declaration of variable '" + v.text + "'", v);
        if (!owner.empty()) local_owner[v.text] = owner;
        if (!(toks_[j + 1].kind == Token::Kind::Punct && toks_[j + 1].text == ",")) break;
      }
    }
    if (names.size() > kMaxVars) fail("too many variables (limit 64)", toks_.front());
    prog_.vars.assign(names.begin(), names.end());
    for (const auto& [var, owner] : local_owner) local_owner_[prog_.var_id(var)] = owner;
  }

  std::vector<const Token*> name_list() {
    std::vector<const Token*> out;
    out.push_back(&expect_name("variable name"));
    while (accept_punct(",")) out.push_back(&expect_name("variable name"));
    return out;
  }

  void parse_top_level() {
    const Token& t = peek();
    if (is_keyword("vars")) {
      ++pos_;
      if (!is_punct(";")) name_list();
      expect_punct(";");
    } else if (is_keyword("local")) {
      ++pos_;
      expect_name("thread name");
      expect_punct(":");
      name_list();
      expect_punct(";");
    } else if (is_keyword("pre") || is_keyword("post")) {
      const bool is_pre = t.text == "pre";
      ++pos_;
      if ((is_pre ? prog_.pre : prog_.post) != nullptr) fail("duplicate '" + t.text + "' clause", t);
      CondPtr c = parse_cond();
      expect_punct(";");
      (is_pre ? prog_.pre : prog_.post) = std::move(c);
    } else if (is_keyword("relyvars")) {
      ++pos_;
      const Token& thread = expect_name("thread name");
      expect_punct(":");
      VarSet vs;
      if (!is_punct(";")) {
        for (const Token* v : name_list()) vs.insert(resolve(*v, nullptr));
      }
      expect_punct(";");
      if (!rely_decls_.emplace(thread.text, std::make_pair(vs, &thread)).second) {
        fail("duplicate relyvars for thread '" + thread.text + "'", thread);
      }
    } else if (is_keyword("thread")) {
      parse_thread();
    } else {
      fail_expected("declaration or thread");
    }
  }

  void parse_thread() {
    expect_keyword("thread");
    const Token& name = expect_name("thread name");
    for (const auto& th : prog_.threads) {
      if (th.name == name.text) fail("duplicate thread id '" + name.text + "'", name);
    }
    Thread th;
    th.name = name.text;
    current_ = &th;
    label_ = 0;
    th.body = parse_block();
    th.exit_point = add_point(ProgramPoint::Kind::Exit, 0);
    th.statement_count = label_;
    current_ = nullptr;
    prog_.threads.push_back(std::move(th));
  }

  PointId add_point(ProgramPoint::Kind kind, std::uint32_t label) {
    current_->points.push_back(ProgramPoint{kind, label});
    return static_cast<PointId>(current_->points.size() - 1);
  }

  Block parse_block() {
    expect_punct("{");
    Block out;
    while (!is_punct("}")) {
      if (at_end()) fail_expected("'}'");
      if (accept_punct(";")) continue;
      const bool simple = !(is_keyword("if") || is_keyword("while"));
      out.push_back(parse_stmt());
      if (simple && !is_punct("}")) expect_punct(";");
    }
    expect_punct("}");
    return out;
  }

  StmtPtr parse_stmt() {
    auto s = std::make_shared<Stmt>();
    s->label = ++label_;
    s->before = add_point(ProgramPoint::Kind::Before, s->label);
    if (is_keyword("skip")) {
      ++pos_;
      s->kind = Stmt::Kind::Skip;
    } else if (is_keyword("if")) {
      ++pos_;
      s->kind = Stmt::Kind::If;
      expect_punct("(");
      s->cond = parse_cond();
      expect_punct(")");
      s->then_block = parse_block();
      s->then_end = add_point(ProgramPoint::Kind::ThenEnd, s->label);
      if (is_keyword("else")) {
        ++pos_;
        s->has_else = true;
        if (is_keyword("if")) {
          s->else_block.push_back(parse_stmt());
        } else {
          s->else_block = parse_block();
        }
        s->else_end = add_point(ProgramPoint::Kind::ElseEnd, s->label);
      }
    } else if (is_keyword("while")) {
      ++pos_;
      s->kind = Stmt::Kind::While;
      expect_punct("(");
      s->cond = parse_cond();
      expect_punct(")");
      s->then_block = parse_block();
      s->then_end = add_point(ProgramPoint::Kind::BodyEnd, s->label);
    } else {
      s->kind = Stmt::Kind::Assign;
      parse_assign(s->assign);
    }
    return s;
  }

  void parse_assign(Assign& a) {
    std::vector<const Token*> targets;
    targets.push_back(&expect_name("statement"));
    while (accept_punct(",")) targets.push_back(&expect_name("variable name"));
    const Token& op = peek();
    expect_punct(":=");
    VarSet seen;
    for (const Token* t : targets) {
      VarId v = resolve(*t, current_);
      if (seen.contains(v)) fail("variable '" + t->text + "' assigned twice in one statement", *t);
      seen.insert(v);
      a.targets.push_back(v);
    }
    a.exprs.push_back(parse_expr());
    while (accept_punct(",")) a.exprs.push_back(parse_expr());
    if (a.exprs.size() != a.targets.size()) {
      fail("assignment arity mismatch: " + std::to_string(a.targets.size()) + " target(s), " +
               std::to_string(a.exprs.size()) + " expression(s)",
           op);
    }
  }

  VarId resolve(const Token& t, const Thread* in_thread) {
    VarId v;
    try {
      v = prog_.var_id(t.text);
    } catch (const std::out_of_range&) {
      fail("undeclared variable '" + t.text + "'", t);
    }
    if (in_thread != nullptr) {
      auto it = local_owner_.find(v);
      if (it != local_owner_.end() && it->second != in_thread->name) {
        fail("variable '" + t.text + "' is local to thread " + it->second, t);
      }
    }
    return v;
  }

  // ---- conditions ----
  CondPtr parse_cond() {
    CondPtr lhs = parse_and();
    while (is_punct("||") || is_keyword("or")) {
      ++pos_;
      lhs = Cond::make_or(lhs, parse_and());
    }
    return lhs;
  }

  CondPtr parse_and() {
    CondPtr lhs = parse_unary();
    while (is_punct("&&") || is_keyword("and")) {
      ++pos_;
      lhs = Cond::make_and(lhs, parse_unary());
    }
    return lhs;
  }

  CondPtr parse_unary() {
    if (is_punct("!") || is_keyword("not")) {
      ++pos_;
      return Cond::make_not(parse_unary());
    }
    if (is_keyword("true")) {
      ++pos_;
      return Cond::make_true();
    }
    if (is_keyword("false")) {
      ++pos_;
      return Cond::make_false();
    }
    if (is_punct("(")) {
      // Either a parenthesised condition or a comparison starting with a
      // parenthesised expression; try the former first.
      const std::size_t saved = pos_;
      try {
        ++pos_;
        CondPtr inner = parse_cond();
        expect_punct(")");
        return inner;
      } catch (const ParseError&) {
        pos_ = saved;
      }
    }
    ExprPtr lhs = parse_expr();
    static const std::pair<const char*, CmpOp> kOps[] = {{"==", CmpOp::Eq}, {"!=", CmpOp::Ne},
                                                         {"<=", CmpOp::Le}, {">=", CmpOp::Ge},
                                                         {"<", CmpOp::Lt},  {">", CmpOp::Gt}};
    for (const auto& [text, op] : kOps) {
      if (is_punct(text)) {
        ++pos_;
        return Cond::make_cmp(op, lhs, parse_expr());
      }
    }
    fail_expected("comparison operator");
  }

  // ---- expressions ----
  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (is_punct("+") || is_punct("-")) {
      const BinaryOp op = peek().text == "+" ? BinaryOp::Add : BinaryOp::Sub;
      ++pos_;
      lhs = Expr::make_binary(op, lhs, parse_term());
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (accept_punct("*")) lhs = Expr::make_binary(BinaryOp::Mul, lhs, parse_factor());
    return lhs;
  }

  ExprPtr parse_factor() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      ++pos_;
      return Expr::make_literal(parse_int(t, false));
    }
    if (is_punct("-")) {
      ++pos_;
      if (peek().kind == Token::Kind::Int) {
        const Token& lit = peek();
        ++pos_;
        return Expr::make_literal(parse_int(lit, true));
      }
      return Expr::make_binary(BinaryOp::Sub, Expr::make_literal(0), parse_factor());
    }
    if (accept_punct("(")) {
      ExprPtr e = parse_expr();
      expect_punct(")");
      return e;
    }
    if (t.kind == Token::Kind::Ident && keywords().count(t.text) == 0) {
      ++pos_;
      return Expr::make_var(resolve(t, current_));
    }
    fail_expected("expression");
  }

  Value parse_int(const Token& t, bool negative) {
    const std::string text = (negative ? "-" : "") + t.text;
    Value v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("integer literal out of range", t);
    return v;
  }

  void finish() {
    if (prog_.threads.empty()) fail("program has no threads", peek());
    if (!prog_.pre) prog_.pre = Cond::make_true();
    if (!prog_.post) prog_.post = Cond::make_true();
    for (const auto& [var, owner] : local_owner_) {
      bool found = false;
      for (auto& th : prog_.threads) {
        if (th.name == owner) {
          th.locals.insert(var);
          found = true;
        }
      }
      if (!found) fail("local declaration names unknown thread '" + owner + "'", toks_.front());
    }
    for (auto& th : prog_.threads) th.rely_vars = prog_.all_vars();
    for (const auto& [name, decl] : rely_decls_) {
      auto it = std::find_if(prog_.threads.begin(), prog_.threads.end(),
                             [&](const Thread& th) { return th.name == name; });
      if (it == prog_.threads.end()) fail("relyvars names unknown thread '" + name + "'", *decl.second);
      it->rely_vars = decl.first;
      it->explicit_rely_vars = true;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Program prog_;
  std::map<VarId, std::string> local_owner_;
  std::map<std::string, std::pair<VarSet, const Token*>> rely_decls_;
  Thread* current_ = nullptr;
  std::uint32_t label_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(lex(text)).run(); }

}  // namespace cwrg
