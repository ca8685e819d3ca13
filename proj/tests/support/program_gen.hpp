// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cwrg::testing {

struct GenOptions {
  std::size_t num_vars = 3;       // drawn from a, b, c
  std::size_t threads = 2;
  std::size_t max_statements = 6;  // per thread, counting nested ones
  std::size_t max_depth = 2;
  bool loops = true;
  bool random_pre = true;
  bool random_post = true;
};

/// Random finite-state program text over literals {0, 1}. Every value stays in
/// {0, 1}: right-hand sides are literals, variables or 1 - v. Loops are
/// bounded by their guard: the body ends by falsifying it.
class ProgramGen {
 public:
  ProgramGen(std::mt19937& rng, GenOptions opts) : rng_(rng), opts_(opts) {
    for (std::size_t k = 0; k < opts_.num_vars; ++k) vars_.push_back(std::string(1, static_cast<char>('a' + k)));
  }

  std::string program() {
    std::ostringstream os;
    os << "vars ";
    for (std::size_t k = 0; k < vars_.size(); ++k) os << (k ? ", " : "") << vars_[k];
    os << ";\n";
    os << "pre " << (opts_.random_pre && coin(2) ? cond() : std::string("true")) << ";\n";
    os << "post " << (opts_.random_post && coin(2) ? cond() : std::string("true")) << ";\n";
    for (std::size_t t = 0; t < opts_.threads; ++t) {
      budget_ = 1 + pick(opts_.max_statements);
      os << "thread T" << t << " {\n" << block(1) << "}\n";
    }
    return os.str();
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(std::size_t n) { return pick(n) == 0; }
  const std::string& var() { return vars_[pick(vars_.size())]; }
  std::string lit() { return coin(2) ? "0" : "1"; }

  std::string atom() {
    const std::string& v = var();
    return v + (coin(2) ? " == " : " != ") + lit();
  }

  std::string cond() {
    switch (pick(6)) {
      case 0:
        return atom() + " && " + atom();
      case 1:
        return atom() + " || " + atom();
      default:
        return atom();
    }
  }

  std::string rhs() {
    switch (pick(4)) {
      case 0:
      case 1:
        return lit();
      case 2:
        return var();
      default:
        return "1 - " + var();
    }
  }

  std::string indent(std::size_t depth) { return std::string(2 * depth, ' '); }

  std::string block(std::size_t depth) {
    std::ostringstream os;
    const std::size_t len = 1 + pick(3);
    for (std::size_t k = 0; k < len && budget_ > 0; ++k) os << stmt(depth);
    return os.str();
  }

  std::string stmt(std::size_t depth) {
    --budget_;
    const bool nest = depth <= opts_.max_depth && budget_ > 0;
    const std::size_t kind = pick(nest ? (opts_.loops ? 8 : 7) : 5);
    std::ostringstream os;
    if (kind < 5) {
      os << indent(depth) << var() << " := " << rhs() << ";\n";
    } else if (kind < 7) {
      os << indent(depth) << "if (" << cond() << ") {\n" << block(depth + 1) << indent(depth) << "}";
      if (coin(2) && budget_ > 0) os << " else {\n" << block(depth + 1) << indent(depth) << "}";
      os << "\n";
    } else {
      // while (v == k) { ...; v := 1 - k; }
      const std::string& v = var();
      const std::string k = lit();
      os << indent(depth) << "while (" << v << " == " << k << ") {\n"
         << (budget_ > 0 ? block(depth + 1) : std::string()) << indent(depth + 1) << v << " := " << (k == "0" ? "1" : "0")
         << ";\n"
         << indent(depth) << "}\n";
    }
    return os.str();
  }

  std::mt19937& rng_;
  GenOptions opts_;
  std::vector<std::string> vars_;
  std::size_t budget_ = 0;
};

}  // namespace cwrg::testing
