// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include <deque>
#include <unordered_set>

#include "cwrg/errors.hpp"
#include "cwrg/oracle.hpp"
#include "cwrg/semantics.hpp"

namespace cwrg {
namespace {

struct Node {
  enum class Kind { Assign, Guard, Silent, Exit };
  Kind kind = Kind::Exit;
  PointId point = kNoPoint;
  const Assign* assign = nullptr;
  const Cond* cond = nullptr;
  std::uint32_t next = 0;
  std::uint32_t next_false = 0;
};

class CfgBuilder {
 public:
  std::vector<Node> nodes;

  std::uint32_t add(Node n) {
    nodes.push_back(n);
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }

  std::uint32_t block(const Block& b, std::uint32_t succ) {
    for (auto it = b.rbegin(); it != b.rend(); ++it) succ = stmt(**it, succ);
    return succ;
  }

  std::uint32_t stmt(const Stmt& s, std::uint32_t succ) {
    switch (s.kind) {
      case Stmt::Kind::Skip:
        return add({Node::Kind::Silent, s.before, nullptr, nullptr, succ, 0});
      case Stmt::Kind::Assign:
        return add({Node::Kind::Assign, s.before, &s.assign, nullptr, succ, 0});
      case Stmt::Kind::If: {
        const std::uint32_t then_end = add({Node::Kind::Silent, s.then_end, nullptr, nullptr, succ, 0});
        const std::uint32_t then_entry = block(s.then_block, then_end);
        std::uint32_t else_entry = succ;
        if (s.has_else) {
          const std::uint32_t else_end = add({Node::Kind::Silent, s.else_end, nullptr, nullptr, succ, 0});
          else_entry = block(s.else_block, else_end);
        }
        return add({Node::Kind::Guard, s.before, nullptr, s.cond.get(), then_entry, else_entry});
      }
      case Stmt::Kind::While: {
        const std::uint32_t head = add({Node::Kind::Guard, s.before, nullptr, s.cond.get(), 0, succ});
        const std::uint32_t body_end = add({Node::Kind::Silent, s.then_end, nullptr, nullptr, head, 0});
        nodes[head].next = block(s.then_block, body_end);
        return head;
      }
    }
    return succ;
  }
};

struct Config {
  std::vector<std::uint32_t> pcs;
  State store;

  friend bool operator==(const Config&, const Config&) = default;
};

struct ConfigHash {
  std::size_t operator()(const Config& c) const noexcept {
    std::size_t h = StateHash{}(c.store);
    for (auto pc : c.pcs) h ^= pc + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

Universe oracle_universe(const Program& p) {
  std::vector<Value> vals = collect_literals(p);
  vals.push_back(0);
  vals.push_back(1);
  return Universe::uniform(p.num_vars(), std::move(vals));
}

OracleReport explore(const Program& p, const OracleBudget& budget) {
  return explore(p, oracle_universe(p), budget);
}

OracleReport explore(const Program& p, const Universe& u, const OracleBudget& budget) {
  if (budget.max_states == 0 || budget.max_steps == 0) throw ConfigError("oracle budgets must be positive");
  if (u.num_vars() != p.num_vars()) throw ConfigError("oracle universe does not match the program variables");

  const std::size_t nt = p.threads.size();
  std::vector<std::vector<Node>> cfgs(nt);
  std::vector<std::uint32_t> entries(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    CfgBuilder b;
    const std::uint32_t exit = b.add({Node::Kind::Exit, p.threads[t].exit_point, nullptr, nullptr, 0, 0});
    entries[t] = b.block(p.threads[t].body, exit);
    cfgs[t] = std::move(b.nodes);
  }

  OracleReport rep;
  rep.universe = u;
  rep.reachable.resize(nt);
  for (std::size_t t = 0; t < nt; ++t) rep.reachable[t].resize(p.threads[t].points.size());
  rep.steps.resize(nt);

  std::unordered_set<Config, ConfigHash> seen;
  std::deque<Config> frontier;
  auto push = [&](Config c) {
    if (seen.contains(c)) return;
    if (seen.size() >= budget.max_states) {
      rep.bounded = true;
      return;
    }
    if (!u.contains(c.store)) rep.universe_closed = false;
    seen.insert(c);
    frontier.push_back(std::move(c));
  };

  u.for_each_state([&](const State& s) {
    if (eval_cond(*p.pre, s)) push(Config{entries, s});
  });

  while (!frontier.empty()) {
    Config c = std::move(frontier.front());
    frontier.pop_front();
    bool all_exit = true;
    for (std::size_t t = 0; t < nt; ++t) {
      const Node& node = cfgs[t][c.pcs[t]];
      rep.reachable[t][node.point].insert(c.store);
      all_exit = all_exit && node.kind == Node::Kind::Exit;
    }
    if (all_exit) rep.exit_states.insert(c.store);

    for (std::size_t t = 0; t < nt; ++t) {
      const Node& node = cfgs[t][c.pcs[t]];
      if (node.kind == Node::Kind::Exit) continue;
      if (rep.transitions >= budget.max_steps) {
        rep.bounded = true;
        break;
      }
      ++rep.transitions;
      Config next = c;
      switch (node.kind) {
        case Node::Kind::Assign:
          next.store = exec_assign(*node.assign, c.store);
          rep.steps[t].emplace(c.store, next.store);
          next.pcs[t] = node.next;
          break;
        case Node::Kind::Guard:
          next.pcs[t] = eval_cond(*node.cond, c.store) ? node.next : node.next_false;
          break;
        case Node::Kind::Silent:
          next.pcs[t] = node.next;
          break;
        case Node::Kind::Exit:
          break;
      }
      push(std::move(next));
    }
    if (rep.bounded) break;
  }
  rep.configurations = seen.size();
  return rep;
}

}  // namespace cwrg
