// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "cwrg/condwrites.hpp"
#include "cwrg/const_map.hpp"
#include "cwrg/const_powerset.hpp"
#include "cwrg/engine.hpp"
#include "cwrg/parser.hpp"

namespace {

using namespace cwrg;

const char* const kPrograms[] = {"worked_example", "reset", "circular", "mutex1", "mutex2", "spinlock"};

Program load(const std::string& name) {
  std::ifstream in(std::string(CWRG_CORPUS_DIR) + "/" + name + ".cwp");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str());
}

// Interference on n variables where every variable may be written while
// variable 0 is zero and the others are pinned.
Interference<ConstMap> chain(std::size_t n) {
  Interference<ConstMap> i;
  for (VarId v = 0; v < n; ++v) {
    ConstMap m = ConstMap::top(n);
    m.bind(0, 0);
    if (v + 1 < n) m.bind(v + 1, 1);
    i.conds.push_back(m);
  }
  return i;
}

void BM_Stabilise(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ConstDomain dom(n);
  const CondWrites<ConstDomain> cw(dom, {.prune_stabilise = state.range(1) != 0});
  const auto i = chain(n);
  ConstMap d = ConstMap::top(n);
  for (VarId v = 0; v < n; ++v) d.bind(v, v == 0 ? 0 : 1);
  for (auto _ : state) benchmark::DoNotOptimize(cw.stabilise(i, d, n));
}
BENCHMARK(BM_Stabilise)->ArgsProduct({{4, 8, 12}, {0, 1}});

void BM_Close(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const bool opt = state.range(1) != 0;
  const ConstDomain dom(n);
  const CondWrites<ConstDomain> cw(dom, {.close_constrained_only = opt, .close_skip_covered = opt});
  const auto i = chain(n);
  for (auto _ : state) benchmark::DoNotOptimize(cw.close(i));
}
BENCHMARK(BM_Close)->ArgsProduct({{4, 8, 10}, {0, 1}});

void BM_Analyse(benchmark::State& state) {
  const Program p = load(kPrograms[state.range(0)]);
  AnalysisConfig cfg;
  cfg.domain = state.range(1) != 0 ? DomainKind::ConstPowerset : DomainKind::Const;
  cfg.mode = state.range(2) != 0 ? Mode::Transitive : Mode::NonTransitive;
  state.SetLabel(std::string(kPrograms[state.range(0)]) + " " + to_string(cfg.domain) + " " + to_string(cfg.mode));
  std::uint64_t ops = 0;
  for (auto _ : state) {
    if (cfg.domain == DomainKind::Const) {
      ops = Analyzer<ConstDomain>(p, cfg).analyse().metrics.ops;
    } else {
      ops = Analyzer<PowersetDomain>(p, cfg).analyse().metrics.ops;
    }
  }
  state.counters["ops"] = static_cast<double>(ops);
}
BENCHMARK(BM_Analyse)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {0, 1}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
