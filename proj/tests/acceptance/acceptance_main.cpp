// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <functional>
#include <iostream>

#include "support/criteria.hpp"

using namespace cwrg::testing;

int main() {
  const std::string corpus = CWRG_CORPUS_DIR;
  const std::string manifest = corpus + "/manifest.json";
  constexpr std::uint32_t kSeed = 20240611;

  const std::vector<std::pair<std::string, std::function<CriterionResult()>>> criteria = {
      {"1 worked-example golden", [&] { return check_worked_example(corpus); }},
      {"2a stabilise soundness", [&] { return check_stabilise_soundness(500, kSeed); }},
      {"2b transitions soundness", [&] { return check_transitions_soundness(500, kSeed + 10); }},
      {"2c close properties", [&] { return check_close_properties(200, kSeed + 20); }},
      {"3 optimisation equivalence", [&] { return check_optimisation_equivalence(500, kSeed + 30); }},
      {"4 havoc axioms and lattice laws", [&] { return check_lattice_and_havoc(1000, kSeed + 40); }},
      {"5 end-to-end soundness vs oracle", [&] { return check_end_to_end(100, kSeed + 50); }},
      {"6 corpus table patterns", [&] { return check_corpus_patterns(manifest); }},
      {"7 mode fixpoint contract", [&] { return check_mode_fixpoints(500, kSeed, manifest); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << name << ": " << r.detail << " [" << secs << " s]\n";
    failed += !r.pass;
  }
  std::cout << (failed ? "acceptance: FAILED" : "acceptance: all criteria passed") << '\n';
  return failed ? 1 : 0;
}
