// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

// Checks behind the acceptance suite. Each returns pass/fail with a one-line
// summary; the counts are parameters so unit tests can run cheaper variants.
namespace cwrg::testing {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

/// Worked example, const domain, N = 3, transitive mode: exact outlines,
/// guarantees, relies and verdict; analysis under one second.
CriterionResult check_worked_example(const std::string& corpus_dir);

/// stabilise, stabilise_fix and stabilise on closed relies against
/// brute-force reachability, `per_domain` random (i, d, N) per domain.
CriterionResult check_stabilise_soundness(std::size_t per_domain, std::uint32_t seed);

/// transitions(d, A) admits every concrete step of A from gamma(d).
CriterionResult check_transitions_soundness(std::size_t per_domain, std::uint32_t seed);

/// close is extensive, transitive on the universe and idempotent.
CriterionResult check_close_properties(std::size_t per_domain, std::uint32_t seed);

/// stabilise with and without pruning, close under all four toggle settings.
CriterionResult check_optimisation_equivalence(std::size_t per_domain, std::uint32_t seed);

/// Lattice laws and havoc axioms: exhaustive over ConstMap on two binary
/// variables, `powerset_samples` random powerset triples.
CriterionResult check_lattice_and_havoc(std::size_t powerset_samples, std::uint32_t seed);

/// Random two-thread programs under both domains and both modes: analysis
/// converges and every outline covers the explored states.
CriterionResult check_end_to_end(std::size_t programs, std::uint32_t seed);

/// Corpus patterns: a powerset-only program (both modes), a program only the
/// non-transitive powerset cell verifies, and non-transitive Ops below
/// transitive Ops in most (program, domain) pairs.
CriterionResult check_corpus_patterns(const std::string& manifest);

/// stabilise_fix results are fixpoints of stabilise on the suite-2a inputs;
/// close(R) = R for transitive relies of converged corpus results.
CriterionResult check_mode_fixpoints(std::size_t per_domain, std::uint32_t seed, const std::string& manifest);

}  // namespace cwrg::testing
