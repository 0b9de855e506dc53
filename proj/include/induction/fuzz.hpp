#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "induction/diagnosis.hpp"

namespace induction {

struct FuzzOptions {
  std::size_t states = 1000;
  std::uint64_t seed = 1;
  std::size_t max_moves = 30;
  std::size_t generated_exercises = 20;  // besides the catalog
};

struct FuzzCase {
  ExerciseSpec spec;
  ProofState state;
};

// Reachable, unfinished states: random valid moves (introductions, IH
// statements, rule applications on either chain, strategy steps) in random
// order across subproofs.
std::vector<FuzzCase> fuzz_states(const FuzzOptions& options);

struct FuzzReport {
  std::size_t total = 0;
  std::size_t available = 0;
  std::vector<std::string> failures;
};

// For every fuzzed state: no violations, next_step yields a step and all
// three hint tiers produce text.
FuzzReport run_hint_fuzz(const FuzzOptions& options);

}  // namespace induction
