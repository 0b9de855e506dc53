#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "induction/definitions.hpp"

namespace induction {

struct ExerciseSpec {
  std::string id;
  std::string description;
  LanguageSpec language;
  FunctionTable functions;
  Statement theorem;

  friend bool operator==(const ExerciseSpec&, const ExerciseSpec&) = default;
};

struct ValidationIssue {
  std::string code;  // e.g. "LhsNotSingleTerm"
  std::string message;
};

std::vector<ValidationIssue> validate_exercise(const ExerciseSpec& spec);
// Throws InvalidExercise listing every issue.
void require_valid(const ExerciseSpec& spec);

// Sort of a theorem side; throws InvalidExercise when ill-sorted.
Sort sort_of(const FunctionTable& table, const Expr& e);
Sort theorem_sort(const ExerciseSpec& spec);

struct BaseCase {
  std::string atom;
  Statement goal;
};

struct InductiveCase {
  Connective connective;
  Statement goal;
};

struct CasePlan {
  std::vector<BaseCase> base_cases;
  std::vector<Statement> hypotheses;  // theorem over phi, then over psi
  std::vector<InductiveCase> inductive_cases;
};

// One generic base case on the first atom, plus one per atom that some
// definition treats specially. Inductive cases: negation first, then the
// binary connectives in declaration order.
CasePlan case_analysis(const ExerciseSpec& spec);

// Metavariable instance for an inductive case: ~phi or phi # psi.
Expr case_instance(Connective c);

// All formulas with at most `max_size` connective occurrences over the first
// `atom_count` atoms, smallest first.
std::vector<Formula> enumerate_formulas(const LanguageSpec& lang, std::size_t max_size, std::size_t atom_count);

// Every assignment of 0/1 to the valuations that satisfies their properties.
std::vector<Assignment> enumerate_assignments(const FunctionTable& table, const std::vector<std::string>& atoms);

// Direct evaluation of the theorem on every enumerated formula (and every
// admissible assignment for truth-valued theorems).
std::optional<Formula> find_counterexample(const ExerciseSpec& spec, std::size_t max_size = 4, std::size_t atom_count = 2);
bool verify_by_enumeration(const ExerciseSpec& spec, std::size_t max_size = 4, std::size_t atom_count = 2);

const std::vector<ExerciseSpec>& catalog();
const ExerciseSpec* find_exercise(std::string_view id);
// Throws UnknownExercise.
const ExerciseSpec& catalog_exercise(std::string_view id);

struct GeneratorParams {
  std::size_t lang_size = 3;       // connectives in the language
  std::int64_t coeff_bound = 3;    // bound on randomly chosen coefficients
  std::size_t term_count = 2;      // counting functions on the right-hand side
};

// Random counting/transform exercise whose theorem is true by construction.
// Deterministic per seed. Throws GenerationFailed after bounded retries.
ExerciseSpec generate_exercise(std::uint64_t seed, const GeneratorParams& params = {});

}  // namespace induction
