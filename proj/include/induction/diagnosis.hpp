#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "induction/solver.hpp"

namespace induction {

enum class ConstraintLevel { Step, Subproof, Proof, Soft };
std::string_view to_string(ConstraintLevel l);

struct ConstraintInfo {
  std::string id;
  ConstraintLevel level = ConstraintLevel::Step;
  int priority = 0;  // lower is checked first
  std::string message_id;
  std::string message_text;
};

// Built-in catalog, sorted by priority.
const std::vector<ConstraintInfo>& constraint_catalog();
// Parses [{id, level, priority, messageId, messageText}]. Throws Parse.
std::vector<ConstraintInfo> parse_constraint_catalog(std::string_view json_text);
// Replaces the built-in catalog, e.g. with re-texted messages. Not thread-safe
// with concurrent diagnosis; call at startup.
void install_constraint_catalog(std::vector<ConstraintInfo> catalog);
std::string constraint_catalog_json();
// Throws UnknownFunction for an unknown id.
const ConstraintInfo& constraint_info(std::string_view id);

// Section "IH" denotes the induction hypothesis block. Lines are 1-based
// within their chain; bottom-chain lines count upward from the instantiated
// right-hand side.
struct Location {
  std::string section;
  ChainEnd chain = ChainEnd::Top;
  std::size_t line = 1;

  friend bool operator==(const Location&, const Location&) = default;
};

struct Violation {
  std::string id;
  Location location;
  std::string detail;
};

// Violations on every line of `state` except the completion constraints,
// ordered by priority and then document position.
std::vector<Violation> step_violations(const ExerciseSpec& spec, const ProofState& state);

struct ConstraintResult {
  std::string id;
  bool satisfied = true;
  std::optional<Location> location;
  std::string detail;
};

// Every hard constraint over the whole state: one failing entry per
// violation, one satisfied entry for each constraint without violations.
std::vector<ConstraintResult> check_constraints(const ExerciseSpec& spec, const ProofState& state);
bool all_satisfied(const std::vector<ConstraintResult>& results);

enum class SoftStatus { NotIntroduced, InProgress, Finished };
std::string_view to_string(SoftStatus s);

struct SectionStatus {
  std::string section;
  SoftStatus status = SoftStatus::NotIntroduced;
};

struct Guidance {
  std::vector<SectionStatus> sections;  // base cases, IH, inductive cases
  std::string message_id;
  std::string text;
};

Guidance soft_status(const ExerciseSpec& spec, const ProofState& state);

enum class Outcome { BuggyViolation, UnknownViolation, Similar, Expected, Detour, CorrectMultipleSteps };
// "buggy", "unknown", "similar", "expected", "detour", "multiple-steps".
std::string_view to_string(Outcome o);

struct Diagnosis {
  Outcome outcome = Outcome::Similar;
  std::string message_id;  // violations only
  std::string message_text;
  std::optional<Location> location;
  std::vector<Rule> rules;  // how the last new line was recognized
  Guidance guidance;
};

Diagnosis diagnose(const ExerciseSpec& spec, const ProofState& prev, const ProofState& submission);

// next_step with its precondition enforced: throws StateInvalid when the
// state has violations.
NextStep checked_next_step(const ExerciseSpec& spec, const ProofState& state,
                           const std::optional<SubproofRef>& focus = {});
Hint checked_hint(const ExerciseSpec& spec, const ProofState& state, int tier, const ProofState* prev = nullptr);

}  // namespace induction
