#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "induction/exercises.hpp"

namespace induction {

enum class MotivationKind { None, Definition, InductionHypothesis, Given, Calculation, Distribution };

struct Motivation {
  MotivationKind kind = MotivationKind::None;
  std::string function;  // Definition and Given only

  static Motivation none() { return {}; }
  static Motivation definition(std::string fn) { return {MotivationKind::Definition, std::move(fn)}; }
  static Motivation hypothesis() { return {MotivationKind::InductionHypothesis, {}}; }
  static Motivation given(std::string v) { return {MotivationKind::Given, std::move(v)}; }
  static Motivation calculation() { return {MotivationKind::Calculation, {}}; }
  static Motivation distribution() { return {MotivationKind::Distribution, {}}; }

  friend bool operator==(const Motivation&, const Motivation&) = default;
};

// "definition prop", "induction hypothesis", "given ValA", "calculation",
// "distribution"; empty for none.
std::string print_motivation(const Motivation& m);
std::optional<Motivation> parse_motivation(std::string_view text);

struct ProofLine {
  Expr expr;
  // Relation to the neighbouring line of the same chain: previous top line
  // R this (top chain), this R previous bottom line (bottom chain). Absent
  // on a chain's first line; read as = when absent elsewhere.
  std::optional<Comparator> rel;
  Motivation motivation;

  friend bool operator==(const ProofLine&, const ProofLine&) = default;
};

struct SubproofRef {
  enum class Kind { Base, Inductive };
  Kind kind = Kind::Base;
  std::string atom;                         // Base
  Connective connective = Connective::Neg;  // Inductive

  static SubproofRef base(std::string atom) { return {Kind::Base, std::move(atom), Connective::Neg}; }
  static SubproofRef inductive(Connective c) { return {Kind::Inductive, {}, c}; }

  friend bool operator==(const SubproofRef& a, const SubproofRef& b) {
    return a.kind == b.kind && (a.kind == Kind::Base ? a.atom == b.atom : a.connective == b.connective);
  }
};

// "base p" or "case /\".
std::string to_string(const SubproofRef& ref);
// Throws Parse on anything else.
SubproofRef parse_subproof_ref(std::string_view text);

enum class ChainEnd { Top, Bottom };
std::string_view to_string(ChainEnd end);

// A bottom chain grows upward from the instantiated right-hand side:
// bottom[0] is the rhs instance and bottom[k] R bottom[k-1].
struct Subproof {
  SubproofRef ref;
  std::vector<ProofLine> top;
  std::vector<ProofLine> bottom;
  bool closed = false;

  std::vector<ProofLine>& chain(ChainEnd end) { return end == ChainEnd::Top ? top : bottom; }
  const std::vector<ProofLine>& chain(ChainEnd end) const { return end == ChainEnd::Top ? top : bottom; }
  bool empty() const { return top.empty() && bottom.empty(); }

  friend bool operator==(const Subproof&, const Subproof&) = default;
};

enum class Phase { Base, Hypothesis, Inductive, Done };
std::string_view to_string(Phase p);

struct ProofState {
  std::string exercise_id;
  std::vector<Subproof> subproofs;  // document order
  std::vector<Statement> hypotheses;
  // Number of subproofs written before the IH block; absent without one.
  std::optional<std::size_t> ih_position;

  Subproof* find(const SubproofRef& ref);
  const Subproof* find(const SubproofRef& ref) const;
  std::size_t line_count() const;

  friend bool operator==(const ProofState&, const ProofState&) = default;
};

ProofState new_proof(const ExerciseSpec& spec);

// Appends to the chosen chain, introducing the subproof when it does not
// exist yet, and re-evaluates closure. Throws SubproofClosed, and
// UnknownSubproof for a case the exercise does not have.
ProofState add_line(const ExerciseSpec& spec, ProofState state, const SubproofRef& ref, ChainEnd end,
                    ProofLine line);

// Records an induction hypothesis once.
ProofState state_ih(ProofState state, const Statement& statement);

// Relation of the two ends of a subproof from its lines alone, if all
// relations compose.
std::optional<Comparator> folded_relation(const Subproof& sp);

// Goal of a subproof per the case plan; nullopt for cases outside it.
std::optional<Statement> subproof_goal(const ExerciseSpec& spec, const SubproofRef& ref);

// Closure from the chains alone: the top chain starts at the lhs instance,
// the chains meet (or the top chain reaches the rhs instance when the bottom
// chain is empty), the bottom chain starts at the rhs instance and the folded
// relation implies the theorem comparator.
bool subproof_closes(const ExerciseSpec& spec, const Subproof& sp);
void refresh_closure(const ExerciseSpec& spec, ProofState& state);

bool hypotheses_complete(const ExerciseSpec& spec, const ProofState& state);
Phase phase(const ExerciseSpec& spec, const ProofState& state);
bool is_done(const ExerciseSpec& spec, const ProofState& state);

// Line-oriented text format. Bottom-chain lines carry a leading "^ " and are
// written from the meeting point down to the rhs instance.
std::string serialize(const ProofState& state);
// Throws Error(Parse, line number). With a spec, closure is evaluated;
// without one the catalog entry named in the header is used when present.
ProofState deserialize(std::string_view text, const ExerciseSpec* spec = nullptr);

}  // namespace induction
