#pragma once

#include <optional>
#include <string>
#include <vector>

#include "induction/proofstate.hpp"

namespace induction {

enum class RuleKind {
  Introduce,     // first line of a chain: lhs or rhs instance
  StateIH,       // adds an induction hypothesis
  DefUnfold,     // definition of `function`
  ApplyIH,       // weak fertilization, lhs -> rhs
  MonotoneIH,    // IH below min/max
  ReverseIH,     // rhs -> lhs; never produced by the strategy
  Distribute,
  Arithmetic,
  GivenProperty  // property of valuation `function`
};

struct Rule {
  RuleKind kind = RuleKind::Arithmetic;
  std::string function;
  std::vector<std::string> metas;  // IH rules

  friend bool operator==(const Rule&, const Rule&) = default;
};

std::string_view to_string(RuleKind k);
std::string describe(const Rule& r);
// Justification a student is expected to give for the rule.
Motivation motivation_for(const Rule& r);
bool motivation_matches(const Motivation& m, const Rule& r);

// One rewrite of an expression together with the relation it establishes
// (before R after).
struct Rewrite {
  Rule rule;
  Expr result;
  Comparator relation;
};

// Which hypotheses may be used: the theorem over phi and over psi.
struct HypothesisUse {
  std::string meta;
  Statement statement;
};
std::vector<HypothesisUse> hypothesis_instances(const ExerciseSpec& spec);

// Every single-rule rewrite of `e`: unfoldings (single redex, all redexes of
// a function), the given properties of valuations, distribution, the
// induction hypotheses per metavariable and combined, and their reversed
// form when `include_reverse_ih`.
std::vector<Rewrite> rewrites(const ExerciseSpec& spec, const Expr& e, bool include_reverse_ih = false);

// Relation of replacing every occurrence of `from` in `e` by `to`, given
// from R to. nullopt when occurrences have mixed polarity, or occur below a
// connective or a transform and R is not =.
std::optional<Comparator> replacement_relation(const Expr& e, const Expr& from, Comparator r);
Expr replace_all(const Expr& e, const Expr& from, const Expr& to);

// Scale over Sum pushed inward.
Expr distribute(const Expr& e);
bool has_distributable(const Expr& e);

// Canonical arithmetic form of a numeric expression; e itself otherwise.
Expr arithmetic_normal(const Expr& e);

// A recognized step between the document-upper line U and the lower line L
// of a chain: U relation L follows from `rules` plus arithmetic.
struct Recognition {
  std::vector<Rule> rules;
  Comparator relation;
  bool uses_reverse_ih() const;
  bool uses_ih() const;
};

// A justification fits a recognized step when it names one of its rules;
// pure calculation and distribution may go without one.
bool justified_by(const Recognition& r, const Motivation& m);

// Candidate explanations for "upper claimed lower", best first: those whose
// relation implies `claimed` and whose rules match `motivation`, then the
// rest. Empty when the step is not recognized at all.
std::vector<Recognition> recognize(const ExerciseSpec& spec, const Expr& upper, const Expr& lower, Comparator claimed,
                                   const Motivation& motivation);

struct Step {
  enum class Kind { AddLine, StateIH };
  Kind kind = Kind::AddLine;
  SubproofRef ref;
  ChainEnd end = ChainEnd::Top;
  Rule rule;
  ProofLine line;
  Statement hypothesis;
  bool opens_subproof = false;

  // Tier 1: which obligation; tier 2: which rule; tier 3: the full line.
  std::string hint(int tier) const;
};

struct NextStep {
  bool complete = false;
  std::optional<Step> step;
};

ProofState apply_step(const ExerciseSpec& spec, const ProofState& state, const Step& step);

// First unfinished obligation in strategy order (base cases, IH, negation,
// binary connectives), or within `focus` when given and still open. Throws
// StateInvalid when the strategy cannot continue from the student's lines,
// NotProvable when the theorem's sort is unsupported.
NextStep next_step(const ExerciseSpec& spec, const ProofState& state, const std::optional<SubproofRef>& focus = {});

// Subproof touched by the latest activity: the last subproof that differs
// from `prev`, else the last open subproof in document order.
std::optional<SubproofRef> hint_focus(const ExerciseSpec& spec, const ProofState& state, const ProofState* prev);

struct Hint {
  bool complete = false;
  std::string text;
  std::optional<Step> step;
};
Hint hint(const ExerciseSpec& spec, const ProofState& state, int tier, const ProofState* prev = nullptr);

// Throws NotProvable for a false theorem, an unsupported theorem sort or
// when the strategy gets stuck.
void check_supported(const ExerciseSpec& spec);
ProofState derivation(const ExerciseSpec& spec);

}  // namespace induction
