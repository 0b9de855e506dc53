#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "induction/error.hpp"

namespace induction {

enum class Connective { Neg, And, Or, Imp };

constexpr int arity(Connective c) { return c == Connective::Neg ? 1 : 2; }

// Binding strength: ~ > /\ > \/ > ->.
constexpr int precedence(Connective c) {
  switch (c) {
    case Connective::Neg: return 4;
    case Connective::And: return 3;
    case Connective::Or: return 2;
    case Connective::Imp: return 1;
  }
  return 0;
}

std::string_view symbol(Connective c);
std::optional<Connective> connective_from_symbol(std::string_view s);

// Human-readable case name ("phi /\ psi", "~phi").
std::string case_pattern(Connective c);

struct LanguageSpec {
  std::vector<std::string> atoms;
  std::vector<Connective> connectives;

  bool has(Connective c) const;
  bool has_binary() const;
  std::vector<Connective> binary_connectives() const;

  // Throws InvalidExercise when atoms are empty or duplicated, or no
  // connectives are declared.
  void validate() const;

  friend bool operator==(const LanguageSpec&, const LanguageSpec&) = default;
};

inline const std::string kPhi = "phi";
inline const std::string kPsi = "psi";

inline bool is_metavariable_name(std::string_view s) { return s == kPhi || s == kPsi; }
// Template placeholders of transform definitions.
inline bool is_subst_name(std::string_view s) { return s == "s" || s == "s1" || s == "s2"; }

// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Meta, Subst, Neg, Bin };

  static Formula atom(std::string name);
  static Formula meta(std::string name);
  static Formula subst(std::string name);
  static Formula neg(Formula operand);
  static Formula bin(Connective c, Formula left, Formula right);

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->kind == Kind::Atom || node_->kind == Kind::Meta || node_->kind == Kind::Subst; }
  const std::string& name() const { return node_->name; }
  // Neg for negations; the binary connective otherwise. Undefined for leaves.
  Connective connective() const { return node_->connective; }
  const Formula& operand() const { return node_->children[0]; }
  const Formula& left() const { return node_->children[0]; }
  const Formula& right() const { return node_->children[1]; }

  // Number of connective occurrences.
  std::size_t size() const;
  bool contains_kind(Kind k) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    Connective connective = Connective::Neg;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Parses the ASCII formula grammar. Identifiers phi/psi become metavariables;
// with `allow_subst`, s/s1/s2 become template placeholders.
Formula parse_formula(std::string_view text, const LanguageSpec& lang, bool allow_subst = false);

std::string print_formula(const Formula& f);

// Simultaneous replacement of Meta and Subst leaves by name.
Formula substitute(const Formula& tmpl, const std::map<std::string, Formula>& bindings);

// Connectives occurring in f.
std::vector<Connective> connectives_of(const Formula& f);

}  // namespace induction
