#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "induction/syntax.hpp"
#include "induction/terms.hpp"

namespace induction {

// count(p) = c, count(~phi) = a + b*count(phi),
// count(phi # psi) = a + b*count(phi) + c*count(psi).
struct CountingFunction {
  struct NegCase {
    std::int64_t a = 0, b = 0;
    friend bool operator==(const NegCase&, const NegCase&) = default;
  };
  struct BinCase {
    std::int64_t a = 0, b = 0, c = 0;
    friend bool operator==(const BinCase&, const BinCase&) = default;
  };

  std::string name;
  std::int64_t atom_value = 0;
  std::map<std::string, std::int64_t> atom_values;  // per-atom overrides
  std::optional<NegCase> neg;
  std::map<Connective, BinCase> binary;

  std::int64_t value_at(const std::string& atom) const;
  bool covers(Connective c) const;

  friend bool operator==(const CountingFunction&, const CountingFunction&) = default;
};

// Acceptable transform: every case substitutes the recursive results into a
// fixed template. The atom template is over `s` (bound to the atom itself),
// the negation template over `s`, binary templates over `s1` and `s2`.
struct TransformFunction {
  std::string name;
  LanguageSpec domain;
  LanguageSpec codomain;
  Formula atom_template = Formula::subst("s");
  std::map<std::string, Formula> atom_overrides;
  std::optional<Formula> neg_template;
  std::map<Connective, Formula> binary_templates;

  const Formula& atom_case(const std::string& atom) const;
  bool covers(Connective c) const;

  friend bool operator==(const TransformFunction&, const TransformFunction&) = default;
};

// V(atom) comp W(atom) or V(atom) comp value; atom empty means every atom.
struct ValuationProperty {
  std::optional<std::string> atom;
  Comparator comparator = Comparator::Eq;
  std::optional<std::string> other;
  std::int64_t value = 0;

  bool applies_to(const std::string& a) const { return !atom || *atom == a; }
  friend bool operator==(const ValuationProperty&, const ValuationProperty&) = default;
};

struct Valuation {
  std::string name;
  std::vector<ValuationProperty> properties;

  // Value fixed by an equality property with a constant, if any.
  std::optional<std::int64_t> fixed_value(const std::string& atom) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

using FunctionDef = std::variant<CountingFunction, TransformFunction, Valuation>;

const std::string& name_of(const FunctionDef& def);

enum class Sort { Number, Truth, Formula };
std::string_view to_string(Sort s);

class FunctionTable {
 public:
  FunctionTable() = default;
  explicit FunctionTable(std::vector<FunctionDef> defs);

  // Throws InvalidExercise on a duplicate or reserved name.
  void add(FunctionDef def);

  const std::vector<FunctionDef>& defs() const { return defs_; }
  const FunctionDef* find(const std::string& name) const;
  const CountingFunction* counting(const std::string& name) const;
  const TransformFunction* transform(const std::string& name) const;
  const Valuation* valuation(const std::string& name) const;
  // Throws UnknownFunction.
  const FunctionDef& at(const std::string& name) const;
  Sort result_sort(const std::string& name) const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  std::vector<FunctionDef> defs_;
};

// Truth assignment per valuation name and atom.
using Assignment = std::map<std::string, std::map<std::string, std::int64_t>>;

std::int64_t eval_counting(const CountingFunction& f, const Formula& phi);
Formula eval_transform(const TransformFunction& g, const Formula& phi);
std::int64_t eval_valuation(const Valuation& v, const std::map<std::string, std::int64_t>& atoms, const Formula& phi);

// Whether the atom-level properties hold for `assignment` over `atoms`.
bool assignment_satisfies(const FunctionTable& table, const Assignment& assignment,
                          const std::vector<std::string>& atoms);

struct Environment {
  std::map<std::string, Formula> metas;
  Assignment assignment;
};

using Value = std::variant<std::int64_t, Formula>;

// Concrete evaluation of a proof expression under an environment. Throws
// UnboundVariable for a free metavariable, UnknownFunction, MissingCase,
// UnassignedAtom.
Value evaluate(const Expr& e, const FunctionTable& table, const Environment& env);
std::int64_t evaluate_number(const Expr& e, const FunctionTable& table, const Environment& env);

// Position of a subexpression as the sequence of child indices from the root.
using Path = std::vector<std::size_t>;

const Expr& subterm(const Expr& e, const Path& path);
Expr replace_subterm(const Expr& e, const Path& path, const Expr& replacement);

struct Redex {
  Path path;
  std::string function;
};

// An application f(X) whose argument X is an atom, a negation or a binary
// node and for which f has a matching case. Valuations of atoms are redexes
// only when a property fixes their value.
bool is_redex(const FunctionTable& table, const Expr& e);
// All redexes in pre-order, so the outermost-leftmost one comes first.
std::vector<Redex> find_redexes(const FunctionTable& table, const Expr& e);

// Rewrites one redex with its defining case. Throws NoRedex.
Expr unfold_redex(const FunctionTable& table, const Expr& app);
// The outermost-leftmost redex of `function`. Throws NoRedex.
Expr unfold_step(const FunctionTable& table, const std::string& function, const Expr& e);
// Every redex of `function`, repeatedly, until none is left.
Expr unfold_all(const FunctionTable& table, const std::string& function, const Expr& e);
// Every redex of every function, repeatedly.
Expr unfold_full(const FunctionTable& table, const Expr& e);

// Instance of a transform template with placeholders bound to expressions.
Expr instantiate_template(const Formula& tmpl, const std::map<std::string, Expr>& bindings);

// Fully unfolds `e` and normalizes it. For e = f(g(phi # psi)) this yields
// a + b*f(g(phi)) + c*f(g(psi)).
LinearForm induced_form(const FunctionTable& table, const Expr& e);

}  // namespace induction
