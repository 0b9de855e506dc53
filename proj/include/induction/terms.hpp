#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "induction/syntax.hpp"

namespace induction {

// Symbolic proof expression. Three sorts share one tree: numbers (Num, Sum,
// Scale, Min, Max and applications of counting functions or valuations),
// truth values (embedded as the numbers 0/1) and formulas (Atom, Meta, Neg,
// Bin and applications of transforms). Immutable; copies share structure.
//
// The factories keep a light canonical shape: sums are flat and never
// singleton, Scale(1, x) is x and nested scales are merged.
class Expr {
 public:
  enum class Kind { Num, App, Atom, Meta, Neg, Bin, Sum, Scale, Min, Max };

  // The number 0.
  Expr();

  static Expr num(std::int64_t v);
  static Expr app(std::string fn, Expr arg);
  static Expr atom(std::string name);
  static Expr meta(std::string name);
  static Expr neg(Expr operand);
  static Expr bin(Connective c, Expr left, Expr right);
  static Expr sum(std::vector<Expr> terms);
  static Expr scale(std::int64_t k, Expr e);
  static Expr min(Expr a, Expr b);
  static Expr max(Expr a, Expr b);
  static Expr negate(Expr e);

  // Subst leaves are rejected: templates never leak into proof expressions.
  static Expr from_formula(const Formula& f);
  // Defined when the expression is formula-shaped without applications.
  std::optional<Formula> to_formula() const;

  Kind kind() const { return node_->kind; }
  // Num value or Scale coefficient.
  std::int64_t value() const { return node_->value; }
  // Function name for App; leaf name for Atom and Meta.
  const std::string& name() const { return node_->name; }
  Connective connective() const { return node_->connective; }
  std::span<const Expr> children() const { return node_->children; }
  const Expr& child(std::size_t i) const { return node_->children[i]; }

  bool is_formula_shaped() const;
  bool is_ground_number() const { return kind() == Kind::Num; }
  bool contains_meta() const;
  bool contains_atom() const;

  Expr with_children(std::vector<Expr> children) const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::int64_t value = 0;
    std::string name;
    Connective connective = Connective::Neg;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Node n);
  std::shared_ptr<const Node> node_;
};

// Concrete syntax: integers, applications f(g(phi)), min(a, b), max(a, b),
// + - and scalar *, plus the formula connectives. Bare identifiers are atoms
// except phi/psi. Throws Error(Syntax, pos).
Expr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

// Replaces every Meta leaf named in `bindings`.
Expr instantiate(const Expr& e, const std::map<std::string, Expr>& bindings);

// All function names occurring in applications, outermost first.
std::vector<std::string> functions_of(const Expr& e);

enum class Comparator { Eq, Lt, Le, Gt, Ge };

std::string_view symbol(Comparator c);
std::optional<Comparator> parse_comparator(std::string_view s);
inline constexpr Comparator kAllComparators[] = {Comparator::Eq, Comparator::Lt, Comparator::Le, Comparator::Gt,
                                                 Comparator::Ge};

bool holds(Comparator c, std::int64_t lhs, std::int64_t rhs);
// Relation after multiplying both sides by a negative number.
Comparator flip(Comparator c);

// Transitive composition of x r1 y and y r2 z. Throws IncomparableDirections
// when an ascending and a descending relation meet.
Comparator compose_comparators(Comparator r1, Comparator r2);
std::optional<Comparator> try_compose(Comparator r1, Comparator r2);
// Folds a chain left to right; an empty chain is Eq.
std::optional<Comparator> fold_comparators(std::span<const Comparator> chain);

// Whether x proved y implies x goal y for all numbers x, y.
bool comparator_implies(Comparator proved, Comparator goal);

// Canonical linear normal form over atomic symbolic terms.
class LinearForm {
 public:
  struct Term {
    std::int64_t coefficient;
    Expr expr;
  };

  LinearForm() = default;
  explicit LinearForm(std::int64_t constant) : constant_(constant) {}
  static LinearForm term(const Expr& atomic);

  std::int64_t constant() const { return constant_; }
  // Keyed by canonical printed form; zero coefficients are never stored.
  const std::map<std::string, Term>& terms() const { return terms_; }
  std::int64_t coefficient(const std::string& key) const;
  bool is_ground() const { return terms_.empty(); }
  bool is_zero() const { return constant_ == 0 && terms_.empty(); }

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm scaled(std::int64_t k) const;
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend bool operator==(const LinearForm& a, const LinearForm& b);

  // Terms in key order with the constant last, e.g. "bin(phi) + bin(psi) + 2".
  std::string to_string() const;
  Expr to_expr() const;

 private:
  void add_term(const std::string& key, std::int64_t k, const Expr& e);
  std::int64_t constant_ = 0;
  std::map<std::string, Term> terms_;
};

// Flattens sums and scales, folds constants and collects terms. Applications
// are atomic terms; min/max fold when both sides are ground, otherwise they
// become atomic terms over normalized arguments. Throws NotLinear on
// formula-shaped nodes in numeric position.
LinearForm normalize(const Expr& e);

// Normal-form equality for numeric expressions; structural equality otherwise.
bool calculation_equal(const Expr& a, const Expr& b);

// Integer comparison of two ground forms. Throws NotGround.
bool decide_ground_comparison(const LinearForm& lhs, const LinearForm& rhs, Comparator comp);

// Strongest relation upper R lower that follows from arithmetic alone, given
// that every symbolic term denotes a natural number.
std::optional<Comparator> arithmetic_relation(const LinearForm& upper, const LinearForm& lower);

// lhs comp rhs over the metavariable phi (theorems, induction hypotheses).
struct Statement {
  Expr lhs;
  Comparator comparator;
  Expr rhs;

  friend bool operator==(const Statement&, const Statement&) = default;
};

Statement parse_statement(std::string_view text);
std::string print_statement(const Statement& s);
Statement instantiate(const Statement& s, const std::map<std::string, Expr>& bindings);

}  // namespace induction
