#include "induction/syntax.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"

namespace induction {

using detail::Tok;
using detail::TokenStream;

std::string_view symbol(Connective c) {
  switch (c) {
    case Connective::Neg: return "~";
    case Connective::And: return "/\\";
    case Connective::Or: return "\\/";
    case Connective::Imp: return "->";
  }
  return "?";
}

std::optional<Connective> connective_from_symbol(std::string_view s) {
  if (s == "~") return Connective::Neg;
  if (s == "/\\") return Connective::And;
  if (s == "\\/") return Connective::Or;
  if (s == "->") return Connective::Imp;
  return std::nullopt;
}

std::string case_pattern(Connective c) {
  if (c == Connective::Neg) return "~phi";
  return "phi " + std::string(symbol(c)) + " psi";
}

bool LanguageSpec::has(Connective c) const {
  return std::find(connectives.begin(), connectives.end(), c) != connectives.end();
}

bool LanguageSpec::has_binary() const {
  return std::any_of(connectives.begin(), connectives.end(), [](Connective c) { return arity(c) == 2; });
}

std::vector<Connective> LanguageSpec::binary_connectives() const {
  std::vector<Connective> out;
  for (Connective c : connectives)
    if (arity(c) == 2) out.push_back(c);
  return out;
}

void LanguageSpec::validate() const {
  if (atoms.empty()) throw Error(ErrorCode::InvalidExercise, "language declares no atoms");
  if (connectives.empty()) throw Error(ErrorCode::InvalidExercise, "language declares no connectives");
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    if (is_metavariable_name(a) || is_subst_name(a))
      throw Error(ErrorCode::InvalidExercise, "reserved name used as atom: " + a);
    if (!seen.insert(a).second) throw Error(ErrorCode::InvalidExercise, "duplicate atom: " + a);
  }
  std::set<Connective> cs(connectives.begin(), connectives.end());
  if (cs.size() != connectives.size()) throw Error(ErrorCode::InvalidExercise, "duplicate connective");
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), Connective::Neg, {}}));
}

Formula Formula::meta(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Meta, std::move(name), Connective::Neg, {}}));
}

Formula Formula::subst(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Subst, std::move(name), Connective::Neg, {}}));
}

Formula Formula::neg(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::Neg, {}, Connective::Neg, {std::move(operand)}}));
}

Formula Formula::bin(Connective c, Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(Node{Kind::Bin, {}, c, {std::move(left), std::move(right)}}));
}

std::size_t Formula::size() const {
  switch (kind()) {
    case Kind::Neg: return 1 + operand().size();
    case Kind::Bin: return 1 + left().size() + right().size();
    default: return 0;
  }
}

bool Formula::contains_kind(Kind k) const {
  if (kind() == k) return true;
  for (const auto& ch : node_->children)
    if (ch.contains_kind(k)) return true;
  return false;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Meta:
    case Formula::Kind::Subst: return a.name() == b.name();
    case Formula::Kind::Neg: return a.operand() == b.operand();
    case Formula::Kind::Bin:
      return a.connective() == b.connective() && a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const LanguageSpec& lang, bool allow_subst)
      : ts_(detail::tokenize(text)), lang_(lang), allow_subst_(allow_subst) {}

  Formula parse() {
    Formula f = imp();
    if (!ts_.at(Tok::End)) ts_.fail("unexpected trailing input");
    return f;
  }

 private:
  void check(Connective c, const detail::Token& t) {
    if (!lang_.has(c))
      throw Error(ErrorCode::UnknownConnective,
                  "connective " + std::string(symbol(c)) + " is not in the language (position " + std::to_string(t.pos) + ")",
                  t.pos);
  }

  Formula imp() {
    Formula lhs = disj();
    if (ts_.at(Tok::Imp)) {
      check(Connective::Imp, ts_.next());
      return Formula::bin(Connective::Imp, lhs, imp());
    }
    return lhs;
  }

  Formula disj() {
    Formula lhs = conj();
    while (ts_.at(Tok::Or)) {
      check(Connective::Or, ts_.next());
      lhs = Formula::bin(Connective::Or, lhs, conj());
    }
    return lhs;
  }

  Formula conj() {
    Formula lhs = neg();
    while (ts_.at(Tok::And)) {
      check(Connective::And, ts_.next());
      lhs = Formula::bin(Connective::And, lhs, neg());
    }
    return lhs;
  }

  Formula neg() {
    if (ts_.at(Tok::Tilde)) {
      check(Connective::Neg, ts_.next());
      return Formula::neg(neg());
    }
    if (ts_.accept(Tok::LParen)) {
      Formula f = imp();
      ts_.expect(Tok::RParen);
      return f;
    }
    if (!ts_.at(Tok::Ident)) ts_.fail("expected a formula");
    std::string name = ts_.next().text;
    if (is_metavariable_name(name)) return Formula::meta(name);
    if (allow_subst_ && is_subst_name(name)) return Formula::subst(name);
    return Formula::atom(name);
  }

  TokenStream ts_;
  const LanguageSpec& lang_;
  bool allow_subst_;
};

void print_into(const Formula& f, std::string& out, int min_prec) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Meta:
    case Formula::Kind::Subst: out += f.name(); return;
    case Formula::Kind::Neg:
      out += '~';
      print_into(f.operand(), out, precedence(Connective::Neg));
      return;
    case Formula::Kind::Bin: {
      int p = precedence(f.connective());
      bool paren = p < min_prec;
      if (paren) out += '(';
      // -> associates to the right, /\ and \/ to the left.
      bool right_assoc = f.connective() == Connective::Imp;
      print_into(f.left(), out, right_assoc ? p + 1 : p);
      out += ' ';
      out += symbol(f.connective());
      out += ' ';
      print_into(f.right(), out, right_assoc ? p : p + 1);
      if (paren) out += ')';
      return;
    }
  }
}

void collect_connectives(const Formula& f, std::vector<Connective>& out) {
  if (f.kind() == Formula::Kind::Neg) {
    if (std::find(out.begin(), out.end(), Connective::Neg) == out.end()) out.push_back(Connective::Neg);
    collect_connectives(f.operand(), out);
  } else if (f.kind() == Formula::Kind::Bin) {
    if (std::find(out.begin(), out.end(), f.connective()) == out.end()) out.push_back(f.connective());
    collect_connectives(f.left(), out);
    collect_connectives(f.right(), out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const LanguageSpec& lang, bool allow_subst) {
  return FormulaParser(text, lang, allow_subst).parse();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out, 0);
  return out;
}

Formula substitute(const Formula& tmpl, const std::map<std::string, Formula>& bindings) {
  switch (tmpl.kind()) {
    case Formula::Kind::Atom: return tmpl;
    case Formula::Kind::Meta:
    case Formula::Kind::Subst: {
      auto it = bindings.find(tmpl.name());
      if (it == bindings.end()) throw Error(ErrorCode::UnboundVariable, "unbound variable: " + tmpl.name());
      return it->second;
    }
    case Formula::Kind::Neg: return Formula::neg(substitute(tmpl.operand(), bindings));
    case Formula::Kind::Bin:
      return Formula::bin(tmpl.connective(), substitute(tmpl.left(), bindings), substitute(tmpl.right(), bindings));
  }
  return tmpl;
}

std::vector<Connective> connectives_of(const Formula& f) {
  std::vector<Connective> out;
  collect_connectives(f, out);
  return out;
}

}  // namespace induction
