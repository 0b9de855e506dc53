#include "induction/terms.hpp"

#include <algorithm>
#include <cstdlib>

#include "lexer.hpp"

namespace induction {

using detail::Tok;
using detail::TokenStream;

Expr::Expr() : Expr(num(0)) {}

Expr Expr::make(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr Expr::num(std::int64_t v) { return make({Kind::Num, v, {}, Connective::Neg, {}}); }

Expr Expr::app(std::string fn, Expr arg) { return make({Kind::App, 0, std::move(fn), Connective::Neg, {std::move(arg)}}); }

Expr Expr::atom(std::string name) { return make({Kind::Atom, 0, std::move(name), Connective::Neg, {}}); }

Expr Expr::meta(std::string name) { return make({Kind::Meta, 0, std::move(name), Connective::Neg, {}}); }

Expr Expr::neg(Expr operand) { return make({Kind::Neg, 0, {}, Connective::Neg, {std::move(operand)}}); }

Expr Expr::bin(Connective c, Expr left, Expr right) {
  return make({Kind::Bin, 0, {}, c, {std::move(left), std::move(right)}});
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  flat.reserve(terms.size());
  for (auto& t : terms) {
    if (t.kind() == Kind::Sum)
      flat.insert(flat.end(), t.children().begin(), t.children().end());
    else
      flat.push_back(std::move(t));
  }
  if (flat.empty()) return num(0);
  if (flat.size() == 1) return flat.front();
  return make({Kind::Sum, 0, {}, Connective::Neg, std::move(flat)});
}

Expr Expr::scale(std::int64_t k, Expr e) {
  if (k == 1) return e;
  if (e.kind() == Kind::Scale) return scale(k * e.value(), e.child(0));
  return make({Kind::Scale, k, {}, Connective::Neg, {std::move(e)}});
}

Expr Expr::min(Expr a, Expr b) { return make({Kind::Min, 0, {}, Connective::Neg, {std::move(a), std::move(b)}}); }

Expr Expr::max(Expr a, Expr b) { return make({Kind::Max, 0, {}, Connective::Neg, {std::move(a), std::move(b)}}); }

Expr Expr::negate(Expr e) {
  if (e.kind() == Kind::Num) return num(-e.value());
  if (e.kind() == Kind::Scale) return scale(-e.value(), e.child(0));
  return scale(-1, std::move(e));
}

Expr Expr::from_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return atom(f.name());
    case Formula::Kind::Meta: return meta(f.name());
    case Formula::Kind::Subst: throw Error(ErrorCode::UnboundVariable, "template placeholder in expression: " + f.name());
    case Formula::Kind::Neg: return neg(from_formula(f.operand()));
    case Formula::Kind::Bin: return bin(f.connective(), from_formula(f.left()), from_formula(f.right()));
  }
  throw Error(ErrorCode::Syntax, "bad formula");
}

std::optional<Formula> Expr::to_formula() const {
  switch (kind()) {
    case Kind::Atom: return Formula::atom(name());
    case Kind::Meta: return Formula::meta(name());
    case Kind::Neg: {
      auto o = child(0).to_formula();
      if (!o) return std::nullopt;
      return Formula::neg(*o);
    }
    case Kind::Bin: {
      auto l = child(0).to_formula();
      auto r = child(1).to_formula();
      if (!l || !r) return std::nullopt;
      return Formula::bin(connective(), *l, *r);
    }
    default: return std::nullopt;
  }
}

bool Expr::is_formula_shaped() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Meta:
    case Kind::Neg:
    case Kind::Bin: return true;
    default: return false;
  }
}

bool Expr::contains_meta() const {
  if (kind() == Kind::Meta) return true;
  return std::any_of(children().begin(), children().end(), [](const Expr& c) { return c.contains_meta(); });
}

bool Expr::contains_atom() const {
  if (kind() == Kind::Atom) return true;
  return std::any_of(children().begin(), children().end(), [](const Expr& c) { return c.contains_atom(); });
}

Expr Expr::with_children(std::vector<Expr> children) const {
  switch (kind()) {
    case Kind::Num:
    case Kind::Atom:
    case Kind::Meta: return *this;
    case Kind::App: return app(name(), std::move(children[0]));
    case Kind::Neg: return neg(std::move(children[0]));
    case Kind::Bin: return bin(connective(), std::move(children[0]), std::move(children[1]));
    case Kind::Sum: return sum(std::move(children));
    case Kind::Scale: return scale(value(), std::move(children[0]));
    case Kind::Min: return min(std::move(children[0]), std::move(children[1]));
    case Kind::Max: return max(std::move(children[0]), std::move(children[1]));
  }
  return *this;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.value() != b.value() || a.name() != b.name()) return false;
  if (a.kind() == Expr::Kind::Bin && a.connective() != b.connective()) return false;
  auto ca = a.children();
  auto cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::vector<detail::Token> toks) : ts_(std::move(toks)) {}

  Expr parse_all() {
    Expr e = imp();
    if (!ts_.at(Tok::End)) ts_.fail("unexpected trailing input");
    return e;
  }

  Expr imp() {
    Expr lhs = disj();
    if (ts_.accept(Tok::Imp)) return Expr::bin(Connective::Imp, lhs, imp());
    return lhs;
  }

  TokenStream& stream() { return ts_; }

 private:
  Expr disj() {
    Expr lhs = conj();
    while (ts_.accept(Tok::Or)) lhs = Expr::bin(Connective::Or, lhs, conj());
    return lhs;
  }

  Expr conj() {
    Expr lhs = fneg();
    while (ts_.accept(Tok::And)) lhs = Expr::bin(Connective::And, lhs, fneg());
    return lhs;
  }

  Expr fneg() {
    if (ts_.accept(Tok::Tilde)) return Expr::neg(fneg());
    return arith();
  }

  Expr arith() {
    std::vector<Expr> items{term()};
    for (;;) {
      if (ts_.accept(Tok::Plus))
        items.push_back(term());
      else if (ts_.accept(Tok::Minus))
        items.push_back(Expr::negate(term()));
      else
        break;
    }
    return items.size() == 1 ? items.front() : Expr::sum(std::move(items));
  }

  Expr term() {
    Expr lhs = unary();
    while (ts_.at(Tok::Star)) {
      auto star = ts_.next();
      Expr rhs = unary();
      if (lhs.kind() == Expr::Kind::Num)
        lhs = Expr::scale(lhs.value(), rhs);
      else if (rhs.kind() == Expr::Kind::Num)
        lhs = Expr::scale(rhs.value(), lhs);
      else
        throw Error(ErrorCode::Syntax,
                    "multiplication needs a numeric constant operand (position " + std::to_string(star.pos) + ")",
                    star.pos);
    }
    return lhs;
  }

  Expr unary() {
    if (ts_.accept(Tok::Minus)) return Expr::negate(unary());
    return primary();
  }

  Expr primary() {
    if (ts_.at(Tok::Int)) {
      auto t = ts_.next();
      return Expr::num(std::stoll(t.text));
    }
    if (ts_.accept(Tok::LParen)) {
      Expr e = imp();
      ts_.expect(Tok::RParen);
      return e;
    }
    if (!ts_.at(Tok::Ident)) ts_.fail("expected an expression");
    std::string name = ts_.next().text;
    if (ts_.accept(Tok::LParen)) {
      Expr a = imp();
      if (name == "min" || name == "max") {
        ts_.expect(Tok::Comma);
        Expr b = imp();
        ts_.expect(Tok::RParen);
        return name == "min" ? Expr::min(a, b) : Expr::max(a, b);
      }
      ts_.expect(Tok::RParen);
      return Expr::app(name, a);
    }
    if (is_metavariable_name(name)) return Expr::meta(name);
    return Expr::atom(name);
  }

  TokenStream ts_;
};

constexpr int kPrecSum = 5;
constexpr int kPrecScale = 6;
constexpr int kPrecUnary = 7;
constexpr int kPrecPrimary = 9;

int prec_of(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Num: return e.value() < 0 ? kPrecUnary : kPrecPrimary;
    case Expr::Kind::Neg: return precedence(Connective::Neg);
    case Expr::Kind::Bin: return precedence(e.connective());
    case Expr::Kind::Sum: return kPrecSum;
    case Expr::Kind::Scale: return kPrecScale;
    default: return kPrecPrimary;
  }
}

void print_into(const Expr& e, std::string& out, int min_prec) {
  bool paren = prec_of(e) < min_prec;
  if (paren) out += '(';
  switch (e.kind()) {
    case Expr::Kind::Num: out += std::to_string(e.value()); break;
    case Expr::Kind::Atom:
    case Expr::Kind::Meta: out += e.name(); break;
    case Expr::Kind::App:
      out += e.name();
      out += '(';
      print_into(e.child(0), out, 0);
      out += ')';
      break;
    case Expr::Kind::Min:
    case Expr::Kind::Max:
      out += e.kind() == Expr::Kind::Min ? "min(" : "max(";
      print_into(e.child(0), out, 0);
      out += ", ";
      print_into(e.child(1), out, 0);
      out += ')';
      break;
    case Expr::Kind::Neg:
      out += '~';
      print_into(e.child(0), out, precedence(Connective::Neg));
      break;
    case Expr::Kind::Bin: {
      int p = precedence(e.connective());
      bool right_assoc = e.connective() == Connective::Imp;
      print_into(e.child(0), out, right_assoc ? p + 1 : p);
      out += ' ';
      out += symbol(e.connective());
      out += ' ';
      print_into(e.child(1), out, right_assoc ? p : p + 1);
      break;
    }
    case Expr::Kind::Scale: {
      const Expr& inner = e.child(0);
      if (e.value() == -1 && inner.kind() != Expr::Kind::Num)
        out += '-';
      else
        out += std::to_string(e.value()) + "*";
      print_into(inner, out, kPrecPrimary - 1);
      break;
    }
    case Expr::Kind::Sum: {
      bool first = true;
      for (const Expr& t : e.children()) {
        if (first) {
          print_into(t, out, kPrecScale);
          first = false;
          continue;
        }
        if (t.kind() == Expr::Kind::Num && t.value() < 0) {
          out += " - " + std::to_string(-t.value());
        } else if (t.kind() == Expr::Kind::Scale && t.value() < 0) {
          out += " - ";
          print_into(Expr::negate(t), out, kPrecScale);
        } else {
          out += " + ";
          print_into(t, out, kPrecScale);
        }
      }
      break;
    }
  }
  if (paren) out += ')';
}

void collect_functions(const Expr& e, std::vector<std::string>& out) {
  if (e.kind() == Expr::Kind::App && std::find(out.begin(), out.end(), e.name()) == out.end()) out.push_back(e.name());
  for (const Expr& c : e.children()) collect_functions(c, out);
}

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(detail::tokenize(text)).parse_all(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, out, 0);
  return out;
}

Expr instantiate(const Expr& e, const std::map<std::string, Expr>& bindings) {
  if (e.kind() == Expr::Kind::Meta) {
    auto it = bindings.find(e.name());
    return it == bindings.end() ? e : it->second;
  }
  if (e.children().empty()) return e;
  std::vector<Expr> ch;
  ch.reserve(e.children().size());
  for (const Expr& c : e.children()) ch.push_back(instantiate(c, bindings));
  return e.with_children(std::move(ch));
}

std::vector<std::string> functions_of(const Expr& e) {
  std::vector<std::string> out;
  collect_functions(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Comparators

std::string_view symbol(Comparator c) {
  switch (c) {
    case Comparator::Eq: return "=";
    case Comparator::Lt: return "<";
    case Comparator::Le: return "<=";
    case Comparator::Gt: return ">";
    case Comparator::Ge: return ">=";
  }
  return "?";
}

std::optional<Comparator> parse_comparator(std::string_view s) {
  for (Comparator c : kAllComparators)
    if (symbol(c) == s) return c;
  return std::nullopt;
}

bool holds(Comparator c, std::int64_t lhs, std::int64_t rhs) {
  switch (c) {
    case Comparator::Eq: return lhs == rhs;
    case Comparator::Lt: return lhs < rhs;
    case Comparator::Le: return lhs <= rhs;
    case Comparator::Gt: return lhs > rhs;
    case Comparator::Ge: return lhs >= rhs;
  }
  return false;
}

Comparator flip(Comparator c) {
  switch (c) {
    case Comparator::Lt: return Comparator::Gt;
    case Comparator::Le: return Comparator::Ge;
    case Comparator::Gt: return Comparator::Lt;
    case Comparator::Ge: return Comparator::Le;
    default: return c;
  }
}

namespace {
bool ascending(Comparator c) { return c == Comparator::Lt || c == Comparator::Le; }
bool descending(Comparator c) { return c == Comparator::Gt || c == Comparator::Ge; }
bool strict(Comparator c) { return c == Comparator::Lt || c == Comparator::Gt; }
}  // namespace

std::optional<Comparator> try_compose(Comparator r1, Comparator r2) {
  if (r1 == Comparator::Eq) return r2;
  if (r2 == Comparator::Eq) return r1;
  if (ascending(r1) && ascending(r2)) return strict(r1) || strict(r2) ? Comparator::Lt : Comparator::Le;
  if (descending(r1) && descending(r2)) return strict(r1) || strict(r2) ? Comparator::Gt : Comparator::Ge;
  return std::nullopt;
}

Comparator compose_comparators(Comparator r1, Comparator r2) {
  auto r = try_compose(r1, r2);
  if (!r)
    throw Error(ErrorCode::IncomparableDirections, "cannot compose " + std::string(symbol(r1)) + " with " +
                                                       std::string(symbol(r2)));
  return *r;
}

std::optional<Comparator> fold_comparators(std::span<const Comparator> chain) {
  Comparator acc = Comparator::Eq;
  for (Comparator c : chain) {
    auto next = try_compose(acc, c);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

bool comparator_implies(Comparator proved, Comparator goal) {
  if (proved == goal) return true;
  switch (proved) {
    case Comparator::Eq: return goal == Comparator::Le || goal == Comparator::Ge;
    case Comparator::Lt: return goal == Comparator::Le;
    case Comparator::Gt: return goal == Comparator::Ge;
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Linear forms

LinearForm LinearForm::term(const Expr& atomic) {
  LinearForm f;
  f.add_term(print_expr(atomic), 1, atomic);
  return f;
}

std::int64_t LinearForm::coefficient(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second.coefficient;
}

void LinearForm::add_term(const std::string& key, std::int64_t k, const Expr& e) {
  if (k == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, Term{0, e});
  it->second.coefficient += k;
  if (it->second.coefficient == 0) terms_.erase(it);
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [k, t] : o.terms_) add_term(k, t.coefficient, t.expr);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += o.scaled(-1); }

LinearForm LinearForm::scaled(std::int64_t k) const {
  LinearForm f;
  if (k == 0) return f;
  f.constant_ = constant_ * k;
  for (const auto& [key, t] : terms_) f.terms_.emplace(key, Term{t.coefficient * k, t.expr});
  return f;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  if (a.constant_ != b.constant_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.coefficient != ib->second.coefficient) return false;
  return true;
}

std::string LinearForm::to_string() const { return print_expr(to_expr()); }

Expr LinearForm::to_expr() const {
  std::vector<Expr> items;
  for (const auto& [key, t] : terms_) items.push_back(Expr::scale(t.coefficient, t.expr));
  if (constant_ != 0 || items.empty()) items.push_back(Expr::num(constant_));
  return Expr::sum(std::move(items));
}

LinearForm normalize(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Num: return LinearForm(e.value());
    case Expr::Kind::App: return LinearForm::term(e);
    case Expr::Kind::Sum: {
      LinearForm acc;
      for (const Expr& c : e.children()) acc += normalize(c);
      return acc;
    }
    case Expr::Kind::Scale: return normalize(e.child(0)).scaled(e.value());
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      LinearForm a = normalize(e.child(0));
      LinearForm b = normalize(e.child(1));
      bool is_min = e.kind() == Expr::Kind::Min;
      if (a.is_ground() && b.is_ground())
        return LinearForm(is_min ? std::min(a.constant(), b.constant()) : std::max(a.constant(), b.constant()));
      if (a == b) return a;
      Expr ea = a.to_expr();
      Expr eb = b.to_expr();
      if (print_expr(eb) < print_expr(ea)) std::swap(ea, eb);
      return LinearForm::term(is_min ? Expr::min(ea, eb) : Expr::max(ea, eb));
    }
    default:
      throw Error(ErrorCode::NotLinear, "formula in numeric position: " + print_expr(e));
  }
}

bool calculation_equal(const Expr& a, const Expr& b) {
  if (a == b) return true;
  try {
    return normalize(a) == normalize(b);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NotLinear) throw;
    return false;
  }
}

bool decide_ground_comparison(const LinearForm& lhs, const LinearForm& rhs, Comparator comp) {
  if (!lhs.is_ground() || !rhs.is_ground())
    throw Error(ErrorCode::NotGround, "comparison of non-ground forms: " + lhs.to_string() + " vs " + rhs.to_string());
  return holds(comp, lhs.constant(), rhs.constant());
}

std::optional<Comparator> arithmetic_relation(const LinearForm& upper, const LinearForm& lower) {
  LinearForm d = lower - upper;
  if (d.is_zero()) return Comparator::Eq;
  bool nonneg = true, nonpos = true;
  for (const auto& [k, t] : d.terms()) {
    if (t.coefficient < 0) nonneg = false;
    if (t.coefficient > 0) nonpos = false;
  }
  if (nonneg && d.constant() > 0) return Comparator::Lt;
  if (nonneg && d.constant() >= 0) return Comparator::Le;
  if (nonpos && d.constant() < 0) return Comparator::Gt;
  if (nonpos && d.constant() <= 0) return Comparator::Ge;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Statements

Statement parse_statement(std::string_view text) {
  auto toks = detail::tokenize(text);
  int depth = 0;
  std::optional<std::size_t> split;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const auto& t = toks[i];
    if (t.kind == Tok::LParen) ++depth;
    if (t.kind == Tok::RParen) --depth;
    bool is_cmp = t.kind == Tok::Eq || t.kind == Tok::Lt || t.kind == Tok::Le || t.kind == Tok::Gt || t.kind == Tok::Ge;
    if (is_cmp && depth == 0) {
      if (split) throw Error(ErrorCode::Syntax, "more than one comparator at position " + std::to_string(t.pos), t.pos);
      split = i;
    }
  }
  if (!split) throw Error(ErrorCode::Syntax, "statement needs a comparator", text.size());
  const auto& cmp_tok = toks[*split];
  std::string_view lhs_text = text.substr(0, cmp_tok.pos);
  std::string_view rhs_text = text.substr(cmp_tok.pos + cmp_tok.text.size());
  Expr lhs = parse_expr(lhs_text);
  Expr rhs = [&] {
    try {
      return parse_expr(rhs_text);
    } catch (const Error& e) {
      std::size_t off = cmp_tok.pos + cmp_tok.text.size();
      throw Error(e.code(), e.what(), e.where() == Error::npos ? e.where() : e.where() + off);
    }
  }();
  return Statement{lhs, *parse_comparator(cmp_tok.text), rhs};
}

std::string print_statement(const Statement& s) {
  return print_expr(s.lhs) + " " + std::string(symbol(s.comparator)) + " " + print_expr(s.rhs);
}

Statement instantiate(const Statement& s, const std::map<std::string, Expr>& bindings) {
  return Statement{instantiate(s.lhs, bindings), s.comparator, instantiate(s.rhs, bindings)};
}

}  // namespace induction
