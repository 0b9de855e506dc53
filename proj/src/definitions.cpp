#include "induction/definitions.hpp"

#include <algorithm>

namespace induction {

std::int64_t CountingFunction::value_at(const std::string& atom) const {
  auto it = atom_values.find(atom);
  return it == atom_values.end() ? atom_value : it->second;
}

bool CountingFunction::covers(Connective c) const {
  return c == Connective::Neg ? neg.has_value() : binary.count(c) > 0;
}

const Formula& TransformFunction::atom_case(const std::string& atom) const {
  auto it = atom_overrides.find(atom);
  return it == atom_overrides.end() ? atom_template : it->second;
}

bool TransformFunction::covers(Connective c) const {
  return c == Connective::Neg ? neg_template.has_value() : binary_templates.count(c) > 0;
}

std::optional<std::int64_t> Valuation::fixed_value(const std::string& atom) const {
  for (const auto& p : properties)
    if (p.applies_to(atom) && p.comparator == Comparator::Eq && !p.other) return p.value;
  return std::nullopt;
}

const std::string& name_of(const FunctionDef& def) {
  return std::visit([](const auto& d) -> const std::string& { return d.name; }, def);
}

std::string_view to_string(Sort s) {
  switch (s) {
    case Sort::Number: return "number";
    case Sort::Truth: return "truth";
    case Sort::Formula: return "formula";
  }
  return "?";
}

FunctionTable::FunctionTable(std::vector<FunctionDef> defs) {
  for (auto& d : defs) add(std::move(d));
}

void FunctionTable::add(FunctionDef def) {
  const std::string& n = name_of(def);
  if (n.empty() || n == "min" || n == "max" || is_metavariable_name(n) || is_subst_name(n))
    throw Error(ErrorCode::InvalidExercise, "reserved or empty function name: '" + n + "'");
  if (find(n)) throw Error(ErrorCode::InvalidExercise, "duplicate function: " + n);
  defs_.push_back(std::move(def));
}

const FunctionDef* FunctionTable::find(const std::string& name) const {
  for (const auto& d : defs_)
    if (name_of(d) == name) return &d;
  return nullptr;
}

const CountingFunction* FunctionTable::counting(const std::string& name) const {
  const FunctionDef* d = find(name);
  return d ? std::get_if<CountingFunction>(d) : nullptr;
}

const TransformFunction* FunctionTable::transform(const std::string& name) const {
  const FunctionDef* d = find(name);
  return d ? std::get_if<TransformFunction>(d) : nullptr;
}

const Valuation* FunctionTable::valuation(const std::string& name) const {
  const FunctionDef* d = find(name);
  return d ? std::get_if<Valuation>(d) : nullptr;
}

const FunctionDef& FunctionTable::at(const std::string& name) const {
  const FunctionDef* d = find(name);
  if (!d) throw Error(ErrorCode::UnknownFunction, "unknown function: " + name);
  return *d;
}

Sort FunctionTable::result_sort(const std::string& name) const {
  const FunctionDef& d = at(name);
  if (std::holds_alternative<CountingFunction>(d)) return Sort::Number;
  if (std::holds_alternative<Valuation>(d)) return Sort::Truth;
  return Sort::Formula;
}

namespace {

[[noreturn]] void missing_case(const std::string& fn, Connective c) {
  throw Error(ErrorCode::MissingCase, "function " + fn + " has no case for " + case_pattern(c));
}

[[noreturn]] void unbound(const Formula& f) {
  throw Error(ErrorCode::UnboundVariable, "cannot evaluate a schematic formula: " + f.name());
}

}  // namespace

std::int64_t eval_counting(const CountingFunction& f, const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::Atom: return f.value_at(phi.name());
    case Formula::Kind::Neg:
      if (!f.neg) missing_case(f.name, Connective::Neg);
      return f.neg->a + f.neg->b * eval_counting(f, phi.operand());
    case Formula::Kind::Bin: {
      auto it = f.binary.find(phi.connective());
      if (it == f.binary.end()) missing_case(f.name, phi.connective());
      const auto& k = it->second;
      return k.a + k.b * eval_counting(f, phi.left()) + k.c * eval_counting(f, phi.right());
    }
    default: unbound(phi);
  }
}

Formula eval_transform(const TransformFunction& g, const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::Atom: return substitute(g.atom_case(phi.name()), {{"s", phi}});
    case Formula::Kind::Neg:
      if (!g.neg_template) missing_case(g.name, Connective::Neg);
      return substitute(*g.neg_template, {{"s", eval_transform(g, phi.operand())}});
    case Formula::Kind::Bin: {
      auto it = g.binary_templates.find(phi.connective());
      if (it == g.binary_templates.end()) missing_case(g.name, phi.connective());
      return substitute(it->second, {{"s1", eval_transform(g, phi.left())}, {"s2", eval_transform(g, phi.right())}});
    }
    default: unbound(phi);
  }
}

std::int64_t eval_valuation(const Valuation& v, const std::map<std::string, std::int64_t>& atoms, const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::Atom: {
      auto it = atoms.find(phi.name());
      if (it == atoms.end())
        throw Error(ErrorCode::UnassignedAtom, "valuation " + v.name + " assigns no value to " + phi.name());
      return it->second;
    }
    case Formula::Kind::Neg: return 1 - eval_valuation(v, atoms, phi.operand());
    case Formula::Kind::Bin: {
      std::int64_t l = eval_valuation(v, atoms, phi.left());
      std::int64_t r = eval_valuation(v, atoms, phi.right());
      switch (phi.connective()) {
        case Connective::And: return std::min(l, r);
        case Connective::Or: return std::max(l, r);
        case Connective::Imp: return std::max(1 - l, r);
        default: break;
      }
      break;
    }
    default: unbound(phi);
  }
  throw Error(ErrorCode::MissingCase, "bad connective");
}

bool assignment_satisfies(const FunctionTable& table, const Assignment& assignment,
                          const std::vector<std::string>& atoms) {
  auto lookup = [&](const std::string& v, const std::string& a) -> std::optional<std::int64_t> {
    auto iv = assignment.find(v);
    if (iv == assignment.end()) return std::nullopt;
    auto ia = iv->second.find(a);
    if (ia == iv->second.end()) return std::nullopt;
    return ia->second;
  };
  for (const auto& def : table.defs()) {
    const auto* v = std::get_if<Valuation>(&def);
    if (!v) continue;
    for (const auto& p : v->properties) {
      for (const auto& a : atoms) {
        if (!p.applies_to(a)) continue;
        auto lhs = lookup(v->name, a);
        auto rhs = p.other ? lookup(*p.other, a) : std::optional<std::int64_t>(p.value);
        if (!lhs || !rhs || !holds(p.comparator, *lhs, *rhs)) return false;
      }
    }
  }
  return true;
}

namespace {

Formula as_formula(const Value& v, const Expr& where) {
  if (const auto* f = std::get_if<Formula>(&v)) return *f;
  throw Error(ErrorCode::StateInvalid, "expected a formula: " + print_expr(where));
}

std::int64_t as_number(const Value& v, const Expr& where) {
  if (const auto* n = std::get_if<std::int64_t>(&v)) return *n;
  throw Error(ErrorCode::StateInvalid, "expected a number: " + print_expr(where));
}

}  // namespace

Value evaluate(const Expr& e, const FunctionTable& table, const Environment& env) {
  auto num = [&](const Expr& x) { return as_number(evaluate(x, table, env), x); };
  auto fml = [&](const Expr& x) { return as_formula(evaluate(x, table, env), x); };
  switch (e.kind()) {
    case Expr::Kind::Num: return e.value();
    case Expr::Kind::Atom: return Formula::atom(e.name());
    case Expr::Kind::Meta: {
      auto it = env.metas.find(e.name());
      if (it == env.metas.end()) throw Error(ErrorCode::UnboundVariable, "unbound metavariable: " + e.name());
      return it->second;
    }
    case Expr::Kind::Neg: return Formula::neg(fml(e.child(0)));
    case Expr::Kind::Bin: return Formula::bin(e.connective(), fml(e.child(0)), fml(e.child(1)));
    case Expr::Kind::Sum: {
      std::int64_t acc = 0;
      for (const Expr& c : e.children()) acc += num(c);
      return acc;
    }
    case Expr::Kind::Scale: return e.value() * num(e.child(0));
    case Expr::Kind::Min: return std::min(num(e.child(0)), num(e.child(1)));
    case Expr::Kind::Max: return std::max(num(e.child(0)), num(e.child(1)));
    case Expr::Kind::App: {
      const FunctionDef& def = table.at(e.name());
      Formula arg = fml(e.child(0));
      if (const auto* f = std::get_if<CountingFunction>(&def)) return eval_counting(*f, arg);
      if (const auto* g = std::get_if<TransformFunction>(&def)) return eval_transform(*g, arg);
      const auto& v = std::get<Valuation>(def);
      static const std::map<std::string, std::int64_t> kEmpty;
      auto it = env.assignment.find(v.name);
      return eval_valuation(v, it == env.assignment.end() ? kEmpty : it->second, arg);
    }
  }
  throw Error(ErrorCode::StateInvalid, "bad expression");
}

std::int64_t evaluate_number(const Expr& e, const FunctionTable& table, const Environment& env) {
  return as_number(evaluate(e, table, env), e);
}

const Expr& subterm(const Expr& e, const Path& path) {
  const Expr* cur = &e;
  for (std::size_t i : path) cur = &cur->child(i);
  return *cur;
}

namespace {

Expr replace_from(const Expr& e, const Path& path, std::size_t depth, const Expr& replacement) {
  if (depth == path.size()) return replacement;
  std::vector<Expr> ch(e.children().begin(), e.children().end());
  ch[path[depth]] = replace_from(ch[path[depth]], path, depth + 1, replacement);
  return e.with_children(std::move(ch));
}

void collect_redexes(const FunctionTable& table, const Expr& e, Path& path, std::vector<Redex>& out) {
  if (is_redex(table, e)) out.push_back({path, e.name()});
  for (std::size_t i = 0; i < e.children().size(); ++i) {
    path.push_back(i);
    collect_redexes(table, e.child(i), path, out);
    path.pop_back();
  }
}

}  // namespace

Expr replace_subterm(const Expr& e, const Path& path, const Expr& replacement) {
  return replace_from(e, path, 0, replacement);
}

bool is_redex(const FunctionTable& table, const Expr& e) {
  if (e.kind() != Expr::Kind::App) return false;
  const FunctionDef* def = table.find(e.name());
  if (!def) return false;
  const Expr& arg = e.child(0);
  if (arg.kind() == Expr::Kind::Atom) {
    if (const auto* v = std::get_if<Valuation>(def)) return v->fixed_value(arg.name()).has_value();
    return true;
  }
  if (arg.kind() != Expr::Kind::Neg && arg.kind() != Expr::Kind::Bin) return false;
  Connective c = arg.kind() == Expr::Kind::Neg ? Connective::Neg : arg.connective();
  if (const auto* f = std::get_if<CountingFunction>(def)) return f->covers(c);
  if (const auto* g = std::get_if<TransformFunction>(def)) return g->covers(c);
  return true;
}

std::vector<Redex> find_redexes(const FunctionTable& table, const Expr& e) {
  std::vector<Redex> out;
  Path path;
  collect_redexes(table, e, path, out);
  return out;
}

Expr instantiate_template(const Formula& tmpl, const std::map<std::string, Expr>& bindings) {
  switch (tmpl.kind()) {
    case Formula::Kind::Atom: return Expr::atom(tmpl.name());
    case Formula::Kind::Meta:
    case Formula::Kind::Subst: {
      auto it = bindings.find(tmpl.name());
      if (it == bindings.end()) throw Error(ErrorCode::UnboundVariable, "unbound variable: " + tmpl.name());
      return it->second;
    }
    case Formula::Kind::Neg: return Expr::neg(instantiate_template(tmpl.operand(), bindings));
    case Formula::Kind::Bin:
      return Expr::bin(tmpl.connective(), instantiate_template(tmpl.left(), bindings),
                       instantiate_template(tmpl.right(), bindings));
  }
  throw Error(ErrorCode::UnboundVariable, "bad template");
}

Expr unfold_redex(const FunctionTable& table, const Expr& app) {
  if (!is_redex(table, app)) throw Error(ErrorCode::NoRedex, "not a redex: " + print_expr(app));
  const FunctionDef& def = table.at(app.name());
  const Expr& arg = app.child(0);
  const std::string& fn = app.name();
  auto rec = [&](std::size_t i) { return Expr::app(fn, arg.child(i)); };

  if (const auto* f = std::get_if<CountingFunction>(&def)) {
    if (arg.kind() == Expr::Kind::Atom) return Expr::num(f->value_at(arg.name()));
    std::vector<Expr> items;
    std::int64_t a = 0;
    if (arg.kind() == Expr::Kind::Neg) {
      a = f->neg->a;
      if (f->neg->b != 0) items.push_back(Expr::scale(f->neg->b, rec(0)));
    } else {
      const auto& k = f->binary.at(arg.connective());
      a = k.a;
      if (k.b != 0) items.push_back(Expr::scale(k.b, rec(0)));
      if (k.c != 0) items.push_back(Expr::scale(k.c, rec(1)));
    }
    if (a != 0 || items.empty()) items.push_back(Expr::num(a));
    return Expr::sum(std::move(items));
  }

  if (const auto* g = std::get_if<TransformFunction>(&def)) {
    if (arg.kind() == Expr::Kind::Atom) return instantiate_template(g->atom_case(arg.name()), {{"s", arg}});
    if (arg.kind() == Expr::Kind::Neg) return instantiate_template(*g->neg_template, {{"s", rec(0)}});
    return instantiate_template(g->binary_templates.at(arg.connective()), {{"s1", rec(0)}, {"s2", rec(1)}});
  }

  const auto& v = std::get<Valuation>(def);
  if (arg.kind() == Expr::Kind::Atom) return Expr::num(*v.fixed_value(arg.name()));
  if (arg.kind() == Expr::Kind::Neg) return Expr::sum({Expr::num(1), Expr::negate(rec(0))});
  switch (arg.connective()) {
    case Connective::And: return Expr::min(rec(0), rec(1));
    case Connective::Or: return Expr::max(rec(0), rec(1));
    default: return Expr::max(Expr::sum({Expr::num(1), Expr::negate(rec(0))}), rec(1));
  }
}

Expr unfold_step(const FunctionTable& table, const std::string& function, const Expr& e) {
  for (const auto& r : find_redexes(table, e))
    if (r.function == function) return replace_subterm(e, r.path, unfold_redex(table, subterm(e, r.path)));
  throw Error(ErrorCode::NoRedex, "no redex of " + function + " in " + print_expr(e));
}

Expr unfold_all(const FunctionTable& table, const std::string& function, const Expr& e) {
  Expr cur = e;
  for (;;) {
    auto rs = find_redexes(table, cur);
    auto it = std::find_if(rs.begin(), rs.end(), [&](const Redex& r) { return r.function == function; });
    if (it == rs.end()) return cur;
    cur = replace_subterm(cur, it->path, unfold_redex(table, subterm(cur, it->path)));
  }
}

Expr unfold_full(const FunctionTable& table, const Expr& e) {
  Expr cur = e;
  for (;;) {
    auto rs = find_redexes(table, cur);
    if (rs.empty()) return cur;
    cur = replace_subterm(cur, rs.front().path, unfold_redex(table, subterm(cur, rs.front().path)));
  }
}

LinearForm induced_form(const FunctionTable& table, const Expr& e) { return normalize(unfold_full(table, e)); }

}  // namespace induction
