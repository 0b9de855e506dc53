#include "induction/exercises.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace induction {

namespace {

void collect_substs(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Subst || f.kind() == Formula::Kind::Meta) out.insert(f.name());
  if (f.kind() == Formula::Kind::Neg) collect_substs(f.operand(), out);
  if (f.kind() == Formula::Kind::Bin) {
    collect_substs(f.left(), out);
    collect_substs(f.right(), out);
  }
}

void collect_metas(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == Expr::Kind::Meta) out.insert(e.name());
  for (const Expr& c : e.children()) collect_metas(c, out);
}

bool is_chain(const Expr& e) {
  if (e.kind() == Expr::Kind::Meta) return true;
  return e.kind() == Expr::Kind::App && is_chain(e.child(0));
}

struct Validator {
  const ExerciseSpec& spec;
  std::vector<ValidationIssue> issues;

  void add(std::string code, std::string message) { issues.push_back({std::move(code), std::move(message)}); }

  void check_template(const TransformFunction& g, const Formula& tmpl, const std::set<std::string>& allowed,
                      const std::string& where) {
    for (Connective c : connectives_of(tmpl))
      if (!g.codomain.has(c))
        add("TemplateOutsideCodomain", g.name + " " + where + " uses " + std::string(symbol(c)) +
                                            ", which is not in its codomain");
    std::set<std::string> used;
    collect_substs(tmpl, used);
    for (const auto& s : used)
      if (!allowed.count(s)) add("BadTemplateVariable", g.name + " " + where + " uses variable " + s);
  }

  void check_function(const FunctionDef& def) {
    const auto& atoms = spec.language.atoms;
    auto known_atom = [&](const std::string& a) { return std::find(atoms.begin(), atoms.end(), a) != atoms.end(); };
    if (const auto* f = std::get_if<CountingFunction>(&def)) {
      bool negative = f->atom_value < 0;
      for (const auto& [a, v] : f->atom_values) {
        negative = negative || v < 0;
        if (!known_atom(a)) add("UnknownAtom", f->name + " defines a case for unknown atom " + a);
      }
      if (f->neg) negative = negative || f->neg->a < 0 || f->neg->b < 0;
      for (const auto& [c, k] : f->binary) negative = negative || k.a < 0 || k.b < 0 || k.c < 0;
      if (negative) add("NegativeCoefficient", f->name + " has a negative coefficient");
    } else if (const auto* g = std::get_if<TransformFunction>(&def)) {
      check_template(*g, g->atom_template, {"s"}, "atom case");
      for (const auto& [a, t] : g->atom_overrides) {
        if (!known_atom(a)) add("UnknownAtom", g->name + " defines a case for unknown atom " + a);
        check_template(*g, t, {"s"}, "case for " + a);
      }
      if (g->neg_template) check_template(*g, *g->neg_template, {"s"}, "negation case");
      for (const auto& [c, t] : g->binary_templates)
        check_template(*g, t, {"s1", "s2"}, "case for " + std::string(symbol(c)));
      for (Connective c : g->domain.connectives)
        if (!g->covers(c)) add("MissingCase", g->name + " has no case for " + case_pattern(c));
    } else {
      const auto& v = std::get<Valuation>(def);
      for (const auto& p : v.properties) {
        if (p.atom && !known_atom(*p.atom)) add("UnknownAtom", v.name + " has a property for unknown atom " + *p.atom);
        if (p.other && !spec.functions.valuation(*p.other))
          add("UnknownFunction", v.name + " is compared with " + *p.other + ", which is not a valuation");
        if (!p.other && p.value != 0 && p.value != 1)
          add("BadPropertyValue", v.name + " is compared with " + std::to_string(p.value));
      }
    }
  }

  // Checks coverage along a chain and returns its sort, or nullopt on error.
  std::optional<Sort> check_chain(const Expr& e) {
    if (e.kind() == Expr::Kind::Meta) return Sort::Formula;
    std::vector<const Expr*> apps;
    const Expr* cur = &e;
    while (cur->kind() == Expr::Kind::App) {
      apps.push_back(cur);
      cur = &cur->child(0);
    }
    LanguageSpec lang = spec.language;
    std::optional<Sort> sort = Sort::Formula;
    for (auto it = apps.rbegin(); it != apps.rend(); ++it) {
      const std::string& fn = (*it)->name();
      const FunctionDef* def = spec.functions.find(fn);
      if (!def) {
        add("UnknownFunction", "unknown function " + fn);
        return std::nullopt;
      }
      if (sort != Sort::Formula) {
        add("SortMismatch", fn + " is applied to a " + std::string(to_string(*sort)));
        return std::nullopt;
      }
      if (const auto* g = std::get_if<TransformFunction>(def)) {
        for (Connective c : lang.connectives) {
          if (!g->domain.has(c))
            add("DomainMismatch", fn + " is applied to formulas with " + std::string(symbol(c)) +
                                      ", outside its domain");
          else if (!g->covers(c))
            add("MissingCase", fn + " has no case for " + case_pattern(c));
        }
        lang = g->codomain;
      } else if (const auto* f = std::get_if<CountingFunction>(def)) {
        for (Connective c : lang.connectives)
          if (!f->covers(c)) add("MissingCase", fn + " has no case for " + case_pattern(c));
        sort = Sort::Number;
      } else {
        sort = Sort::Truth;
      }
    }
    return sort;
  }

  // Linear combination of chains over numbers; returns false when ill-shaped.
  bool check_linear(const Expr& e) {
    std::vector<Expr> items;
    if (e.kind() == Expr::Kind::Sum)
      items.assign(e.children().begin(), e.children().end());
    else
      items.push_back(e);
    bool ok = true;
    for (const Expr& it : items) {
      if (it.kind() == Expr::Kind::Num) continue;
      const Expr& body = it.kind() == Expr::Kind::Scale ? it.child(0) : it;
      if (!is_chain(body) || body.kind() != Expr::Kind::App) {
        add("RhsNotLinear", "right-hand side is not a linear combination of applications: " + print_expr(e));
        return false;
      }
      auto s = check_chain(body);
      if (s && *s != Sort::Number) {
        add("SortMismatch", "right-hand side mixes sorts: " + print_expr(body));
        ok = false;
      }
    }
    return ok;
  }

  void run() {
    try {
      spec.language.validate();
    } catch (const Error& e) {
      add("InvalidLanguage", e.what());
      return;
    }
    if (spec.id.empty()) add("MissingId", "exercise has no id");
    for (const auto& def : spec.functions.defs()) check_function(def);

    const Statement& th = spec.theorem;
    std::set<std::string> metas;
    collect_metas(th.lhs, metas);
    collect_metas(th.rhs, metas);
    for (const auto& m : metas)
      if (m != kPhi) add("MetavariableNotPhi", "theorem may only use phi, found " + m);
    if (th.lhs.contains_atom() || th.rhs.contains_atom()) add("AtomInTheorem", "theorem mentions a concrete atom");

    if (!is_chain(th.lhs) || th.lhs.kind() != Expr::Kind::App) {
      add("LhsNotSingleTerm", "left-hand side must be a single application f(g(phi)): " + print_expr(th.lhs));
      return;
    }
    std::set<std::string> lhs_metas;
    collect_metas(th.lhs, lhs_metas);
    if (!lhs_metas.count(kPhi)) add("MissingMetavariable", "left-hand side does not mention phi");
    auto lhs_sort = check_chain(th.lhs);
    if (!lhs_sort) return;

    switch (*lhs_sort) {
      case Sort::Number: check_linear(th.rhs); break;
      case Sort::Truth: {
        if (th.rhs.kind() == Expr::Kind::Num) {
          if (th.rhs.value() != 0 && th.rhs.value() != 1)
            add("SortMismatch", "truth value compared with " + print_expr(th.rhs));
        } else if (!is_chain(th.rhs) || th.rhs.kind() != Expr::Kind::App) {
          add("RhsNotLinear", "right-hand side must be a valuation application: " + print_expr(th.rhs));
        } else if (auto s = check_chain(th.rhs); s && *s != Sort::Truth) {
          add("SortMismatch", "truth value compared with " + print_expr(th.rhs));
        }
        break;
      }
      case Sort::Formula: {
        if (!is_chain(th.rhs)) {
          add("RhsNotLinear", "right-hand side must be a transform application: " + print_expr(th.rhs));
        } else if (auto s = check_chain(th.rhs); s && *s != Sort::Formula) {
          add("SortMismatch", "formula compared with " + print_expr(th.rhs));
        }
        if (th.comparator != Comparator::Eq)
          add("FormulaNeedsEquality", "formulas can only be compared with =");
        break;
      }
    }

    if (th.comparator == Comparator::Eq) {
      for (const auto& def : spec.functions.defs()) {
        const auto* v = std::get_if<Valuation>(&def);
        if (!v) continue;
        for (const auto& p : v->properties)
          if (p.comparator != Comparator::Eq)
            add("EqualityNeedsEqualityProperties",
                "an equality cannot be proven from the inequality property of " + v->name);
      }
    }
  }
};

}  // namespace

std::vector<ValidationIssue> validate_exercise(const ExerciseSpec& spec) {
  Validator v{spec, {}};
  v.run();
  return std::move(v.issues);
}

void require_valid(const ExerciseSpec& spec) {
  auto issues = validate_exercise(spec);
  if (issues.empty()) return;
  std::ostringstream os;
  os << "invalid exercise " << spec.id << ":";
  for (const auto& i : issues) os << " [" << i.code << "] " << i.message << ";";
  throw Error(ErrorCode::InvalidExercise, os.str());
}

Sort sort_of(const FunctionTable& table, const Expr& e) {
  auto numeric = [](Sort s) { return s == Sort::Number || s == Sort::Truth; };
  switch (e.kind()) {
    case Expr::Kind::Num: return Sort::Number;
    case Expr::Kind::Atom:
    case Expr::Kind::Meta: return Sort::Formula;
    case Expr::Kind::Neg:
    case Expr::Kind::Bin:
      for (const Expr& c : e.children())
        if (sort_of(table, c) != Sort::Formula)
          throw Error(ErrorCode::InvalidExercise, "connective applied to a number: " + print_expr(e));
      return Sort::Formula;
    case Expr::Kind::Sum:
    case Expr::Kind::Scale:
      for (const Expr& c : e.children())
        if (!numeric(sort_of(table, c)))
          throw Error(ErrorCode::InvalidExercise, "arithmetic on a formula: " + print_expr(e));
      return Sort::Number;
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      Sort a = sort_of(table, e.child(0));
      Sort b = sort_of(table, e.child(1));
      if (!numeric(a) || !numeric(b)) throw Error(ErrorCode::InvalidExercise, "min/max of a formula: " + print_expr(e));
      return a == Sort::Truth && b == Sort::Truth ? Sort::Truth : Sort::Number;
    }
    case Expr::Kind::App:
      if (sort_of(table, e.child(0)) != Sort::Formula)
        throw Error(ErrorCode::InvalidExercise, e.name() + " must be applied to a formula: " + print_expr(e));
      return table.result_sort(e.name());
  }
  return Sort::Number;
}

Sort theorem_sort(const ExerciseSpec& spec) { return sort_of(spec.functions, spec.theorem.lhs); }

Expr case_instance(Connective c) {
  if (c == Connective::Neg) return Expr::neg(Expr::meta(kPhi));
  return Expr::bin(c, Expr::meta(kPhi), Expr::meta(kPsi));
}

CasePlan case_analysis(const ExerciseSpec& spec) {
  std::set<std::string> special;
  for (const auto& def : spec.functions.defs()) {
    if (const auto* f = std::get_if<CountingFunction>(&def))
      for (const auto& [a, v] : f->atom_values) special.insert(a);
    if (const auto* g = std::get_if<TransformFunction>(&def))
      for (const auto& [a, t] : g->atom_overrides) special.insert(a);
    if (const auto* v = std::get_if<Valuation>(&def))
      for (const auto& p : v->properties)
        if (p.atom) special.insert(*p.atom);
  }
  CasePlan plan;
  const Statement& th = spec.theorem;
  auto base = [&](const std::string& a) { plan.base_cases.push_back({a, instantiate(th, {{kPhi, Expr::atom(a)}})}); };
  for (const auto& a : spec.language.atoms)
    if (!special.count(a)) {
      base(a);
      break;
    }
  for (const auto& a : spec.language.atoms)
    if (special.count(a)) base(a);

  plan.hypotheses.push_back(th);
  if (spec.language.has_binary()) plan.hypotheses.push_back(instantiate(th, {{kPhi, Expr::meta(kPsi)}}));

  if (spec.language.has(Connective::Neg))
    plan.inductive_cases.push_back({Connective::Neg, instantiate(th, {{kPhi, case_instance(Connective::Neg)}})});
  for (Connective c : spec.language.binary_connectives())
    plan.inductive_cases.push_back({c, instantiate(th, {{kPhi, case_instance(c)}})});
  return plan;
}

std::vector<Formula> enumerate_formulas(const LanguageSpec& lang, std::size_t max_size, std::size_t atom_count) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  std::size_t n = std::min(atom_count, lang.atoms.size());
  for (std::size_t i = 0; i < n; ++i) by_size[0].push_back(Formula::atom(lang.atoms[i]));
  auto binaries = lang.binary_connectives();
  for (std::size_t s = 1; s <= max_size; ++s) {
    if (lang.has(Connective::Neg))
      for (const auto& f : by_size[s - 1]) by_size[s].push_back(Formula::neg(f));
    for (Connective c : binaries)
      for (std::size_t i = 0; i + 1 <= s; ++i)
        for (const auto& l : by_size[i])
          for (const auto& r : by_size[s - 1 - i]) by_size[s].push_back(Formula::bin(c, l, r));
  }
  std::vector<Formula> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Assignment> enumerate_assignments(const FunctionTable& table, const std::vector<std::string>& atoms) {
  std::vector<std::string> vals;
  for (const auto& def : table.defs())
    if (const auto* v = std::get_if<Valuation>(&def)) vals.push_back(v->name);
  std::size_t bits = vals.size() * atoms.size();
  std::vector<Assignment> out;
  if (bits > 20) throw Error(ErrorCode::InvalidExercise, "too many valuations to enumerate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Assignment a;
    std::size_t bit = 0;
    for (const auto& v : vals)
      for (const auto& atom : atoms) a[v][atom] = (mask >> bit++) & 1;
    if (assignment_satisfies(table, a, atoms)) out.push_back(std::move(a));
  }
  return out;
}

std::optional<Formula> find_counterexample(const ExerciseSpec& spec, std::size_t max_size, std::size_t atom_count) {
  std::size_t n = std::min(atom_count, spec.language.atoms.size());
  std::vector<std::string> atoms(spec.language.atoms.begin(), spec.language.atoms.begin() + static_cast<long>(n));
  auto assignments = enumerate_assignments(spec.functions, atoms);
  const Statement& th = spec.theorem;
  for (const auto& f : enumerate_formulas(spec.language, max_size, atom_count)) {
    for (const auto& a : assignments) {
      Environment env{{{kPhi, f}}, a};
      Value l = evaluate(th.lhs, spec.functions, env);
      Value r = evaluate(th.rhs, spec.functions, env);
      bool ok;
      if (std::holds_alternative<Formula>(l) || std::holds_alternative<Formula>(r))
        ok = th.comparator == Comparator::Eq && l == r;
      else
        ok = holds(th.comparator, std::get<std::int64_t>(l), std::get<std::int64_t>(r));
      if (!ok) return f;
    }
  }
  return std::nullopt;
}

bool verify_by_enumeration(const ExerciseSpec& spec, std::size_t max_size, std::size_t atom_count) {
  return !find_counterexample(spec, max_size, atom_count).has_value();
}

const ExerciseSpec* find_exercise(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

const ExerciseSpec& catalog_exercise(std::string_view id) {
  const ExerciseSpec* e = find_exercise(id);
  if (!e) throw Error(ErrorCode::UnknownExercise, "unknown exercise: " + std::string(id));
  return *e;
}

}  // namespace induction
