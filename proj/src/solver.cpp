#include "induction/solver.hpp"

#include <algorithm>
#include <set>

namespace induction {

namespace {

bool numeric_theorem(const ExerciseSpec& spec) { return theorem_sort(spec) != Sort::Formula; }

std::optional<Comparator> chain_relation(bool numeric, const Expr& upper, const Expr& lower) {
  if (upper == lower) return Comparator::Eq;
  if (!numeric) return std::nullopt;
  try {
    return arithmetic_relation(normalize(upper), normalize(lower));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotLinear) throw;
    return std::nullopt;
  }
}

struct Occurrence {
  int sign;
  bool neutral;
  bool under_minmax;
};

void occurrences(const Expr& e, const Expr& from, int sign, bool neutral, bool minmax, std::vector<Occurrence>& out) {
  if (e == from) {
    out.push_back({sign, neutral, minmax});
    return;
  }
  switch (e.kind()) {
    case Expr::Kind::Scale: occurrences(e.child(0), from, e.value() < 0 ? -sign : sign, neutral, minmax, out); return;
    case Expr::Kind::Sum:
      for (const auto& c : e.children()) occurrences(c, from, sign, neutral, minmax, out);
      return;
    case Expr::Kind::Min:
    case Expr::Kind::Max:
      for (const auto& c : e.children()) occurrences(c, from, sign, neutral, true, out);
      return;
    case Expr::Kind::App:
    case Expr::Kind::Neg:
    case Expr::Kind::Bin:
      for (const auto& c : e.children()) occurrences(c, from, sign, true, minmax, out);
      return;
    default: return;
  }
}

bool under_minmax(const Expr& e, const Expr& from) {
  std::vector<Occurrence> occ;
  occurrences(e, from, 1, false, false, occ);
  return std::any_of(occ.begin(), occ.end(), [](const Occurrence& o) { return o.under_minmax; });
}

bool reachable(std::optional<Comparator> folded, Comparator goal) {
  if (!folded) return false;
  for (Comparator c : kAllComparators) {
    auto r = try_compose(*folded, c);
    if (r && comparator_implies(*r, goal)) return true;
  }
  return false;
}

std::optional<Comparator> fold_all(const std::vector<Comparator>& rels) { return fold_comparators(rels); }

std::vector<Comparator> rels_of(const std::vector<ProofLine>& chain) {
  std::vector<Comparator> out;
  for (std::size_t i = 1; i < chain.size(); ++i) out.push_back(chain[i].rel.value_or(Comparator::Eq));
  return out;
}

// Relations of a subproof around a new top step r: top rels, r, bottom rels
// from the meeting point down.
std::optional<Comparator> fold_with(const Subproof& sp, Comparator r) {
  std::vector<Comparator> all = rels_of(sp.top);
  all.push_back(r);
  auto bottom = rels_of(sp.bottom);
  all.insert(all.end(), bottom.rbegin(), bottom.rend());
  return fold_all(all);
}

bool all_arguments_atoms(const FunctionTable& table, const Expr& e, const std::string& fn) {
  for (const auto& r : find_redexes(table, e))
    if (r.function == fn && subterm(e, r.path).child(0).kind() != Expr::Kind::Atom) return false;
  return true;
}

Rule unfold_rule(const FunctionTable& table, const Expr& e, const std::string& fn) {
  if (table.valuation(fn) && all_arguments_atoms(table, e, fn)) return {RuleKind::GivenProperty, fn, {}};
  return {RuleKind::DefUnfold, fn, {}};
}

void collect_valuation_apps(const FunctionTable& table, const Expr& e, std::vector<Expr>& out) {
  if (e.kind() == Expr::Kind::App && table.valuation(e.name()) && e.child(0).kind() == Expr::Kind::Atom) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    return;
  }
  for (const auto& c : e.children()) collect_valuation_apps(table, c, out);
}

// Property rewrites V(a) -> W(a) (or a constant), forward and reversed.
std::vector<Rewrite> property_rewrites(const FunctionTable& table, const Expr& e) {
  std::vector<Rewrite> out;
  std::vector<Expr> apps;
  collect_valuation_apps(table, e, apps);
  for (const auto& app : apps) {
    const std::string& atom = app.child(0).name();
    const Valuation* v = table.valuation(app.name());
    for (const auto& p : v->properties) {
      if (!p.applies_to(atom)) continue;
      Expr to = p.other ? Expr::app(*p.other, app.child(0)) : Expr::num(p.value);
      if (!p.other && p.comparator == Comparator::Eq) continue;  // a redex
      if (auto r = replacement_relation(e, app, p.comparator))
        out.push_back({{RuleKind::GivenProperty, v->name, {}}, replace_all(e, app, to), *r});
    }
  }
  // W(a) -> V(a) for properties V(a) comp W(a).
  for (const auto& app : apps)
    for (const auto& def : table.defs()) {
      const auto* v = std::get_if<Valuation>(&def);
      if (!v) continue;
      for (const auto& p : v->properties) {
        if (!p.other || *p.other != app.name() || !p.applies_to(app.child(0).name())) continue;
        Expr to = Expr::app(v->name, app.child(0));
        if (auto r = replacement_relation(e, app, flip(p.comparator)))
          out.push_back({{RuleKind::GivenProperty, v->name, {}}, replace_all(e, app, to), *r});
      }
    }
  return out;
}

std::optional<Rewrite> ih_rewrite(const Expr& e, const std::vector<HypothesisUse>& hyps, bool reverse) {
  Expr cur = e;
  std::vector<Comparator> rels;
  Rule rule{reverse ? RuleKind::ReverseIH : RuleKind::ApplyIH, {}, {}};
  for (const auto& h : hyps) {
    const Expr& from = reverse ? h.statement.rhs : h.statement.lhs;
    const Expr& to = reverse ? h.statement.lhs : h.statement.rhs;
    Comparator c = reverse ? flip(h.statement.comparator) : h.statement.comparator;
    auto r = replacement_relation(cur, from, c);
    if (!r) return std::nullopt;
    if (!reverse && under_minmax(cur, from)) rule.kind = RuleKind::MonotoneIH;
    rels.push_back(*r);
    cur = replace_all(cur, from, to);
    rule.metas.push_back(h.meta);
  }
  auto rel = fold_all(rels);
  if (!rel) return std::nullopt;
  return Rewrite{rule, cur, *rel};
}

std::vector<Rewrite> ih_rewrites(const ExerciseSpec& spec, const Expr& e, bool reverse) {
  std::vector<Rewrite> out;
  auto hyps = hypothesis_instances(spec);
  std::vector<std::vector<HypothesisUse>> subsets;
  for (const auto& h : hyps) subsets.push_back({h});
  if (hyps.size() == 2) subsets.push_back(hyps);
  for (const auto& s : subsets)
    if (auto r = ih_rewrite(e, s, reverse)) out.push_back(*r);
  return out;
}

bool redex_atom_valuation(const FunctionTable& table, const Expr& app) {
  return table.valuation(app.name()) && app.child(0).kind() == Expr::Kind::Atom;
}

}  // namespace

std::string_view to_string(RuleKind k) {
  switch (k) {
    case RuleKind::Introduce: return "Introduce";
    case RuleKind::StateIH: return "StateIH";
    case RuleKind::DefUnfold: return "DefUnfold";
    case RuleKind::ApplyIH: return "ApplyIH";
    case RuleKind::MonotoneIH: return "MonotoneIH";
    case RuleKind::ReverseIH: return "ReverseIH";
    case RuleKind::Distribute: return "Distribute";
    case RuleKind::Arithmetic: return "Arithmetic";
    case RuleKind::GivenProperty: return "GivenProperty";
  }
  return "?";
}

std::string describe(const Rule& r) {
  switch (r.kind) {
    case RuleKind::Introduce: return "write down what has to be proven";
    case RuleKind::StateIH: return "formulate the induction hypothesis";
    case RuleKind::DefUnfold: return "apply the definition of " + r.function;
    case RuleKind::ApplyIH:
    case RuleKind::MonotoneIH: return "apply the induction hypothesis";
    case RuleKind::ReverseIH: return "apply the induction hypothesis from right to left";
    case RuleKind::Distribute: return "distribute the multiplication over the sum";
    case RuleKind::Arithmetic: return "simplify by calculation";
    case RuleKind::GivenProperty: return "use the given property of " + r.function;
  }
  return {};
}

Motivation motivation_for(const Rule& r) {
  switch (r.kind) {
    case RuleKind::DefUnfold: return Motivation::definition(r.function);
    case RuleKind::ApplyIH:
    case RuleKind::MonotoneIH:
    case RuleKind::ReverseIH: return Motivation::hypothesis();
    case RuleKind::Distribute: return Motivation::distribution();
    case RuleKind::Arithmetic: return Motivation::calculation();
    case RuleKind::GivenProperty: return Motivation::given(r.function);
    default: return Motivation::none();
  }
}

bool motivation_matches(const Motivation& m, const Rule& r) {
  switch (r.kind) {
    case RuleKind::DefUnfold: return m.kind == MotivationKind::Definition && m.function == r.function;
    case RuleKind::ApplyIH:
    case RuleKind::MonotoneIH:
    case RuleKind::ReverseIH: return m.kind == MotivationKind::InductionHypothesis;
    case RuleKind::GivenProperty: return m.kind == MotivationKind::Given && m.function == r.function;
    case RuleKind::Distribute:
    case RuleKind::Arithmetic:
      return m.kind == MotivationKind::Calculation || m.kind == MotivationKind::Distribution;
    default: return m.kind == MotivationKind::None;
  }
}

bool Recognition::uses_reverse_ih() const {
  return std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return r.kind == RuleKind::ReverseIH; });
}

bool Recognition::uses_ih() const {
  return std::any_of(rules.begin(), rules.end(), [](const Rule& r) {
    return r.kind == RuleKind::ApplyIH || r.kind == RuleKind::MonotoneIH || r.kind == RuleKind::ReverseIH;
  });
}

bool justified_by(const Recognition& r, const Motivation& m) {
  auto arithmetic = [](const Rule& x) { return x.kind == RuleKind::Distribute || x.kind == RuleKind::Arithmetic; };
  if (m.kind == MotivationKind::None) return std::all_of(r.rules.begin(), r.rules.end(), arithmetic);
  if (r.rules.empty()) return m.kind == MotivationKind::Calculation || m.kind == MotivationKind::Distribution;
  return std::any_of(r.rules.begin(), r.rules.end(), [&](const Rule& x) { return motivation_matches(m, x); });
}

std::vector<HypothesisUse> hypothesis_instances(const ExerciseSpec& spec) {
  std::vector<HypothesisUse> out{{std::string(kPhi), spec.theorem}};
  if (!spec.language.binary_connectives().empty())
    out.push_back({std::string(kPsi), instantiate(spec.theorem, {{std::string(kPhi), Expr::meta(std::string(kPsi))}})});
  return out;
}

std::optional<Comparator> replacement_relation(const Expr& e, const Expr& from, Comparator r) {
  std::vector<Occurrence> occ;
  occurrences(e, from, 1, false, false, occ);
  if (occ.empty()) return std::nullopt;
  if (r == Comparator::Eq) return r;
  bool pos = false, neg = false;
  for (const auto& o : occ) {
    if (o.neutral) return std::nullopt;
    (o.sign > 0 ? pos : neg) = true;
  }
  if (pos && neg) return std::nullopt;
  return pos ? r : flip(r);
}

Expr replace_all(const Expr& e, const Expr& from, const Expr& to) {
  if (e == from) return to;
  if (e.children().empty()) return e;
  std::vector<Expr> cs;
  for (const auto& c : e.children()) cs.push_back(replace_all(c, from, to));
  return e.with_children(std::move(cs));
}

Expr distribute(const Expr& e) {
  if (e.children().empty()) return e;
  std::vector<Expr> cs;
  for (const auto& c : e.children()) cs.push_back(distribute(c));
  Expr out = e.with_children(std::move(cs));
  if (out.kind() == Expr::Kind::Scale && out.child(0).kind() == Expr::Kind::Sum) {
    std::vector<Expr> terms;
    for (const auto& t : out.child(0).children()) terms.push_back(Expr::scale(out.value(), t));
    return Expr::sum(std::move(terms));
  }
  return out;
}

bool has_distributable(const Expr& e) {
  if (e.kind() == Expr::Kind::Scale && e.child(0).kind() == Expr::Kind::Sum) return true;
  return std::any_of(e.children().begin(), e.children().end(), [](const Expr& c) { return has_distributable(c); });
}

Expr arithmetic_normal(const Expr& e) {
  try {
    return normalize(e).to_expr();
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NotLinear) throw;
    return e;
  }
}

std::vector<Rewrite> rewrites(const ExerciseSpec& spec, const Expr& e, bool include_reverse_ih) {
  const FunctionTable& table = spec.functions;
  std::vector<Rewrite> out;
  auto redexes = find_redexes(table, e);
  std::vector<std::string> fns;
  for (const auto& r : redexes) {
    const Expr& app = subterm(e, r.path);
    Rule rule{redex_atom_valuation(table, app) ? RuleKind::GivenProperty : RuleKind::DefUnfold, r.function, {}};
    out.push_back({rule, replace_subterm(e, r.path, unfold_redex(table, app)), Comparator::Eq});
    if (std::find(fns.begin(), fns.end(), r.function) == fns.end()) fns.push_back(r.function);
  }
  for (const auto& fn : fns) out.push_back({unfold_rule(table, e, fn), unfold_all(table, fn, e), Comparator::Eq});
  auto props = property_rewrites(table, e);
  out.insert(out.end(), props.begin(), props.end());
  if (has_distributable(e)) out.push_back({{RuleKind::Distribute, {}, {}}, distribute(e), Comparator::Eq});
  auto ih = ih_rewrites(spec, e, false);
  out.insert(out.end(), ih.begin(), ih.end());
  if (include_reverse_ih) {
    auto rev = ih_rewrites(spec, e, true);
    out.insert(out.end(), rev.begin(), rev.end());
  }
  return out;
}

std::vector<Recognition> recognize(const ExerciseSpec& spec, const Expr& upper, const Expr& lower, Comparator claimed,
                                   const Motivation& motivation) {
  bool numeric = numeric_theorem(spec);
  std::vector<Recognition> found;
  auto add = [&](std::vector<Rule> rules, std::optional<Comparator> r1, std::optional<Comparator> r2) {
    if (!r1 || !r2) return;
    if (auto r = try_compose(*r1, *r2)) found.push_back({std::move(rules), *r});
  };
  auto good = [&]() {
    return std::any_of(found.begin(), found.end(), [&](const Recognition& r) {
      return comparator_implies(r.relation, claimed) && justified_by(r, motivation);
    });
  };
  auto equal_only = [](const Rewrite& w) { return w.relation == Comparator::Eq; };

  add({}, Comparator::Eq, chain_relation(numeric, upper, lower));
  auto forward = rewrites(spec, upper, true);
  for (const auto& x : forward) add({x.rule}, x.relation, chain_relation(numeric, x.result, lower));
  // An IH rewrite of the lower line reads as rhs -> lhs from upper to lower.
  auto backward = rewrites(spec, lower, false);
  for (auto& y : backward)
    if (y.rule.kind == RuleKind::ApplyIH || y.rule.kind == RuleKind::MonotoneIH) y.rule.kind = RuleKind::ReverseIH;
  for (const auto& y : backward)
    if (equal_only(y)) add({y.rule}, Comparator::Eq, chain_relation(numeric, upper, y.result));

  if (!good()) {
    for (const auto& x : forward) {
      for (const auto& z : rewrites(spec, x.result, true)) {
        auto r = try_compose(x.relation, z.relation);
        add({x.rule, z.rule}, r, chain_relation(numeric, z.result, lower));
      }
      for (const auto& y : backward)
        if (equal_only(y)) add({x.rule, y.rule}, x.relation, chain_relation(numeric, x.result, y.result));
    }
  }

  std::stable_sort(found.begin(), found.end(), [&](const Recognition& a, const Recognition& b) {
    auto key = [&](const Recognition& r) {
      return std::tuple(!comparator_implies(r.relation, claimed), !justified_by(r, motivation), r.uses_reverse_ih(),
                        r.rules.size());
    };
    return key(a) < key(b);
  });
  return found;
}

std::string Step::hint(int tier) const {
  auto what = [&] {
    if (ref.kind == SubproofRef::Kind::Base) return "the base case for " + ref.atom;
    return "the case for " + print_expr(case_instance(ref.connective));
  };
  auto capital = [](std::string s) {
    if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
  };
  if (tier <= 1) {
    if (kind == Kind::StateIH) return "Formulate the induction hypothesis.";
    if (rule.kind == RuleKind::Introduce && opens_subproof) return "State what must be proven in " + what() + ".";
    return "Continue with " + what() + ".";
  }
  if (tier == 2) {
    if (kind == Kind::StateIH) return "Formulate the induction hypothesis for " + print_expr(hypothesis.lhs) + ".";
    if (rule.kind == RuleKind::Introduce)
      return end == ChainEnd::Top ? "Write down the left-hand side of what must be proven in " + what() + "."
                                  : "Write down the right-hand side of what must be proven in " + what() + ".";
    return capital(describe(rule)) + (end == ChainEnd::Top ? " in the top chain" : " in the bottom chain") + " of " +
           what() + ".";
  }
  if (kind == Kind::StateIH) return "Add the induction hypothesis: " + print_statement(hypothesis);
  std::string chain = end == ChainEnd::Top ? "top" : "bottom";
  if (rule.kind == RuleKind::Introduce) return "In " + to_string(ref) + ", start the " + chain + " chain with " + print_expr(line.expr);
  std::string just = print_motivation(line.motivation);
  return "In " + to_string(ref) + ", add to the " + chain + " chain: " +
         std::string(symbol(line.rel.value_or(Comparator::Eq))) + (just.empty() ? "" : " (" + just + ")") + " " +
         print_expr(line.expr);
}

ProofState apply_step(const ExerciseSpec& spec, const ProofState& state, const Step& step) {
  if (step.kind == Step::Kind::StateIH) return state_ih(state, step.hypothesis);
  return add_line(spec, state, step.ref, step.end, step.line);
}

namespace {

Step line_step(const SubproofRef& ref, ChainEnd end, Rule rule, Expr e, std::optional<Comparator> rel) {
  Step s;
  s.ref = ref;
  s.end = end;
  s.line = ProofLine{std::move(e), rel, rel ? motivation_for(rule) : Motivation::none()};
  s.rule = std::move(rule);
  return s;
}

Step ih_step(const Statement& h) {
  Step s;
  s.kind = Step::Kind::StateIH;
  s.rule = {RuleKind::StateIH, {}, {}};
  s.hypothesis = h;
  return s;
}

bool stated(const ProofState& state, const Statement& h) {
  return std::find(state.hypotheses.begin(), state.hypotheses.end(), h) != state.hypotheses.end();
}

std::optional<Step> subproof_step(const ExerciseSpec& spec, const ProofState& state, const SubproofRef& ref) {
  auto goal = subproof_goal(spec, ref);
  if (!goal) return std::nullopt;
  const Subproof* sp = state.find(ref);
  if (!sp || sp->top.empty()) {
    Step s = line_step(ref, ChainEnd::Top, {RuleKind::Introduce, {}, {}}, goal->lhs, std::nullopt);
    s.opens_subproof = !sp || sp->empty();
    return s;
  }
  if (sp->closed) return std::nullopt;
  if (sp->bottom.empty()) return line_step(ref, ChainEnd::Bottom, {RuleKind::Introduce, {}, {}}, goal->rhs, std::nullopt);

  const FunctionTable& table = spec.functions;
  const bool numeric = numeric_theorem(spec);
  const Comparator want = goal->comparator;
  const Expr& top = sp->top.back().expr;
  const Expr& bottom = sp->bottom.back().expr;

  auto redexes = find_redexes(table, top);
  if (!redexes.empty()) {
    const std::string& fn = redexes.front().function;
    return line_step(ref, ChainEnd::Top, unfold_rule(table, top, fn), unfold_all(table, fn, top), Comparator::Eq);
  }
  if (ref.kind == SubproofRef::Kind::Base)
    for (const auto& w : property_rewrites(table, top))
      if (w.relation != Comparator::Eq && reachable(fold_with(*sp, w.relation), want))
        return line_step(ref, ChainEnd::Top, w.rule, w.result, w.relation);
  if (has_distributable(top))
    return line_step(ref, ChainEnd::Top, {RuleKind::Distribute, {}, {}}, distribute(top), Comparator::Eq);
  if (ref.kind == SubproofRef::Kind::Inductive) {
    auto hyps = hypothesis_instances(spec);
    std::vector<HypothesisUse> usable;
    for (const auto& h : hyps)
      if (replacement_relation(top, h.statement.lhs, Comparator::Eq)) usable.push_back(h);
    if (!usable.empty()) {
      std::optional<Rewrite> w = ih_rewrite(top, usable, false);
      if (!w || !reachable(fold_with(*sp, w->relation), want)) {
        w.reset();
        for (const auto& h : usable) {
          auto single = ih_rewrite(top, {h}, false);
          if (single && reachable(fold_with(*sp, single->relation), want)) {
            w = single;
            break;
          }
        }
      }
      if (w) {
        for (const auto& h : usable)
          if (std::find(w->rule.metas.begin(), w->rule.metas.end(), h.meta) != w->rule.metas.end() &&
              !stated(state, h.statement))
            return ih_step(h.statement);
        return line_step(ref, ChainEnd::Top, w->rule, w->result, w->relation);
      }
    }
  }
  if (numeric) {
    Expr norm = arithmetic_normal(top);
    if (norm != top && print_expr(norm) != print_expr(top))
      return line_step(ref, ChainEnd::Top, {RuleKind::Arithmetic, {}, {}}, norm, Comparator::Eq);
  }

  auto bottom_redexes = find_redexes(table, bottom);
  if (!bottom_redexes.empty()) {
    const std::string& fn = bottom_redexes.front().function;
    return line_step(ref, ChainEnd::Bottom, unfold_rule(table, bottom, fn), unfold_all(table, fn, bottom),
                     Comparator::Eq);
  }
  if (has_distributable(bottom))
    return line_step(ref, ChainEnd::Bottom, {RuleKind::Distribute, {}, {}}, distribute(bottom), Comparator::Eq);

  if (auto r = chain_relation(numeric, top, bottom)) {
    auto folded = fold_with(*sp, *r);
    if (folded && comparator_implies(*folded, want))
      return line_step(ref, ChainEnd::Top, {RuleKind::Arithmetic, {}, {}}, bottom, *r);
  }
  throw Error(ErrorCode::StateInvalid, "no way to continue " + to_string(ref) + " from " + print_expr(top) +
                                           " towards " + print_expr(bottom));
}

void require_supported_sort(const ExerciseSpec& spec) {
  if (theorem_sort(spec) == Sort::Truth && spec.theorem.comparator != Comparator::Eq &&
      (spec.language.has(Connective::Neg) || spec.language.has(Connective::Imp)))
    throw Error(ErrorCode::NotProvable,
                "inequalities between truth values are not monotone under negation or implication");
}

}  // namespace

NextStep next_step(const ExerciseSpec& spec, const ProofState& state, const std::optional<SubproofRef>& focus) {
  require_supported_sort(spec);
  if (is_done(spec, state)) return {true, std::nullopt};
  if (focus)
    if (auto s = subproof_step(spec, state, *focus)) return {false, s};
  CasePlan plan = case_analysis(spec);
  for (const auto& b : plan.base_cases)
    if (auto s = subproof_step(spec, state, SubproofRef::base(b.atom))) return {false, s};
  for (const auto& h : plan.hypotheses)
    if (!stated(state, h)) return {false, ih_step(h)};
  for (const auto& c : plan.inductive_cases)
    if (auto s = subproof_step(spec, state, SubproofRef::inductive(c.connective))) return {false, s};
  throw Error(ErrorCode::StateInvalid, "every case is closed but the proof is not complete");
}

std::optional<SubproofRef> hint_focus(const ExerciseSpec& spec, const ProofState& state, const ProofState* prev) {
  (void)spec;
  if (prev)
    for (auto it = state.subproofs.rbegin(); it != state.subproofs.rend(); ++it) {
      const Subproof* before = prev->find(it->ref);
      if (!before || before->top != it->top || before->bottom != it->bottom) return it->ref;
    }
  for (auto it = state.subproofs.rbegin(); it != state.subproofs.rend(); ++it)
    if (!it->empty() && !it->closed) return it->ref;
  return std::nullopt;
}

Hint hint(const ExerciseSpec& spec, const ProofState& state, int tier, const ProofState* prev) {
  if (tier < 1 || tier > 3) throw Error(ErrorCode::Parse, "hint tier must be 1, 2 or 3");
  NextStep ns = next_step(spec, state, hint_focus(spec, state, prev));
  if (ns.complete) return {true, "Proof complete.", std::nullopt};
  return {false, ns.step->hint(tier), ns.step};
}

void check_supported(const ExerciseSpec& spec) {
  require_valid(spec);
  require_supported_sort(spec);
  if (auto cx = find_counterexample(spec, 3, 2))
    throw Error(ErrorCode::NotProvable, "the theorem does not hold for " + print_formula(*cx));
}

ProofState derivation(const ExerciseSpec& spec) {
  check_supported(spec);
  ProofState state = new_proof(spec);
  for (int i = 0; i < 2000; ++i) {
    NextStep ns;
    try {
      ns = next_step(spec, state);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StateInvalid) throw;
      throw Error(ErrorCode::NotProvable, e.what());
    }
    if (ns.complete) return state;
    state = apply_step(spec, state, *ns.step);
  }
  throw Error(ErrorCode::NotProvable, "the derivation does not terminate");
}

}  // namespace induction
