#include "induction/diagnosis.hpp"

#include <algorithm>

#include <json.hpp>

namespace induction {

extern const char* const kConstraintCatalogJson;

namespace {

std::vector<ConstraintInfo>& catalog_storage() {
  static std::vector<ConstraintInfo> c = parse_constraint_catalog(kConstraintCatalogJson);
  return c;
}

std::optional<ConstraintLevel> level_from(std::string_view s) {
  for (auto l : {ConstraintLevel::Step, ConstraintLevel::Subproof, ConstraintLevel::Proof, ConstraintLevel::Soft})
    if (to_string(l) == s) return l;
  return std::nullopt;
}

std::string fill(std::string text, const std::string& subject) {
  auto at = text.find("{subject}");
  if (at != std::string::npos) text.replace(at, 9, subject);
  return text;
}

// Document order: subproofs, the IH block at its position, top lines down,
// then bottom lines from the meeting point down to the rhs instance.
struct Positions {
  std::map<std::string, std::size_t> section_start;
  std::size_t ih_start = 0;

  explicit Positions(const ProofState& s) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i <= s.subproofs.size(); ++i) {
      if (s.ih_position && *s.ih_position == i) {
        ih_start = pos;
        pos += s.hypotheses.size();
      }
      if (i == s.subproofs.size()) break;
      section_start[to_string(s.subproofs[i].ref)] = pos;
      pos += s.subproofs[i].top.size() + s.subproofs[i].bottom.size();
    }
    if (!s.ih_position) ih_start = pos;
  }

  std::size_t of(const ProofState& s, const Location& l) const {
    if (l.section == "IH") return ih_start + l.line;
    auto it = section_start.find(l.section);
    std::size_t base = it == section_start.end() ? 0 : it->second;
    for (const auto& sp : s.subproofs)
      if (to_string(sp.ref) == l.section)
        return l.chain == ChainEnd::Top ? base + l.line - 1 : base + sp.top.size() + (sp.bottom.size() - l.line);
    return base;
  }
};

struct NewLine {
  std::size_t subproof;
  ChainEnd end;
  std::size_t index;
};

struct Diff {
  std::vector<NewLine> lines;
  std::vector<std::size_t> hypotheses;
  std::vector<std::size_t> touched;
  bool empty() const { return lines.empty() && hypotheses.empty(); }
};

Diff full_diff(const ProofState& s) {
  Diff d;
  for (std::size_t j = 0; j < s.subproofs.size(); ++j) {
    d.touched.push_back(j);
    for (auto end : {ChainEnd::Top, ChainEnd::Bottom})
      for (std::size_t i = 0; i < s.subproofs[j].chain(end).size(); ++i) d.lines.push_back({j, end, i});
  }
  for (std::size_t i = 0; i < s.hypotheses.size(); ++i) d.hypotheses.push_back(i);
  return d;
}

Diff compute_diff(const ProofState& prev, const ProofState& sub) {
  Diff d;
  for (std::size_t j = 0; j < sub.subproofs.size(); ++j) {
    const Subproof& sp = sub.subproofs[j];
    const Subproof* before = prev.find(sp.ref);
    bool touched = false;
    for (auto end : {ChainEnd::Top, ChainEnd::Bottom}) {
      const auto& now = sp.chain(end);
      std::size_t k = 0;
      if (before) {
        const auto& was = before->chain(end);
        while (k < now.size() && k < was.size() && now[k] == was[k]) ++k;
        if (was.size() != k) touched = true;
      }
      for (std::size_t i = k; i < now.size(); ++i) d.lines.push_back({j, end, i});
      if (k < now.size()) touched = true;
    }
    if (touched) d.touched.push_back(j);
  }
  for (std::size_t i = 0; i < sub.hypotheses.size(); ++i)
    if (std::find(prev.hypotheses.begin(), prev.hypotheses.end(), sub.hypotheses[i]) == prev.hypotheses.end())
      d.hypotheses.push_back(i);
  return d;
}

void formula_arguments(const Expr& e, std::vector<Expr>& out) {
  switch (e.kind()) {
    case Expr::Kind::App:
      if (e.child(0).kind() == Expr::Kind::App)
        formula_arguments(e.child(0), out);
      else
        out.push_back(e.child(0));
      return;
    case Expr::Kind::Atom:
    case Expr::Kind::Meta:
    case Expr::Kind::Num: return;
    default:
      for (const auto& c : e.children()) formula_arguments(c, out);
  }
}

void leaves(const Expr& e, std::vector<Expr>& out) {
  if (e.kind() == Expr::Kind::Atom || e.kind() == Expr::Kind::Meta) {
    out.push_back(e);
    return;
  }
  for (const auto& c : e.children()) leaves(c, out);
}

bool uses_foreign_connective(const LanguageSpec& lang, const Expr& e) {
  if (e.kind() == Expr::Kind::Neg && !lang.has(Connective::Neg)) return true;
  if (e.kind() == Expr::Kind::Bin && !lang.has(e.connective())) return true;
  return std::any_of(e.children().begin(), e.children().end(),
                     [&](const Expr& c) { return uses_foreign_connective(lang, c); });
}

bool declared_atom(const LanguageSpec& lang, const Expr& leaf) {
  return leaf.kind() == Expr::Kind::Atom &&
         std::find(lang.atoms.begin(), lang.atoms.end(), leaf.name()) != lang.atoms.end();
}

bool matches_case_shape(const Expr& x, Connective c) {
  if (c == Connective::Neg) return x.kind() == Expr::Kind::Neg;
  return x.kind() == Expr::Kind::Bin && x.connective() == c;
}

bool proper_metavariables(const Expr& x, Connective c) {
  std::vector<Expr> ls;
  leaves(x, ls);
  if (c == Connective::Neg) return ls.size() == 1 && ls[0] == Expr::meta(std::string(kPhi));
  return ls.size() == 2 && ls[0].kind() == Expr::Kind::Meta && ls[1].kind() == Expr::Kind::Meta && ls[0] != ls[1];
}

std::optional<std::string> instantiation_violation(const ExerciseSpec& spec, const SubproofRef& ref, const Expr& line,
                                                   const Expr& expected) {
  std::vector<Expr> args;
  formula_arguments(line, args);
  const LanguageSpec& lang = spec.language;
  for (const auto& a : args)
    if (uses_foreign_connective(lang, a)) return "instantiation-connective-not-in-language";
  if (ref.kind == SubproofRef::Kind::Base) {
    for (const auto& a : args)
      if (a.kind() != Expr::Kind::Atom) return "base-not-atomic";
  } else {
    for (const auto& a : args) {
      std::vector<Expr> ls;
      leaves(a, ls);
      if (std::any_of(ls.begin(), ls.end(), [&](const Expr& l) { return declared_atom(lang, l); }))
        return "instantiation-with-atoms";
    }
    for (const auto& a : args) {
      std::vector<Expr> ls;
      leaves(a, ls);
      bool foreign = std::any_of(ls.begin(), ls.end(), [](const Expr& l) { return l.kind() == Expr::Kind::Atom; });
      if (foreign || (matches_case_shape(a, ref.connective) && !proper_metavariables(a, ref.connective)))
        return "instantiation-metavariable-not-in-ih";
    }
  }
  if (!calculation_equal(line, expected)) return "instantiation-not-an-instance";
  return std::nullopt;
}

bool hypothesis_stated(const ExerciseSpec& spec, const ProofState& state, const std::string& meta) {
  for (const auto& h : hypothesis_instances(spec))
    if (h.meta == meta)
      return std::find(state.hypotheses.begin(), state.hypotheses.end(), h.statement) != state.hypotheses.end();
  return false;
}

bool needs_unstated_ih(const ExerciseSpec& spec, const ProofState& state, const Recognition& r) {
  for (const auto& rule : r.rules)
    for (const auto& m : rule.metas)
      if (!hypothesis_stated(spec, state, m)) return true;
  return false;
}

struct LineVerdict {
  std::optional<std::string> violation;
  std::vector<Rule> rules;
};

LineVerdict step_verdict(const ExerciseSpec& spec, const ProofState& state, const Subproof& sp, ChainEnd end,
                         std::size_t index) {
  const auto& chain = sp.chain(end);
  const ProofLine& line = chain[index];
  const Expr& neighbour = chain[index - 1].expr;
  const Expr& upper = end == ChainEnd::Top ? neighbour : line.expr;
  const Expr& lower = end == ChainEnd::Top ? line.expr : neighbour;
  Comparator claimed = line.rel.value_or(Comparator::Eq);

  auto recs = recognize(spec, upper, lower, claimed, line.motivation);
  std::vector<const Recognition*> valid;
  for (const auto& r : recs)
    if (comparator_implies(r.relation, claimed) && !r.uses_reverse_ih()) valid.push_back(&r);

  if (valid.empty()) {
    bool reverse = std::any_of(recs.begin(), recs.end(), [&](const Recognition& r) {
      return r.uses_reverse_ih() && comparator_implies(r.relation, claimed);
    });
    if (reverse) return {"ih-wrong-direction", {}};
    if (sp.ref.kind == SubproofRef::Kind::Inductive && !line.expr.contains_meta() && neighbour.contains_meta())
      return {"metavariables-as-atoms", {}};
    if (!recs.empty()) return {"comparator-step-invalid", recs.front().rules};
    return {"step-not-recognized", {}};
  }
  for (const auto* r : valid)
    if (justified_by(*r, line.motivation) && !needs_unstated_ih(spec, state, *r)) return {std::nullopt, r->rules};
  for (const auto* r : valid)
    if (justified_by(*r, line.motivation)) return {"ih-not-stated", r->rules};
  if (line.motivation.kind == MotivationKind::None) return {"justification-missing", valid.front()->rules};
  return {"justification-incorrect", valid.front()->rules};
}

bool ends_meet(const ExerciseSpec& spec, const Subproof& sp) {
  auto goal = subproof_goal(spec, sp.ref);
  if (!goal || sp.top.empty() || sp.bottom.empty()) return false;
  return calculation_equal(sp.top.front().expr, goal->lhs) && calculation_equal(sp.bottom.front().expr, goal->rhs) &&
         calculation_equal(sp.top.back().expr, sp.bottom.back().expr);
}

bool reachable(std::optional<Comparator> folded, Comparator goal) {
  if (!folded) return false;
  for (Comparator c : kAllComparators) {
    auto r = try_compose(*folded, c);
    if (r && comparator_implies(*r, goal)) return true;
  }
  return false;
}

std::optional<Violation> composition_violation(const ExerciseSpec& spec, const Subproof& sp) {
  auto goal = subproof_goal(spec, sp.ref);
  if (!goal) return std::nullopt;
  std::string section = to_string(sp.ref);
  std::optional<Comparator> folded = Comparator::Eq;
  auto step = [&](const ProofLine& l, Location loc) -> std::optional<Violation> {
    folded = folded ? try_compose(*folded, l.rel.value_or(Comparator::Eq)) : std::nullopt;
    if (!reachable(folded, goal->comparator))
      return Violation{"comparator-composition", loc,
                       "the relations cannot combine into " + std::string(symbol(goal->comparator))};
    return std::nullopt;
  };
  for (std::size_t i = 1; i < sp.top.size(); ++i)
    if (auto v = step(sp.top[i], {section, ChainEnd::Top, i + 1})) return v;
  for (std::size_t i = sp.bottom.size(); i-- > 1;)
    if (auto v = step(sp.bottom[i], {section, ChainEnd::Bottom, i + 1})) return v;
  if (ends_meet(spec, sp) && !comparator_implies(*folded, goal->comparator)) {
    Location loc = sp.bottom.size() > 1 ? Location{section, ChainEnd::Bottom, sp.bottom.size()}
                                        : Location{section, ChainEnd::Top, sp.top.size()};
    return Violation{"comparator-composition", loc,
                     "the relations combine into " + std::string(symbol(*folded)) + ", not " +
                         std::string(symbol(goal->comparator))};
  }
  return std::nullopt;
}

struct Collected {
  std::vector<Violation> violations;
  std::vector<Rule> last_rules;
};

Collected collect(const ExerciseSpec& spec, const ProofState& state, const Diff& diff) {
  Collected out;
  CasePlan plan = case_analysis(spec);
  for (std::size_t j : diff.touched) {
    const Subproof& sp = state.subproofs[j];
    if (!subproof_goal(spec, sp.ref)) {
      ChainEnd end = sp.top.empty() ? ChainEnd::Bottom : ChainEnd::Top;
      out.violations.push_back({"case-not-in-language", {to_string(sp.ref), end, 1}, to_string(sp.ref)});
      continue;
    }
    if (auto v = composition_violation(spec, sp)) out.violations.push_back(*v);
  }
  for (const auto& nl : diff.lines) {
    const Subproof& sp = state.subproofs[nl.subproof];
    auto goal = subproof_goal(spec, sp.ref);
    if (!goal) continue;
    Location loc{to_string(sp.ref), nl.end, nl.index + 1};
    const ProofLine& line = sp.chain(nl.end)[nl.index];
    if (nl.index == 0) {
      const Expr& expected = nl.end == ChainEnd::Top ? goal->lhs : goal->rhs;
      if (auto id = instantiation_violation(spec, sp.ref, line.expr, expected))
        out.violations.push_back({*id, loc, print_expr(line.expr)});
      out.last_rules = {Rule{RuleKind::Introduce, {}, {}}};
      continue;
    }
    LineVerdict v = step_verdict(spec, state, sp, nl.end, nl.index);
    if (v.violation) out.violations.push_back({*v.violation, loc, print_expr(line.expr)});
    out.last_rules = v.rules;
  }
  for (std::size_t i : diff.hypotheses) {
    const Statement& h = state.hypotheses[i];
    if (std::find(plan.hypotheses.begin(), plan.hypotheses.end(), h) == plan.hypotheses.end())
      out.violations.push_back({"ih-incorrect", {"IH", ChainEnd::Top, i + 1}, print_statement(h)});
  }
  Positions pos(state);
  std::stable_sort(out.violations.begin(), out.violations.end(), [&](const Violation& a, const Violation& b) {
    auto pa = constraint_info(a.id).priority, pb = constraint_info(b.id).priority;
    if (pa != pb) return pa < pb;
    return pos.of(state, a.location) < pos.of(state, b.location);
  });
  return out;
}

std::vector<Violation> completion_violations(const ExerciseSpec& spec, const ProofState& state) {
  std::vector<Violation> out;
  CasePlan plan = case_analysis(spec);
  for (const auto& b : plan.base_cases) {
    auto ref = SubproofRef::base(b.atom);
    const Subproof* sp = state.find(ref);
    if (!sp || sp->empty()) out.push_back({"missing-base-case", {to_string(ref), ChainEnd::Top, 1}, to_string(ref)});
  }
  for (const auto& c : plan.inductive_cases) {
    auto ref = SubproofRef::inductive(c.connective);
    const Subproof* sp = state.find(ref);
    if (!sp || sp->empty()) out.push_back({"missing-case", {to_string(ref), ChainEnd::Top, 1}, to_string(ref)});
  }
  for (const auto& sp : state.subproofs)
    if (!sp.empty() && !sp.closed && subproof_goal(spec, sp.ref)) {
      ChainEnd end = sp.top.empty() ? ChainEnd::Bottom : ChainEnd::Top;
      out.push_back({"subproof-not-closed", {to_string(sp.ref), end, sp.chain(end).size()}, to_string(sp.ref)});
    }
  for (std::size_t i = 0; i < plan.hypotheses.size(); ++i)
    if (std::find(state.hypotheses.begin(), state.hypotheses.end(), plan.hypotheses[i]) == state.hypotheses.end())
      out.push_back({"ih-incomplete", {"IH", ChainEnd::Top, state.hypotheses.size() + 1},
                     print_statement(plan.hypotheses[i])});
  return out;
}

SoftStatus status_of(const Subproof* sp) {
  if (!sp || sp->empty()) return SoftStatus::NotIntroduced;
  return sp->closed ? SoftStatus::Finished : SoftStatus::InProgress;
}

}  // namespace

std::string_view to_string(ConstraintLevel l) {
  switch (l) {
    case ConstraintLevel::Step: return "Step";
    case ConstraintLevel::Subproof: return "Subproof";
    case ConstraintLevel::Proof: return "Proof";
    case ConstraintLevel::Soft: return "Soft";
  }
  return "?";
}

std::vector<ConstraintInfo> parse_constraint_catalog(std::string_view json_text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("constraint catalog: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::Parse, "constraint catalog must be an array");
  std::vector<ConstraintInfo> out;
  for (const auto& c : j) {
    try {
      ConstraintInfo info;
      info.id = c.at("id").get<std::string>();
      auto level = level_from(c.at("level").get<std::string>());
      if (!level) throw Error(ErrorCode::Parse, "constraint " + info.id + ": unknown level");
      info.level = *level;
      info.priority = c.at("priority").get<int>();
      info.message_id = c.value("messageId", info.id);
      info.message_text = c.at("messageText").get<std::string>();
      out.push_back(std::move(info));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("constraint catalog entry: ") + e.what());
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.priority < b.priority; });
  return out;
}

const std::vector<ConstraintInfo>& constraint_catalog() { return catalog_storage(); }

void install_constraint_catalog(std::vector<ConstraintInfo> catalog) {
  for (const auto& existing : catalog_storage()) {
    bool present = std::any_of(catalog.begin(), catalog.end(), [&](const auto& c) { return c.id == existing.id; });
    if (!present) throw Error(ErrorCode::Parse, "constraint catalog lacks '" + existing.id + "'");
  }
  catalog_storage() = std::move(catalog);
}

std::string constraint_catalog_json() {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : constraint_catalog())
    j.push_back({{"id", c.id},
                 {"level", std::string(to_string(c.level))},
                 {"priority", c.priority},
                 {"messageId", c.message_id},
                 {"messageText", c.message_text}});
  return j.dump(2);
}

const ConstraintInfo& constraint_info(std::string_view id) {
  for (const auto& c : constraint_catalog())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownFunction, "unknown constraint '" + std::string(id) + "'");
}

std::vector<Violation> step_violations(const ExerciseSpec& spec, const ProofState& state) {
  return collect(spec, state, full_diff(state)).violations;
}

std::vector<ConstraintResult> check_constraints(const ExerciseSpec& spec, const ProofState& state) {
  auto vs = step_violations(spec, state);
  auto done = completion_violations(spec, state);
  vs.insert(vs.end(), done.begin(), done.end());
  std::vector<ConstraintResult> out;
  for (const auto& c : constraint_catalog()) {
    if (c.level == ConstraintLevel::Soft) continue;
    bool any = false;
    for (const auto& v : vs)
      if (v.id == c.id) {
        out.push_back({c.id, false, v.location, v.detail});
        any = true;
      }
    if (!any) out.push_back({c.id, true, std::nullopt, {}});
  }
  return out;
}

bool all_satisfied(const std::vector<ConstraintResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.satisfied; });
}

std::string_view to_string(SoftStatus s) {
  switch (s) {
    case SoftStatus::NotIntroduced: return "NotIntroduced";
    case SoftStatus::InProgress: return "InProgress";
    case SoftStatus::Finished: return "Finished";
  }
  return "?";
}

Guidance soft_status(const ExerciseSpec& spec, const ProofState& state) {
  CasePlan plan = case_analysis(spec);
  Guidance g;
  struct Pending {
    std::string message_id;
    std::string subject;
  };
  std::optional<Pending> next;
  auto note = [&](SoftStatus s, Pending start, Pending cont) {
    if (next || s == SoftStatus::Finished) return;
    next = s == SoftStatus::NotIntroduced ? start : cont;
  };
  for (const auto& b : plan.base_cases) {
    auto ref = SubproofRef::base(b.atom);
    SoftStatus s = status_of(state.find(ref));
    g.sections.push_back({to_string(ref), s});
    std::string subject = plan.base_cases.size() == 1 ? "the base case" : "the base case for " + b.atom;
    note(s, {"guidance-start", subject}, {"guidance-continue", subject});
  }
  std::size_t stated = 0;
  for (const auto& h : plan.hypotheses)
    stated += std::find(state.hypotheses.begin(), state.hypotheses.end(), h) != state.hypotheses.end();
  SoftStatus ih = stated == 0                       ? SoftStatus::NotIntroduced
                  : stated == plan.hypotheses.size() ? SoftStatus::Finished
                                                     : SoftStatus::InProgress;
  g.sections.push_back({"IH", ih});
  note(ih, {"guidance-ih", {}}, {"guidance-ih-partial", {}});
  for (const auto& c : plan.inductive_cases) {
    auto ref = SubproofRef::inductive(c.connective);
    SoftStatus s = status_of(state.find(ref));
    g.sections.push_back({to_string(ref), s});
    std::string subject = "the case for " + print_expr(case_instance(c.connective));
    note(s, {"guidance-start", subject}, {"guidance-continue", subject});
  }
  Pending p = next ? *next : Pending{"guidance-done", {}};
  const ConstraintInfo& info = constraint_info(p.message_id);
  g.message_id = info.message_id;
  g.text = fill(info.message_text, p.subject);
  return g;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::BuggyViolation: return "buggy";
    case Outcome::UnknownViolation: return "unknown";
    case Outcome::Similar: return "similar";
    case Outcome::Expected: return "expected";
    case Outcome::Detour: return "detour";
    case Outcome::CorrectMultipleSteps: return "multiple-steps";
  }
  return "?";
}

Diagnosis diagnose(const ExerciseSpec& spec, const ProofState& prev, const ProofState& submission) {
  Diagnosis d;
  d.guidance = soft_status(spec, submission);
  Diff diff = compute_diff(prev, submission);
  Collected c = collect(spec, submission, diff);
  d.rules = c.last_rules;
  if (!c.violations.empty()) {
    const Violation& v = c.violations.front();
    const ConstraintInfo& info = constraint_info(v.id);
    d.outcome = v.id == "step-not-recognized" ? Outcome::UnknownViolation : Outcome::BuggyViolation;
    d.message_id = info.message_id;
    d.message_text = info.message_text;
    d.location = v.location;
    return d;
  }
  if (diff.empty()) return d;

  const NewLine* first = diff.lines.empty() ? nullptr : &diff.lines.front();
  if (first) {
    const Subproof& sp = submission.subproofs[first->subproof];
    d.location = Location{to_string(sp.ref), first->end, first->index + 1};
  } else {
    d.location = Location{"IH", ChainEnd::Top, diff.hypotheses.front() + 1};
  }

  bool similar = diff.hypotheses.empty() && std::all_of(diff.lines.begin(), diff.lines.end(), [&](const NewLine& l) {
                   const auto& chain = submission.subproofs[l.subproof].chain(l.end);
                   return l.index > 0 && calculation_equal(chain[l.index].expr, chain[l.index - 1].expr);
                 });
  if (similar) {
    d.outcome = Outcome::Similar;
    return d;
  }

  std::optional<Step> expected;
  try {
    NextStep ns = next_step(spec, prev, hint_focus(spec, prev, nullptr));
    expected = ns.step;
  } catch (const Error&) {
  }
  std::size_t count = diff.lines.size() + diff.hypotheses.size();
  bool matches = false;
  if (expected) {
    if (count == 1 && !diff.hypotheses.empty()) {
      matches = expected->kind == Step::Kind::StateIH &&
                expected->hypothesis == submission.hypotheses[diff.hypotheses.front()];
    } else if (count == 1) {
      const Subproof& sp = submission.subproofs[first->subproof];
      matches = expected->kind == Step::Kind::AddLine && expected->ref == sp.ref && expected->end == first->end &&
                calculation_equal(expected->line.expr, sp.chain(first->end)[first->index].expr);
    } else if (count == 2 && diff.hypotheses.empty()) {
      const NewLine& a = diff.lines[0];
      const NewLine& b = diff.lines[1];
      matches = a.subproof == b.subproof && a.index == 0 && b.index == 0 && a.end != b.end &&
                expected->kind == Step::Kind::AddLine && expected->rule.kind == RuleKind::Introduce &&
                expected->ref == submission.subproofs[a.subproof].ref;
    }
  }
  if (matches)
    d.outcome = Outcome::Expected;
  else
    d.outcome = count == 1 ? Outcome::Detour : Outcome::CorrectMultipleSteps;
  return d;
}

NextStep checked_next_step(const ExerciseSpec& spec, const ProofState& state, const std::optional<SubproofRef>& focus) {
  auto vs = step_violations(spec, state);
  if (!vs.empty()) {
    const Violation& v = vs.front();
    throw Error(ErrorCode::StateInvalid, "the proof has a violation (" + v.id + ") in " + v.location.section +
                                             ", line " + std::to_string(v.location.line) + "; diagnose it first");
  }
  return next_step(spec, state, focus);
}

Hint checked_hint(const ExerciseSpec& spec, const ProofState& state, int tier, const ProofState* prev) {
  checked_next_step(spec, state);
  return hint(spec, state, tier, prev);
}

}  // namespace induction
