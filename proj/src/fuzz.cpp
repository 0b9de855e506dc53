#include "induction/fuzz.hpp"

#include <random>

namespace induction {

namespace {

struct Mover {
  const ExerciseSpec& spec;
  CasePlan plan;
  std::mt19937_64& rng;

  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  bool reachable(const Subproof& sp, Comparator extra, Comparator goal) const {
    std::vector<Comparator> rels;
    for (std::size_t i = 1; i < sp.top.size(); ++i) rels.push_back(sp.top[i].rel.value_or(Comparator::Eq));
    rels.push_back(extra);
    for (std::size_t i = sp.bottom.size(); i-- > 1;) rels.push_back(sp.bottom[i].rel.value_or(Comparator::Eq));
    auto folded = fold_comparators(rels);
    if (!folded) return false;
    for (Comparator c : kAllComparators) {
      auto r = try_compose(*folded, c);
      if (r && comparator_implies(*r, goal)) return true;
    }
    return false;
  }

  bool stated(const ProofState& s, const std::string& meta) const {
    for (const auto& h : hypothesis_instances(spec))
      if (h.meta == meta)
        return std::find(s.hypotheses.begin(), s.hypotheses.end(), h.statement) != s.hypotheses.end();
    return false;
  }

  std::vector<Step> moves(const ProofState& s) {
    std::vector<Step> out;
    for (const auto& h : plan.hypotheses)
      if (std::find(s.hypotheses.begin(), s.hypotheses.end(), h) == s.hypotheses.end()) {
        Step st;
        st.kind = Step::Kind::StateIH;
        st.rule.kind = RuleKind::StateIH;
        st.hypothesis = h;
        out.push_back(st);
      }
    std::vector<SubproofRef> refs;
    for (const auto& b : plan.base_cases) refs.push_back(SubproofRef::base(b.atom));
    for (const auto& c : plan.inductive_cases) refs.push_back(SubproofRef::inductive(c.connective));
    for (const auto& ref : refs) {
      auto goal = subproof_goal(spec, ref);
      const Subproof* sp = s.find(ref);
      if (sp && sp->closed) continue;
      auto line = [&](ChainEnd end, Rule rule, Expr e, std::optional<Comparator> rel) {
        Step st;
        st.ref = ref;
        st.end = end;
        st.line = ProofLine{std::move(e), rel, rel ? motivation_for(rule) : Motivation::none()};
        st.rule = std::move(rule);
        out.push_back(st);
      };
      if (!sp || sp->top.empty()) line(ChainEnd::Top, {RuleKind::Introduce, {}, {}}, goal->lhs, std::nullopt);
      if (!sp || sp->bottom.empty()) line(ChainEnd::Bottom, {RuleKind::Introduce, {}, {}}, goal->rhs, std::nullopt);
      if (!sp) continue;
      if (!sp->top.empty()) {
        const Expr& t = sp->top.back().expr;
        for (const auto& w : rewrites(spec, t, false)) {
          bool ok = reachable(*sp, w.relation, goal->comparator);
          for (const auto& m : w.rule.metas) ok = ok && stated(s, m);
          if (ok) line(ChainEnd::Top, w.rule, w.result, w.relation);
        }
        Expr norm = arithmetic_normal(t);
        if (print_expr(norm) != print_expr(t)) line(ChainEnd::Top, {RuleKind::Arithmetic, {}, {}}, norm, Comparator::Eq);
      }
      if (!sp->bottom.empty()) {
        const Expr& b = sp->bottom.back().expr;
        for (const auto& w : rewrites(spec, b, false))
          if (w.relation == Comparator::Eq && w.rule.metas.empty()) line(ChainEnd::Bottom, w.rule, w.result, w.relation);
        Expr norm = arithmetic_normal(b);
        if (print_expr(norm) != print_expr(b))
          line(ChainEnd::Bottom, {RuleKind::Arithmetic, {}, {}}, norm, Comparator::Eq);
      }
    }
    return out;
  }

  ProofState walk(std::size_t steps) {
    ProofState s = new_proof(spec);
    for (std::size_t i = 0; i < steps && !is_done(spec, s); ++i) {
      if (coin(0.35)) {
        NextStep ns = next_step(spec, s);
        if (ns.step) s = apply_step(spec, s, *ns.step);
        continue;
      }
      auto ms = moves(s);
      if (ms.empty()) break;
      s = apply_step(spec, s, ms[below(ms.size())]);
    }
    return s;
  }
};

}  // namespace

std::vector<FuzzCase> fuzz_states(const FuzzOptions& options) {
  std::mt19937_64 rng(options.seed);
  const std::vector<ExerciseSpec>& fixed = catalog();
  std::vector<ExerciseSpec> generated;
  for (std::size_t i = 0; i < options.generated_exercises; ++i)
    generated.push_back(generate_exercise(options.seed * 1000 + i));
  std::vector<FuzzCase> out;
  std::size_t attempts = 0;
  while (out.size() < options.states && attempts < options.states * 20) {
    ++attempts;
    // Half catalog, half generated.
    const auto& pool = generated.empty() || std::bernoulli_distribution(0.5)(rng) ? fixed : generated;
    const ExerciseSpec& spec = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    Mover m{spec, case_analysis(spec), rng};
    std::size_t steps = std::uniform_int_distribution<std::size_t>(0, options.max_moves)(rng);
    ProofState s = m.walk(steps);
    if (is_done(spec, s)) continue;
    out.push_back({spec, std::move(s)});
  }
  return out;
}

FuzzReport run_hint_fuzz(const FuzzOptions& options) {
  FuzzReport report;
  for (const auto& c : fuzz_states(options)) {
    ++report.total;
    try {
      auto vs = step_violations(c.spec, c.state);
      if (!vs.empty()) {
        report.failures.push_back(c.spec.id + ": fuzzed state has violation " + vs.front().id + " in " +
                                  vs.front().location.section + "\n" + serialize(c.state));
        continue;
      }
      NextStep ns = next_step(c.spec, c.state);
      if (!ns.step) {
        report.failures.push_back(c.spec.id + ": no step for an unfinished proof\n" + serialize(c.state));
        continue;
      }
      bool texts = true;
      for (int tier = 1; tier <= 3; ++tier) texts = texts && !hint(c.spec, c.state, tier).text.empty();
      if (texts)
        ++report.available;
      else
        report.failures.push_back(c.spec.id + ": empty hint\n" + serialize(c.state));
    } catch (const Error& e) {
      report.failures.push_back(c.spec.id + ": " + std::string(to_string(e.code())) + ": " + e.what() + "\n" +
                                serialize(c.state));
    }
  }
  return report;
}

}  // namespace induction
