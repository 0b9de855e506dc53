#include <doctest.h>

#include "induction/solver.hpp"
#include "oracle.hpp"

using namespace induction;

namespace {

const ExerciseSpec& pb() { return catalog_exercise("prop-bin"); }
const SubproofRef kAnd = SubproofRef::inductive(Connective::And);

std::vector<std::string> texts(const std::vector<ProofLine>& ls) {
  std::vector<std::string> out;
  for (const auto& l : ls) out.push_back(print_expr(l.expr));
  return out;
}

std::size_t occurrences(const Expr& e, const Expr& x) {
  if (e == x) return 1;
  std::size_t n = 0;
  for (const auto& c : e.children()) n += occurrences(c, x);
  return n;
}

// Every relation written between neighbouring lines holds on all concrete
// instances with phi and psi of at most one connective.
void check_lines_sound(const ExerciseSpec& spec, const ProofState& s) {
  std::vector<std::string> atoms{spec.language.atoms[0], spec.language.atoms[1]};
  auto small = oracle::formulas(spec.language, atoms, 1);
  auto as = oracle::assignments(spec.functions, atoms);
  for (const auto& sp : s.subproofs) {
    auto pairs = [&](const std::vector<ProofLine>& chain, bool top) {
      for (std::size_t i = 1; i < chain.size(); ++i) {
        const Expr& upper = top ? chain[i - 1].expr : chain[i].expr;
        const Expr& lower = top ? chain[i].expr : chain[i - 1].expr;
        Comparator r = chain[i].rel.value_or(Comparator::Eq);
        for (const auto& x : small)
          for (const auto& y : small)
            for (const auto& a : as) {
              oracle::Env env{&spec.functions, {{"phi", x}, {"psi", y}}, a};
              bool ok = oracle::relation_holds(upper, r, lower, env);
              CHECK_MESSAGE(ok, spec.id << " " << to_string(sp.ref) << ": " << print_expr(upper) << " "
                                        << symbol(r) << " " << print_expr(lower));
              if (!ok) return;
            }
      }
    };
    pairs(sp.top, true);
    pairs(sp.bottom, false);
  }
}

ProofState doc(const char* text) { return deserialize(text, &pb()); }

// Base case and both hypotheses done, the /\ case is started.
const char* kAndStarted =
    "exercise: prop-bin\n"
    "base p:\n  prop(p)\n  = (definition prop)\n  1\n  ^ 0 + 1\n  = (definition bin)\n  ^ bin(p) + 1\n"
    "IH:\n  prop(phi) = bin(phi) + 1\n  prop(psi) = bin(psi) + 1\n"
    "case /\\:\n  prop(phi /\\ psi)\n  ^ bin(phi /\\ psi) + 1\n";

}  // namespace

TEST_CASE("derivation of the running example") {
  ProofState s = derivation(pb());
  CHECK(is_done(pb(), s));
  CHECK(s.subproofs.size() == 4);
  const Subproof* c = s.find(kAnd);
  REQUIRE(c);
  CHECK(texts(c->top) == std::vector<std::string>{"prop(phi /\\ psi)", "prop(phi) + prop(psi)",
                                                   "bin(phi) + 1 + bin(psi) + 1", "bin(phi) + bin(psi) + 2"});
  CHECK(texts(c->bottom) == std::vector<std::string>{"bin(phi /\\ psi) + 1", "bin(phi) + bin(psi) + 1 + 1"});
  CHECK(c->top[1].motivation == Motivation::definition("prop"));
  CHECK(c->top[2].motivation == Motivation::hypothesis());
  CHECK(c->bottom[1].motivation == Motivation::definition("bin"));
}

TEST_CASE("inequality closes with a weak fold") {
  const auto& sl = catalog_exercise("star-length");
  ProofState s = derivation(sl);
  REQUIRE(is_done(sl, s));
  const Subproof* c = s.find(kAnd);
  REQUIRE(c);
  auto r = folded_relation(*c);
  REQUIRE(r);
  CHECK(comparator_implies(*r, Comparator::Le));
  CHECK(*r != Comparator::Eq);
}

TEST_CASE("every derivation line is sound") {
  for (const auto& spec : catalog()) {
    ProofState s = derivation(spec);
    CHECK_MESSAGE(is_done(spec, s), spec.id);
    check_lines_sound(spec, s);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ExerciseSpec g = generate_exercise(seed);
    check_lines_sound(g, derivation(g));
  }
}

TEST_CASE("false theorems are not provable") {
  ExerciseSpec wrong = pb();
  wrong.theorem = parse_statement("prop(phi) = bin(phi)");
  try {
    derivation(wrong);
    FAIL("derived");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotProvable);
  }
}

TEST_CASE("unsupported truth inequalities") {
  ExerciseSpec v = catalog_exercise("vala-valb");
  v.language.connectives.push_back(Connective::Neg);
  try {
    next_step(v, new_proof(v));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotProvable);
  }
}

TEST_CASE("first step states the base goal") {
  NextStep ns = next_step(pb(), new_proof(pb()));
  CHECK_FALSE(ns.complete);
  REQUIRE(ns.step);
  CHECK(ns.step->ref == SubproofRef::base("p"));
  CHECK(ns.step->rule.kind == RuleKind::Introduce);
  CHECK(print_expr(ns.step->line.expr) == "prop(p)");
}

TEST_CASE("rhs unfold after an early hypothesis") {
  ProofState s = doc(
      "exercise: prop-bin\n"
      "base p:\n  prop(p)\n  = (definition prop)\n  1\n  ^ 0 + 1\n  = (definition bin)\n  ^ bin(p) + 1\n"
      "IH:\n  prop(phi) = bin(phi) + 1\n  prop(psi) = bin(psi) + 1\n"
      "case /\\:\n  prop(phi /\\ psi)\n  = (definition prop)\n  prop(phi) + prop(psi)\n"
      "  = (induction hypothesis)\n  bin(phi) + bin(psi) + 2\n  ^ bin(phi /\\ psi) + 1\n");
  NextStep ns = next_step(pb(), s, kAnd);
  REQUIRE(ns.step);
  CHECK(ns.step->end == ChainEnd::Bottom);
  CHECK(ns.step->rule.kind == RuleKind::DefUnfold);
  CHECK(ns.step->rule.function == "bin");
  ProofState after = apply_step(pb(), s, *ns.step);
  CHECK(after.find(kAnd)->closed);
}

TEST_CASE("done states") {
  NextStep ns = next_step(pb(), derivation(pb()));
  CHECK(ns.complete);
  CHECK_FALSE(ns.step);
  Hint h = hint(pb(), derivation(pb()), 1);
  CHECK(h.complete);
}

TEST_CASE("hint tiers") {
  ProofState base = doc(
      "exercise: prop-bin\n"
      "base p:\n  prop(p)\n  = (definition prop)\n  1\n  ^ 0 + 1\n  = (definition bin)\n  ^ bin(p) + 1\n"
      "IH:\n  prop(phi) = bin(phi) + 1\n  prop(psi) = bin(psi) + 1\n");
  Hint fresh = hint(pb(), base, 1);
  CHECK(fresh.text.find("~phi") != std::string::npos);
  NextStep ns = next_step(pb(), base, kAnd);
  REQUIRE(ns.step);
  CHECK(ns.step->hint(1).find("phi /\\ psi") != std::string::npos);

  ProofState started = doc(kAndStarted);
  Hint t2 = hint(pb(), started, 2, &base);
  CHECK(t2.text.find("definition of prop") != std::string::npos);
  Hint t3 = hint(pb(), started, 3, &base);
  CHECK(t3.text.find("prop(phi) + prop(psi)") != std::string::npos);
  try {
    hint(pb(), started, 4);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("missing hypothesis is stated first") {
  ProofState s = doc(
      "exercise: prop-bin\n"
      "base p:\n  prop(p)\n  = (definition prop)\n  1\n  ^ 0 + 1\n  = (definition bin)\n  ^ bin(p) + 1\n"
      "case ~:\n  prop(~phi)\n  = (definition prop)\n  prop(phi)\n  ^ bin(~phi) + 1\n");
  NextStep ns = next_step(pb(), s, SubproofRef::inductive(Connective::Neg));
  REQUIRE(ns.step);
  CHECK(ns.step->kind == Step::Kind::StateIH);
}

TEST_CASE("hypotheses only rewrite left to right") {
  for (const auto& spec : catalog()) {
    ProofState s = derivation(spec);
    for (const auto& sp : s.subproofs)
      for (const auto* chain : {&sp.top, &sp.bottom})
        for (const auto& l : *chain)
          for (const auto& w : rewrites(spec, l.expr, false)) {
            CHECK(w.rule.kind != RuleKind::ReverseIH);
            if (w.rule.kind != RuleKind::ApplyIH && w.rule.kind != RuleKind::MonotoneIH) continue;
            for (const auto& h : hypothesis_instances(spec)) {
              if (std::find(w.rule.metas.begin(), w.rule.metas.end(), h.meta) == w.rule.metas.end()) continue;
              CHECK(occurrences(w.result, h.statement.lhs) < occurrences(l.expr, h.statement.lhs));
            }
          }
  }
  auto reverse = rewrites(pb(), parse_expr("bin(phi) + 1"), true);
  CHECK(std::any_of(reverse.begin(), reverse.end(), [](const Rewrite& w) { return w.rule.kind == RuleKind::ReverseIH; }));
}

TEST_CASE("recognition of combined steps") {
  auto rec = recognize(pb(), parse_expr("prop(phi) + prop(psi)"), parse_expr("bin(phi) + bin(psi) + 2"),
                       Comparator::Eq, Motivation::hypothesis());
  REQUIRE_FALSE(rec.empty());
  CHECK(rec[0].relation == Comparator::Eq);
  CHECK(rec[0].uses_ih());
  CHECK(justified_by(rec[0], Motivation::hypothesis()));
  CHECK(recognize(pb(), parse_expr("prop(phi /\\ psi)"), parse_expr("3"), Comparator::Eq, Motivation::none()).empty());
}

TEST_CASE("replacement polarity") {
  Expr e = parse_expr("5 - 2*f(phi)");
  CHECK(replacement_relation(e, parse_expr("f(phi)"), Comparator::Le) == Comparator::Ge);
  CHECK(replacement_relation(parse_expr("f(phi) + 1"), parse_expr("f(phi)"), Comparator::Lt) == Comparator::Lt);
  CHECK_FALSE(replacement_relation(parse_expr("f(phi) - f(phi)"), parse_expr("f(phi)"), Comparator::Le));
  CHECK(print_expr(distribute(parse_expr("2*(f(phi) + 1)"))) == "2*f(phi) + 2*1");
}

TEST_CASE("generated exercises are derivable") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    ExerciseSpec g = generate_exercise(seed);
    ProofState s = derivation(g);
    CHECK_MESSAGE(is_done(g, s), seed);
  }
}
