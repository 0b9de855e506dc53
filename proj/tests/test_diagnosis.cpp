#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "induction/diagnosis.hpp"

using namespace induction;

namespace {

const ExerciseSpec& pb() { return catalog_exercise("prop-bin"); }

using namespace fixtures;

const ProofState& ready() {
  static const ProofState s = doc(kBase + kIH);
  return s;
}

Diagnosis after_ready(const std::string& extra) { return diagnose(pb(), ready(), doc(kBase + kIH + extra)); }

std::vector<std::string> failing(const ProofState& s) {
  std::vector<std::string> out;
  for (const auto& r : check_constraints(pb(), s))
    if (!r.satisfied) out.push_back(r.id);
  return out;
}

bool fails(const ProofState& s, const std::string& id) {
  auto f = failing(s);
  return std::find(f.begin(), f.end(), id) != f.end();
}

}  // namespace

TEST_CASE("catalog of constraints") {
  const auto& c = constraint_catalog();
  REQUIRE_FALSE(c.empty());
  std::set<std::string> ids, messages;
  for (std::size_t i = 0; i < c.size(); ++i) {
    ids.insert(c[i].id);
    messages.insert(c[i].message_id);
    CHECK_FALSE(c[i].message_text.empty());
    if (i > 0) CHECK(c[i - 1].priority <= c[i].priority);
  }
  CHECK(ids.size() == c.size());
  CHECK(messages.size() == c.size());
  CHECK(constraint_info("instantiation-with-atoms").priority < constraint_info("step-not-recognized").priority);
  CHECK(parse_constraint_catalog(constraint_catalog_json()).size() == c.size());
  try {
    constraint_info("nope");
    FAIL("found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFunction);
  }
}

TEST_CASE("instantiation violations") {
  auto first_line = [](const char* line) {
    return after_ready(std::string("case /\\:\n  ") + line + "\n");
  };
  Diagnosis foreign = first_line("prop(phi \\/ psi)");
  CHECK(foreign.outcome == Outcome::BuggyViolation);
  CHECK(foreign.message_id == "instantiation-connective-not-in-language");

  Diagnosis atoms = first_line("prop(p /\\ q)");
  CHECK(atoms.outcome == Outcome::BuggyViolation);
  CHECK(atoms.message_id == "instantiation-with-atoms");
  REQUIRE(atoms.location);
  CHECK(atoms.location->section == "case /\\");
  CHECK(atoms.location->chain == ChainEnd::Top);
  CHECK(atoms.location->line == 1);

  CHECK(first_line("prop(phi /\\ chi)").message_id == "instantiation-metavariable-not-in-ih");
  CHECK(first_line("prop(phi /\\ phi)").message_id == "instantiation-metavariable-not-in-ih");
  CHECK(first_line("prop(phi) + 1").message_id == "instantiation-not-an-instance");

  Diagnosis base = diagnose(pb(), doc(""), doc("base p:\n  prop(phi)\n"));
  CHECK(base.message_id == "base-not-atomic");
}

TEST_CASE("metavariables rewritten into a number") {
  Diagnosis d = after_ready("case /\\:\n  prop(phi /\\ psi)\n  = (definition prop)\n  3\n");
  CHECK(d.outcome == Outcome::BuggyViolation);
  CHECK(d.message_id == "metavariables-as-atoms");
  REQUIRE(d.location);
  CHECK(d.location->line == 2);
}

TEST_CASE("step violations") {
  const std::string open = "case /\\:\n  prop(phi /\\ psi)\n";
  Diagnosis unknown = after_ready(open + "  = (definition prop)\n  2*prop(phi)\n");
  CHECK(unknown.outcome == Outcome::UnknownViolation);
  CHECK(unknown.message_id == "step-not-recognized");

  CHECK(after_ready(open + "  =\n  prop(phi) + prop(psi)\n").message_id == "justification-missing");
  CHECK(after_ready(open + "  = (induction hypothesis)\n  prop(phi) + prop(psi)\n").message_id ==
        "justification-incorrect");
  CHECK(after_ready(open + "  < (definition prop)\n  prop(phi) + prop(psi)\n").message_id == "comparator-step-invalid");

  Diagnosis reverse = after_ready(
      "case ~:\n  prop(~phi)\n  = (definition prop)\n  prop(phi)\n  = (induction hypothesis)\n  bin(phi) + 1\n"
      "  = (induction hypothesis)\n  prop(phi)\n");
  CHECK(reverse.message_id == "ih-wrong-direction");
}

TEST_CASE("hypothesis used before it is stated") {
  ProofState prev = doc(kBase);
  Diagnosis d = diagnose(pb(), prev,
                         doc(kBase + "case ~:\n  prop(~phi)\n  = (definition prop)\n  prop(phi)\n"
                                     "  = (induction hypothesis)\n  bin(phi) + 1\n"));
  CHECK(d.outcome == Outcome::BuggyViolation);
  CHECK(d.message_id == "ih-not-stated");
}

TEST_CASE("wrong hypotheses and foreign cases") {
  CHECK(fails(doc(kBase + "IH:\n  prop(phi) = bin(phi)\n"), "ih-incorrect"));
  CHECK(fails(doc(kBase + kIH + "case \\/:\n  prop(phi \\/ psi)\n"), "case-not-in-language"));
}

TEST_CASE("completion constraints") {
  ProofState no_imp = doc(kBase + kIH + kNeg + kAnd);
  CHECK(fails(no_imp, "missing-case"));
  CHECK_FALSE(fails(no_imp, "missing-base-case"));
  CHECK(fails(doc(kIH + kNeg + kAnd + kImp), "missing-base-case"));
  CHECK(fails(doc(kBase + "IH:\n  prop(phi) = bin(phi) + 1\n" + kNeg + kAnd + kImp), "ih-incomplete"));

  ProofState premature = doc("base p:\n  prop(p)\n  = (definition prop)\n  1\n" + kIH + kNeg + kAnd + kImp);
  auto f = failing(premature);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == "subproof-not-closed");

  ProofState complete = doc(kBase + kIH + kNeg + kAnd + kImp);
  CHECK(failing(complete).empty());
  CHECK(is_done(pb(), complete));
}

TEST_CASE("weak steps in an equality proof") {
  ProofState s = doc("base p:\n  prop(p)\n  <= (definition prop)\n  1\n  ^ 0 + 1\n  = (definition bin)\n  ^ bin(p) + 1\n");
  CHECK(step_violations(pb(), s).size() == 1);
  CHECK(step_violations(pb(), s)[0].id == "comparator-composition");
  Diagnosis d = diagnose(pb(), doc(""), s);
  CHECK(d.message_id == "comparator-composition");
}

TEST_CASE("priority decides which message is shown") {
  // The rule violation comes first in the document, the instantiation
  // violation has the higher priority.
  std::string broken_neg = "case ~:\n  prop(~phi)\n  = (definition prop)\n  prop(phi) + 7\n";
  std::string atoms = "case /\\:\n  prop(p /\\ q)\n  = (definition prop)\n  prop(p) + prop(q) + 7\n";
  Diagnosis d = after_ready(broken_neg + atoms);
  CHECK(d.outcome == Outcome::BuggyViolation);
  CHECK(d.message_id == "instantiation-with-atoms");
  auto vs = step_violations(pb(), doc(kBase + kIH + broken_neg + atoms));
  REQUIRE(vs.size() >= 2);
  CHECK(vs[0].id == "instantiation-with-atoms");
  for (std::size_t i = 1; i < vs.size(); ++i)
    CHECK(constraint_info(vs[i - 1].id).priority <= constraint_info(vs[i].id).priority);
}

TEST_CASE("correct submissions") {
  const std::string rhs = "  ^ bin(phi /\\ psi) + 1\n";
  const std::string unfolded = "case /\\:\n  prop(phi /\\ psi)\n  = (definition prop)\n  prop(phi) + prop(psi)\n";
  ProofState started = doc(kBase + kIH + unfolded + rhs);
  ProofState accepted = doc(kBase + kIH + unfolded + "  = (induction hypothesis)\n  bin(phi) + bin(psi) + 2\n" + rhs);
  Diagnosis d = diagnose(pb(), started, accepted);
  CHECK(d.outcome == Outcome::Expected);
  CHECK(std::any_of(d.rules.begin(), d.rules.end(), [](const Rule& r) { return r.kind == RuleKind::ApplyIH; }));

  CHECK(diagnose(pb(), started, started).outcome == Outcome::Similar);

  Diagnosis intro = diagnose(pb(), ready(), doc(kBase + kIH + "case ~:\n  prop(~phi)\n"));
  CHECK(intro.outcome == Outcome::Expected);

  Diagnosis detour = diagnose(pb(), ready(), doc(kBase + kIH + "case ->:\n  prop(phi -> psi)\n"));
  CHECK(detour.outcome == Outcome::Detour);

  Diagnosis several = diagnose(pb(), ready(), doc(kBase + kIH + "case ~:\n  prop(~phi)\n  = (definition prop)\n  prop(phi)\n"));
  CHECK(several.outcome == Outcome::CorrectMultipleSteps);

  Diagnosis similar =
      diagnose(pb(), started, doc(kBase + kIH + unfolded + "  = (calculation)\n  prop(psi) + prop(phi)\n" + rhs));
  CHECK(similar.outcome == Outcome::Similar);

  // Applying the hypotheses before the rhs is written down is correct but
  // not what the strategy does next.
  Diagnosis early = diagnose(pb(), doc(kBase + kIH + unfolded),
                             doc(kBase + kIH + unfolded + "  = (induction hypothesis)\n  bin(phi) + 1 + bin(psi) + 1\n"));
  CHECK(early.outcome == Outcome::Detour);
}

TEST_CASE("every outcome is reachable and named") {
  std::set<std::string> names;
  for (Outcome o : {Outcome::BuggyViolation, Outcome::UnknownViolation, Outcome::Similar, Outcome::Expected,
                    Outcome::Detour, Outcome::CorrectMultipleSteps})
    names.insert(std::string(to_string(o)));
  CHECK(names == std::set<std::string>{"buggy", "unknown", "similar", "expected", "detour", "multiple-steps"});
}

TEST_CASE("resubmission is similar") {
  for (const auto& spec : catalog()) {
    ProofState s = derivation(spec);
    CHECK(diagnose(spec, s, s).outcome == Outcome::Similar);
    CHECK(diagnose(spec, new_proof(spec), new_proof(spec)).outcome == Outcome::Similar);
  }
}

TEST_CASE("solver states satisfy every constraint") {
  for (const auto& spec : catalog()) CHECK_MESSAGE(all_satisfied(check_constraints(spec, derivation(spec))), spec.id);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    ExerciseSpec g = generate_exercise(seed);
    CHECK_MESSAGE(all_satisfied(check_constraints(g, derivation(g))), seed);
  }
}

TEST_CASE("every strategy step is expected") {
  for (const auto& spec : catalog()) {
    ProofState s = new_proof(spec);
    for (int i = 0; i < 200; ++i) {
      NextStep ns = next_step(spec, s, hint_focus(spec, s, nullptr));
      if (ns.complete) break;
      REQUIRE(ns.step);
      ProofState t = apply_step(spec, s, *ns.step);
      Diagnosis d = diagnose(spec, s, t);
      CHECK_MESSAGE((d.outcome == Outcome::Expected || d.outcome == Outcome::Similar), spec.id << " step " << i);
      s = t;
    }
    CHECK(is_done(spec, s));
  }
}

TEST_CASE("guidance") {
  Guidance fresh = soft_status(pb(), new_proof(pb()));
  REQUIRE_FALSE(fresh.sections.empty());
  CHECK(fresh.sections[0].status == SoftStatus::NotIntroduced);
  CHECK(fresh.text == "What do you have to prove in the base case?");

  Guidance base_done = soft_status(pb(), doc(kBase));
  CHECK(base_done.sections[0].status == SoftStatus::Finished);
  CHECK(base_done.text == "The base case is finished, continue with the formulation of the induction hypothesis.");

  Guidance done = soft_status(pb(), derivation(pb()));
  for (const auto& s : done.sections) CHECK(s.status == SoftStatus::Finished);
  CHECK(done.text == "Proof complete.");

  Guidance partial = soft_status(pb(), doc(kBase + kIH + "case ~:\n  prop(~phi)\n"));
  CHECK(partial.text.find("~phi") != std::string::npos);
}

TEST_CASE("hints refuse broken states") {
  ProofState broken = doc(kBase + kIH + "case /\\:\n  prop(p /\\ q)\n");
  try {
    checked_hint(pb(), broken, 1);
    FAIL("hinted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateInvalid);
  }
  CHECK_FALSE(checked_hint(pb(), ready(), 1).text.empty());
}

TEST_CASE("replacement catalog") {
  auto original = constraint_catalog();
  auto texts = original;
  for (auto& c : texts) c.message_text = "[" + c.id + "]";
  install_constraint_catalog(texts);
  CHECK(constraint_info("missing-case").message_text == "[missing-case]");
  Diagnosis d = after_ready("case /\\:\n  prop(p /\\ q)\n");
  CHECK(d.message_text == "[instantiation-with-atoms]");
  install_constraint_catalog(original);
  texts.pop_back();
  try {
    install_constraint_catalog(texts);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK(constraint_info("missing-case").message_text != "[missing-case]");
}
