#include <doctest.h>

#include "induction/solver.hpp"

using namespace induction;

namespace {

const ExerciseSpec& pb() { return catalog_exercise("prop-bin"); }
const SubproofRef kAnd = SubproofRef::inductive(Connective::And);

ProofLine line(const char* e, std::optional<Comparator> rel = std::nullopt, Motivation m = {}) {
  return {parse_expr(e), rel, std::move(m)};
}

}  // namespace

TEST_CASE("fresh proof") {
  ProofState s = new_proof(pb());
  CHECK(s.line_count() == 0);
  CHECK(phase(pb(), s) == Phase::Base);
  CHECK(serialize(s) == "exercise: prop-bin\n");
}

TEST_CASE("mandated subproofs") {
  const auto& v = catalog_exercise("vala-valb");
  CHECK(subproof_goal(v, SubproofRef::base("p")));
  CHECK(subproof_goal(v, SubproofRef::inductive(Connective::And)));
  CHECK(subproof_goal(v, SubproofRef::inductive(Connective::Or)));
  CHECK_FALSE(subproof_goal(v, SubproofRef::inductive(Connective::Neg)));
  try {
    add_line(v, new_proof(v), SubproofRef::inductive(Connective::Neg), ChainEnd::Top, line("ValA(~phi)"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSubproof);
  }
}

TEST_CASE("adding lines") {
  ProofState s = add_line(pb(), new_proof(pb()), kAnd, ChainEnd::Top, line("prop(phi /\\ psi)"));
  s = add_line(pb(), s, kAnd, ChainEnd::Top, line("prop(phi) + prop(psi)", Comparator::Eq, Motivation::definition("prop")));
  CHECK(s.find(kAnd)->top.size() == 2);
  s = add_line(pb(), s, kAnd, ChainEnd::Bottom, line("bin(phi /\\ psi) + 1"));
  CHECK(s.find(kAnd)->bottom.size() == 1);
  CHECK_FALSE(s.find(kAnd)->closed);
}

TEST_CASE("closed subproofs reject lines") {
  ProofState s = derivation(pb());
  REQUIRE(s.find(kAnd)->closed);
  try {
    add_line(pb(), s, kAnd, ChainEnd::Top, line("1"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SubproofClosed);
  }
}

TEST_CASE("induction hypotheses") {
  Statement phi = parse_statement("prop(phi) = bin(phi) + 1");
  Statement psi = parse_statement("prop(psi) = bin(psi) + 1");
  ProofState s = state_ih(new_proof(pb()), phi);
  CHECK(s.hypotheses.size() == 1);
  s = state_ih(s, phi);
  CHECK(s.hypotheses.size() == 1);
  s = state_ih(s, psi);
  REQUIRE(s.hypotheses.size() == 2);
  CHECK(s.hypotheses[1] == psi);
  CHECK(hypotheses_complete(pb(), s));
}

TEST_CASE("closure by meeting chains") {
  ProofState s = new_proof(pb());
  auto ref = SubproofRef::base("p");
  s = add_line(pb(), s, ref, ChainEnd::Top, line("prop(p)"));
  s = add_line(pb(), s, ref, ChainEnd::Top, line("1", Comparator::Eq, Motivation::definition("prop")));
  CHECK_FALSE(s.find(ref)->closed);
  s = add_line(pb(), s, ref, ChainEnd::Bottom, line("bin(p) + 1"));
  CHECK_FALSE(s.find(ref)->closed);
  // The ends are equal by calculation, so no joining line is needed.
  s = add_line(pb(), s, ref, ChainEnd::Bottom, line("0 + 1", Comparator::Eq, Motivation::definition("bin")));
  CHECK(s.find(ref)->closed);
  CHECK(folded_relation(*s.find(ref)) == Comparator::Eq);
}

TEST_CASE("document round-trip") {
  for (const auto& spec : catalog()) {
    ProofState s = derivation(spec);
    std::string text = serialize(s);
    ProofState back = deserialize(text, &spec);
    CHECK_MESSAGE(back == s, spec.id);
    CHECK(serialize(back) == text);
    CHECK(is_done(spec, back));
  }
  ProofState empty = new_proof(pb());
  CHECK(deserialize(serialize(empty)) == empty);
}

TEST_CASE("malformed documents") {
  const char* bad = "exercise: prop-bin\nbase p:\n  prop(p)\n  =< (definition prop)\n  1\n";
  try {
    deserialize(bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(e.where() == 4);
  }
  try {
    deserialize("exercise: prop-bin\nbase p:\n  prop(p) = bin(p) + 1\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StatementOnOneLine);
    CHECK(e.where() == 3);
  }
}

TEST_CASE("empty entries are not errors") {
  ProofState s = deserialize("exercise: prop-bin\nbase p:\n  prop(p)\n  ?\n");
  REQUIRE(s.find(SubproofRef::base("p")));
  CHECK(s.find(SubproofRef::base("p"))->top.size() == 1);
}

TEST_CASE("phases") {
  ProofState s = derivation(pb());
  CHECK(phase(pb(), s) == Phase::Done);
  ProofState base_only;
  base_only.exercise_id = "prop-bin";
  base_only.subproofs.push_back(*s.find(SubproofRef::base("p")));
  CHECK(phase(pb(), base_only) == Phase::Hypothesis);
  base_only.hypotheses = s.hypotheses;
  CHECK(phase(pb(), base_only) == Phase::Inductive);
}

TEST_CASE("subproof names") {
  CHECK(to_string(kAnd) == "case /\\");
  CHECK(parse_subproof_ref("base q") == SubproofRef::base("q"));
  CHECK(parse_subproof_ref("case ->") == SubproofRef::inductive(Connective::Imp));
  CHECK(print_motivation(Motivation::definition("prop")) == "definition prop");
  CHECK(parse_motivation("induction hypothesis") == Motivation::hypothesis());
  CHECK(parse_motivation("given ValA") == Motivation::given("ValA"));
}
