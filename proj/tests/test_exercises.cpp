#include <doctest.h>

#include <algorithm>

#include "induction/exercise_json.hpp"
#include "oracle.hpp"

using namespace induction;

namespace {

bool has_issue(const ExerciseSpec& s, const char* code) {
  auto is = validate_exercise(s);
  return std::any_of(is.begin(), is.end(), [&](const ValidationIssue& i) { return i.code == code; });
}

ExerciseSpec with_theorem(ExerciseSpec s, const char* lhs, Comparator c, const char* rhs) {
  s.theorem = {parse_expr(lhs), c, parse_expr(rhs)};
  return s;
}

// Theorem check straight from the definitions.
bool oracle_true(const ExerciseSpec& s, std::size_t size) {
  std::vector<std::string> atoms(s.language.atoms.begin(), s.language.atoms.begin() + std::min<std::size_t>(2, s.language.atoms.size()));
  for (const auto& x : oracle::formulas(s.language, atoms, size))
    for (const auto& a : oracle::assignments(s.functions, atoms)) {
      oracle::Env env{&s.functions, {{"phi", x}}, a};
      if (!oracle::relation_holds(s.theorem.lhs, s.theorem.comparator, s.theorem.rhs, env)) return false;
    }
  return true;
}

std::vector<std::string> printed(const std::vector<Statement>& ss) {
  std::vector<std::string> out;
  for (const auto& s : ss) out.push_back(print_statement(s));
  return out;
}

}  // namespace

TEST_CASE("catalog exercises validate") {
  CHECK(catalog().size() == 5);
  for (const auto& s : catalog()) CHECK_MESSAGE(validate_exercise(s).empty(), s.id);
  CHECK(find_exercise("nope") == nullptr);
  try {
    catalog_exercise("nope");
    FAIL("found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownExercise);
  }
}

TEST_CASE("lhs must be a single term") {
  auto s = with_theorem(catalog_exercise("prop-bin"), "prop(phi) + bin(phi)", Comparator::Eq, "2*bin(phi) + 1");
  CHECK(has_issue(s, "LhsNotSingleTerm"));
  try {
    require_valid(s);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidExercise);
  }
}

TEST_CASE("equality theorems need equality properties") {
  auto s = with_theorem(catalog_exercise("vala-valb"), "ValA(phi)", Comparator::Eq, "ValB(phi)");
  CHECK(has_issue(s, "EqualityNeedsEqualityProperties"));
}

TEST_CASE("case plans") {
  CasePlan pb = case_analysis(catalog_exercise("prop-bin"));
  REQUIRE(pb.base_cases.size() == 1);
  CHECK(print_statement(pb.base_cases[0].goal) == "prop(p) = bin(p) + 1");
  CHECK(printed(pb.hypotheses) == std::vector<std::string>{"prop(phi) = bin(phi) + 1", "prop(psi) = bin(psi) + 1"});
  REQUIRE(pb.inductive_cases.size() == 3);
  CHECK(pb.inductive_cases[0].connective == Connective::Neg);
  CHECK(pb.inductive_cases[1].connective == Connective::And);
  CHECK(pb.inductive_cases[2].connective == Connective::Imp);
  CHECK(print_statement(pb.inductive_cases[1].goal) == "prop(phi /\\ psi) = bin(phi /\\ psi) + 1");

  CasePlan v = case_analysis(catalog_exercise("vala-valb"));
  REQUIRE(v.base_cases.size() == 1);
  CHECK(print_statement(v.base_cases[0].goal) == "ValA(p) <= ValB(p)");
  REQUIRE(v.inductive_cases.size() == 2);
  CHECK(v.inductive_cases[0].connective == Connective::And);
  CHECK(v.inductive_cases[1].connective == Connective::Or);

  ExerciseSpec one = catalog_exercise("prop-bin");
  one.language.connectives = {Connective::And};
  CasePlan p1 = case_analysis(one);
  CHECK(p1.inductive_cases.size() == 1);
}

TEST_CASE("special atoms get their own base case") {
  ExerciseSpec s = catalog_exercise("prop-bin");
  std::vector<FunctionDef> defs = s.functions.defs();
  auto& prop = std::get<CountingFunction>(defs[0]);
  auto& bin = std::get<CountingFunction>(defs[1]);
  prop.atom_values["q"] = 3;
  bin.atom_values["q"] = 2;
  s.functions = FunctionTable(defs);
  CasePlan plan = case_analysis(s);
  REQUIRE(plan.base_cases.size() == 2);
  CHECK(plan.base_cases[1].atom == "q");
}

TEST_CASE("case instances") {
  CHECK(print_expr(case_instance(Connective::Neg)) == "~phi");
  CHECK(print_expr(case_instance(Connective::Imp)) == "phi -> psi");
}

TEST_CASE("verification by enumeration") {
  CHECK(verify_by_enumeration(catalog_exercise("prop-bin"), 4, 2));
  CHECK(verify_by_enumeration(catalog_exercise("star-length"), 4, 2));
  auto wrong = with_theorem(catalog_exercise("prop-bin"), "prop(phi)", Comparator::Eq, "bin(phi)");
  CHECK_FALSE(verify_by_enumeration(wrong, 1, 2));
  auto cex = find_counterexample(wrong, 1, 2);
  REQUIRE(cex);
  CHECK(print_formula(*cex) == "p");
  CHECK_FALSE(oracle_true(wrong, 1));
}

TEST_CASE("enumeration matches the independent oracle") {
  for (const auto& s : catalog()) CHECK_MESSAGE(oracle_true(s, 3), s.id);
  auto sizes = enumerate_formulas(catalog_exercise("prop-bin").language, 2, 2);
  CHECK(sizes.size() == oracle::formulas(catalog_exercise("prop-bin").language, {"p", "q"}, 2).size());
  CHECK(enumerate_assignments(catalog_exercise("vala-valb").functions, {"p", "q"}).size() ==
        oracle::assignments(catalog_exercise("vala-valb").functions, {"p", "q"}).size());
}

TEST_CASE("generated exercises") {
  ExerciseSpec s = generate_exercise(1);
  CHECK(validate_exercise(s).empty());
  CHECK(generate_exercise(1) == s);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    ExerciseSpec g = generate_exercise(seed);
    CHECK_MESSAGE(verify_by_enumeration(g, 4, 2), g.id);
    CHECK_MESSAGE(oracle_true(g, 3), g.id);
  }
}

TEST_CASE("single right-hand term") {
  GeneratorParams p;
  p.term_count = 1;
  bool saw_identity = false;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    ExerciseSpec g = generate_exercise(seed, p);
    CHECK(functions_of(g.theorem.rhs).size() == 1);
    CHECK(normalize(g.theorem.rhs).terms().size() == 1);
    if (!g.functions.transform("g")) {
      saw_identity = true;
      CHECK(g.theorem.lhs == Expr::app("f", Expr::meta("phi")));
    }
  }
  CHECK(saw_identity);
}

TEST_CASE("exercise json round-trip") {
  for (const auto& s : catalog()) CHECK(exercise_from_json(exercise_to_json(s)) == s);
  ExerciseSpec g = generate_exercise(3);
  CHECK(exercise_from_json(exercise_to_json(g)) == g);
  try {
    exercise_from_json(nlohmann::json::parse(R"({"id": "x"})"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidExercise);
  }
}
