#include <doctest.h>

#include "induction/syntax.hpp"

using namespace induction;

namespace {

const LanguageSpec kNegAndImp{{"p", "q", "r"}, {Connective::Neg, Connective::And, Connective::Imp}};
const LanguageSpec kFull{{"p", "q", "r"}, {Connective::Neg, Connective::And, Connective::Or, Connective::Imp}};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("parse negated atom") {
  Formula f = parse_formula("~p", kNegAndImp);
  CHECK(f == Formula::neg(Formula::atom("p")));
}

TEST_CASE("phi and psi are metavariables") {
  Formula f = parse_formula("phi /\\ psi", kNegAndImp);
  REQUIRE(f.kind() == Formula::Kind::Bin);
  CHECK(f.connective() == Connective::And);
  CHECK(f.left() == Formula::meta("phi"));
  CHECK(f.right() == Formula::meta("psi"));
}

TEST_CASE("connective outside the language") {
  LanguageSpec lang{{"p", "q"}, {Connective::And, Connective::Imp}};
  CHECK(code_of([&] { parse_formula("p \\/ q", lang); }) == ErrorCode::UnknownConnective);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_formula("p /\\", kFull);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Syntax);
    CHECK(e.where() != Error::npos);
  }
  CHECK(code_of([] { parse_formula("(p /\\ q", kFull); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_formula("p q", kFull); }) == ErrorCode::Syntax);
}

TEST_CASE("printing") {
  auto p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  CHECK(print_formula(Formula::neg(p)) == "~p");
  CHECK(print_formula(Formula::bin(Connective::Or, Formula::neg(p), q)) == "~p \\/ q");
  CHECK(print_formula(Formula::bin(Connective::And, p, Formula::bin(Connective::Or, q, r))) == "p /\\ (q \\/ r)");
  CHECK(print_formula(Formula::neg(Formula::bin(Connective::Or, Formula::neg(p), Formula::neg(q)))) ==
        "~(~p \\/ ~q)");
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_formula("p /\\ q \\/ r", kFull) ==
        Formula::bin(Connective::Or, Formula::bin(Connective::And, Formula::atom("p"), Formula::atom("q")),
                     Formula::atom("r")));
  // Implication associates to the right.
  CHECK(parse_formula("p -> q -> r", kFull) ==
        Formula::bin(Connective::Imp, Formula::atom("p"),
                     Formula::bin(Connective::Imp, Formula::atom("q"), Formula::atom("r"))));
}

TEST_CASE("print then parse is the identity") {
  for (const char* text : {"~~p", "p -> (q -> r)", "(p -> q) -> r", "~(p /\\ q) \\/ r", "phi /\\ ~psi",
                           "(p \\/ q) /\\ (q \\/ r)"}) {
    Formula f = parse_formula(text, kFull);
    CHECK(parse_formula(print_formula(f), kFull) == f);
  }
}

TEST_CASE("substitution") {
  auto p = Formula::atom("p"), q = Formula::atom("q");
  CHECK(substitute(Formula::neg(Formula::subst("s")), {{"s", Formula::neg(p)}}) == Formula::neg(Formula::neg(p)));
  Formula tmpl = Formula::bin(Connective::Or, Formula::subst("s1"), Formula::subst("s2"));
  CHECK(substitute(tmpl, {{"s1", Formula::neg(p)}, {"s2", Formula::neg(q)}}) ==
        Formula::bin(Connective::Or, Formula::neg(p), Formula::neg(q)));
  CHECK(substitute(p, {}) == p);
}

TEST_CASE("placeholders only in templates") {
  Formula t = parse_formula("~s1 \\/ s2", kFull, true);
  CHECK(t.left().operand() == Formula::subst("s1"));
  CHECK(parse_formula("s1", kFull).kind() == Formula::Kind::Atom);
}

TEST_CASE("size and connectives") {
  Formula f = parse_formula("~(p /\\ q) -> p", kFull);
  CHECK(f.size() == 3);
  auto cs = connectives_of(f);
  CHECK(cs.size() == 3);
  CHECK(case_pattern(Connective::And) == "phi /\\ psi");
  CHECK(case_pattern(Connective::Neg) == "~phi");
}
