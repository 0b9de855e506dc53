#include "induction/exercise_json.hpp"

namespace induction {

namespace {

constexpr const char* kCatalog = R"json([
  {
    "id": "prop-bin",
    "description": "prop counts the occurrences of propositional letters in a formula and bin counts the occurrences of binary connectives. Prove that prop(phi) = bin(phi) + 1 for every formula phi.",
    "language": {"atoms": ["p", "q", "r"], "connectives": ["~", "/\\", "->"]},
    "functions": [
      {"name": "prop", "kind": "counting", "atom": 1, "neg": {"a": 0, "b": 1},
       "binary": {"/\\": {"a": 0, "b": 1, "c": 1}, "->": {"a": 0, "b": 1, "c": 1}}},
      {"name": "bin", "kind": "counting", "atom": 0, "neg": {"a": 0, "b": 1},
       "binary": {"/\\": {"a": 1, "b": 1, "c": 1}, "->": {"a": 1, "b": 1, "c": 1}}}
    ],
    "theorem": {"lhs": "prop(phi)", "comp": "=", "rhs": "bin(phi) + 1"}
  },
  {
    "id": "vala-valb",
    "description": "ValA and ValB are valuations such that ValA(p) <= ValB(p) for every atom p. Prove that ValA(phi) <= ValB(phi) for every formula phi built with /\\ and \\/.",
    "language": {"atoms": ["p", "q", "r"], "connectives": ["/\\", "\\/"]},
    "functions": [
      {"name": "ValA", "kind": "valuation", "properties": [{"comp": "<=", "other": "ValB"}]},
      {"name": "ValB", "kind": "valuation", "properties": []}
    ],
    "theorem": {"lhs": "ValA(phi)", "comp": "<=", "rhs": "ValB(phi)"}
  },
  {
    "id": "star-length",
    "description": "star replaces every atom by its negation, conjunctions by disjunctions and disjunctions by conjunctions. length returns the length of a formula. Prove that length(star(phi)) <= 2 * length(phi).",
    "language": {"atoms": ["p", "q", "r"], "connectives": ["/\\", "\\/"]},
    "functions": [
      {"name": "star", "kind": "transform",
       "domain": {"atoms": ["p", "q", "r"], "connectives": ["/\\", "\\/"]},
       "codomain": {"atoms": ["p", "q", "r"], "connectives": ["~", "/\\", "\\/"]},
       "atom": "~s", "binary": {"/\\": "s1 \\/ s2", "\\/": "s1 /\\ s2"}},
      {"name": "length", "kind": "counting", "atom": 1, "neg": {"a": 1, "b": 1},
       "binary": {"/\\": {"a": 1, "b": 1, "c": 1}, "\\/": {"a": 1, "b": 1, "c": 1}}}
    ],
    "theorem": {"lhs": "length(star(phi))", "comp": "<=", "rhs": "2*length(phi)"}
  },
  {
    "id": "fg-commute",
    "description": "f rewrites every conjunction phi /\\ psi into ~(~phi \\/ ~psi); g rewrites every implication phi -> psi into ~phi \\/ psi. Prove that f(g(phi)) = g(f(phi)).",
    "language": {"atoms": ["p", "q", "r"], "connectives": ["~", "/\\", "\\/", "->"]},
    "functions": [
      {"name": "f", "kind": "transform", "atom": "s", "neg": "~s",
       "binary": {"/\\": "~(~s1 \\/ ~s2)", "\\/": "s1 \\/ s2", "->": "s1 -> s2"}},
      {"name": "g", "kind": "transform", "atom": "s", "neg": "~s",
       "binary": {"/\\": "s1 /\\ s2", "\\/": "s1 \\/ s2", "->": "~s1 \\/ s2"}}
    ],
    "theorem": {"lhs": "f(g(phi))", "comp": "=", "rhs": "g(f(phi))"}
  },
  {
    "id": "len-star",
    "description": "len returns the length of a formula and star rewrites every conjunction phi /\\ psi into ~(~phi \\/ ~psi). Prove that len(star(phi)) <= 3 * len(phi) - 2.",
    "language": {"atoms": ["p", "q", "r"], "connectives": ["~", "/\\", "\\/", "->"]},
    "functions": [
      {"name": "star", "kind": "transform", "atom": "s", "neg": "~s",
       "binary": {"/\\": "~(~s1 \\/ ~s2)", "\\/": "s1 \\/ s2", "->": "s1 -> s2"}},
      {"name": "len", "kind": "counting", "atom": 1, "neg": {"a": 1, "b": 1},
       "binary": {"/\\": {"a": 1, "b": 1, "c": 1}, "\\/": {"a": 1, "b": 1, "c": 1}, "->": {"a": 1, "b": 1, "c": 1}}}
    ],
    "theorem": {"lhs": "len(star(phi))", "comp": "<=", "rhs": "3*len(phi) - 2"}
  }
])json";

}  // namespace

const std::vector<ExerciseSpec>& catalog() {
  static const std::vector<ExerciseSpec> specs = [] {
    std::vector<ExerciseSpec> out;
    for (const auto& j : nlohmann::json::parse(kCatalog)) out.push_back(exercise_from_json(j));
    return out;
  }();
  return specs;
}

}  // namespace induction
