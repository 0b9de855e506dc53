#include <doctest.h>

#include "induction/exercise_json.hpp"
#include "induction/service.hpp"

using namespace induction;
using nlohmann::json;

namespace {

const std::string kBase =
    "exercise: prop-bin\nbase p:\n  prop(p)\n  = (definition prop)\n  1\n  ^ 0 + 1\n  = (definition bin)\n  ^ bin(p) + 1\n"
    "IH:\n  prop(phi) = bin(phi) + 1\n  prop(psi) = bin(psi) + 1\n";
const std::string kAndOpen = "case /\\:\n  prop(phi /\\ psi)\n  = (definition prop)\n  prop(phi) + prop(psi)\n"
                             "  ^ bin(phi /\\ psi) + 1\n";

Response post(const char* path, const json& body) { return dispatch("POST", path, body.dump()); }

}  // namespace

TEST_CASE("exercise listing") {
  Response r = dispatch("GET", "/exercises", "");
  CHECK(r.status == 200);
  REQUIRE(r.body["payload"].is_array());
  std::vector<std::string> ids;
  for (const auto& e : r.body["payload"]) ids.push_back(e["id"]);
  CHECK(ids == std::vector<std::string>{"prop-bin", "vala-valb", "star-length", "fg-commute", "len-star"});

  Response one = dispatch("GET", "/exercises/prop-bin", "");
  CHECK(one.status == 200);
  ExerciseSpec spec = exercise_from_json(one.body["payload"]);
  CHECK(print_statement(spec.theorem) == "prop(phi) = bin(phi) + 1");

  Response missing = dispatch("GET", "/exercises/nope", "");
  CHECK(missing.status == 404);
  CHECK(missing.body["ok"] == false);
  CHECK(missing.body["error"]["code"] == "unknown-exercise");

  Response catalog = dispatch("GET", "/constraint-catalog", "");
  CHECK(catalog.body["payload"].size() == constraint_catalog().size());
}

TEST_CASE("diagnose endpoint") {
  Response expected = post("/diagnose", {{"exerciseId", "prop-bin"},
                                         {"prevState", kBase + kAndOpen},
                                         {"state", kBase + "case /\\:\n  prop(phi /\\ psi)\n  = (definition prop)\n"
                                                           "  prop(phi) + prop(psi)\n  = (induction hypothesis)\n"
                                                           "  bin(phi) + 1 + bin(psi) + 1\n  ^ bin(phi /\\ psi) + 1\n"}});
  CHECK(expected.status == 200);
  CHECK(expected.body["payload"]["outcome"] == "expected");
  CHECK(expected.outcome == "expected");
  CHECK(expected.exercise_id == "prop-bin");

  Response buggy = post("/diagnose", {{"prevState", kBase}, {"state", kBase + "case /\\:\n  prop(p /\\ q)\n"}});
  CHECK(buggy.body["payload"]["outcome"] == "buggy");
  CHECK(buggy.body["payload"]["messageId"] == "instantiation-with-atoms");
  CHECK(buggy.body["payload"]["location"]["section"] == "case /\\");
  CHECK(buggy.body["payload"]["location"]["line"] == 1);

  Response same = post("/diagnose", {{"prevState", kBase}, {"state", kBase}});
  CHECK(same.body["payload"]["outcome"] == "similar");

  Response one_line = post("/diagnose", {{"exerciseId", "prop-bin"}, {"state", "exercise: prop-bin\nbase p:\n  prop(p) = bin(p) + 1\n"}});
  CHECK(one_line.status == 400);
  CHECK(one_line.body["error"]["code"] == "statement-on-one-line");
  CHECK(one_line.body["error"]["line"] == 3);
}

TEST_CASE("derivation and next step endpoints") {
  Response d = post("/derivation", {{"exerciseId", "prop-bin"}});
  CHECK(d.status == 200);
  CHECK(d.body["payload"]["complete"] == true);
  CHECK(d.body["payload"]["subproofs"] == json::array({"base p", "case ~", "case /\\", "case ->"}));
  std::string done = d.body["payload"]["state"];

  Response fin = post("/nextstep", {{"state", done}});
  CHECK(fin.body["payload"]["complete"] == true);

  Response first = post("/nextstep", {{"exerciseId", "prop-bin"}, {"state", ""}});
  CHECK(first.body["payload"]["complete"] == false);
  CHECK(first.body["payload"]["step"]["line"] == "prop(p)");
  CHECK(first.body["payload"]["state"].get<std::string>().find("prop(p)") != std::string::npos);
}

TEST_CASE("hint endpoint") {
  Response h = post("/hint", {{"state", kBase + kAndOpen.substr(0, kAndOpen.find("  =")) + "  ^ bin(phi /\\ psi) + 1\n"},
                              {"prevState", kBase},
                              {"tier", 2}});
  CHECK(h.status == 200);
  CHECK(h.body["payload"]["text"].get<std::string>().find("definition of prop") != std::string::npos);

  Response bad = post("/hint", {{"state", kBase}, {"tier", 7}});
  CHECK(bad.status == 400);

  Response broken = post("/hint", {{"state", kBase + "case /\\:\n  prop(p /\\ q)\n"}});
  CHECK(broken.status == 409);
  CHECK(broken.body["error"]["code"] == "state-invalid");
}

TEST_CASE("constraints endpoint") {
  Response r = post("/constraints", {{"state", kBase}});
  CHECK(r.status == 200);
  CHECK(r.body["payload"]["satisfied"] == false);
  CHECK(r.body["payload"]["softStatus"]["guidanceId"] == "guidance-start");
  bool missing_case = false;
  for (const auto& e : r.body["payload"]["results"])
    if (e["id"] == "missing-case" && e["satisfied"] == false) missing_case = true;
  CHECK(missing_case);
}

TEST_CASE("inline exercises") {
  ExerciseSpec g = generate_exercise(5);
  Response r = post("/derivation", {{"exercise", exercise_to_json(g)}});
  CHECK(r.status == 200);
  CHECK(r.body["payload"]["complete"] == true);

  ExerciseSpec wrong = catalog_exercise("prop-bin");
  wrong.id = "wrong";
  wrong.theorem = parse_statement("prop(phi) = bin(phi)");
  Response nope = post("/derivation", {{"exercise", exercise_to_json(wrong)}});
  CHECK(nope.status == 422);
  CHECK(nope.body["error"]["code"] == "not-provable");
}

TEST_CASE("request errors") {
  CHECK(dispatch("POST", "/diagnose", "{not json").status == 400);
  CHECK(dispatch("POST", "/diagnose", "[]").status == 400);
  CHECK(dispatch("POST", "/nowhere", "{}").status == 404);
  CHECK(dispatch("DELETE", "/exercises", "").status == 405);
  CHECK(post("/derivation", {{"exerciseId", "nope"}}).status == 404);
}

TEST_CASE("call log lines") {
  Response r = post("/derivation", {{"exerciseId", "prop-bin"}});
  json line = json::parse(log_line("/derivation", r));
  CHECK(line["endpoint"] == "/derivation");
  CHECK(line["exerciseId"] == "prop-bin");
  CHECK(line["status"] == 200);
  CHECK(line["timestamp"].get<std::string>().size() == 24);
}
