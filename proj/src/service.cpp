#include "induction/service.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>

#include <httplib.h>

#include "induction/exercise_json.hpp"

namespace induction {

using nlohmann::json;

namespace {

struct Request {
  json body;
  std::optional<ExerciseSpec> owned;
  const ExerciseSpec* spec = nullptr;
};

int status_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Syntax:
    case ErrorCode::UnknownConnective:
    case ErrorCode::Parse:
    case ErrorCode::StatementOnOneLine:
    case ErrorCode::InvalidExercise: return 400;
    case ErrorCode::UnknownExercise: return 404;
    case ErrorCode::StateInvalid:
    case ErrorCode::SubproofClosed:
    case ErrorCode::UnknownSubproof: return 409;
    case ErrorCode::NotProvable: return 422;
    default: return 500;
  }
}

Response ok(json payload, std::string exercise_id = {}, std::string outcome = "ok") {
  return {200, {{"ok", true}, {"payload", std::move(payload)}}, std::move(exercise_id), std::move(outcome)};
}

Response failure(int status, std::string_view code, const std::string& message, std::size_t where = Error::npos) {
  json err{{"code", code}, {"message", message}};
  if (where != Error::npos) err["line"] = where;
  return {status, {{"ok", false}, {"error", err}}, {}, std::string(code)};
}

std::string text_field(const json& body, const char* key) {
  if (!body.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  if (!body[key].is_string()) throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be a string");
  return body[key].get<std::string>();
}

std::string header_id(std::string_view doc) {
  std::istringstream in{std::string(doc)};
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    if (line.compare(b, 9, "exercise:") != 0) return {};
    auto id = line.substr(b + 9);
    auto s = id.find_first_not_of(" \t");
    auto e = id.find_last_not_of(" \t\r");
    return s == std::string::npos ? std::string() : id.substr(s, e - s + 1);
  }
  return {};
}

// The exercise comes from an inline definition, an id, or the header of the
// state document.
void resolve_exercise(Request& r, const char* state_key) {
  if (r.body.contains("exercise") && r.body["exercise"].is_object()) {
    r.owned = exercise_from_json(r.body["exercise"]);
    require_valid(*r.owned);
    r.spec = &*r.owned;
    return;
  }
  std::string id;
  if (r.body.contains("exerciseId"))
    id = text_field(r.body, "exerciseId");
  else if (state_key && r.body.contains(state_key) && r.body[state_key].is_string())
    id = header_id(r.body[state_key].get<std::string>());
  if (id.empty()) throw Error(ErrorCode::Parse, "missing field 'exerciseId'");
  r.spec = &catalog_exercise(id);
}

ProofState state_field(const Request& r, const char* key, bool optional_empty) {
  if (optional_empty && (!r.body.contains(key) || r.body[key].is_null())) return new_proof(*r.spec);
  std::string doc = text_field(r.body, key);
  if (doc.find_first_not_of(" \t\r\n") == std::string::npos)
    return new_proof(*r.spec);
  ProofState s = deserialize(doc, r.spec);
  if (s.exercise_id != r.spec->id)
    throw Error(ErrorCode::Parse, "the document is for exercise '" + s.exercise_id + "', not '" + r.spec->id + "'");
  return s;
}

json exercise_summary(const ExerciseSpec& e) {
  return {{"id", e.id}, {"description", e.description}, {"theorem", print_statement(e.theorem)}};
}

Response handle_diagnose(Request& r) {
  resolve_exercise(r, "state");
  ProofState prev = state_field(r, "prevState", true);
  ProofState sub = state_field(r, "state", false);
  Diagnosis d = diagnose(*r.spec, prev, sub);
  return ok(diagnosis_to_json(d), r.spec->id, std::string(to_string(d.outcome)));
}

Response handle_hint(Request& r) {
  resolve_exercise(r, "state");
  ProofState s = state_field(r, "state", false);
  std::optional<ProofState> prev;
  if (r.body.contains("prevState") && r.body["prevState"].is_string()) prev = state_field(r, "prevState", true);
  int tier = 1;
  if (r.body.contains("tier")) {
    if (!r.body["tier"].is_number_integer()) throw Error(ErrorCode::Parse, "field 'tier' must be 1, 2 or 3");
    tier = r.body["tier"].get<int>();
  }
  Hint h = checked_hint(*r.spec, s, tier, prev ? &*prev : nullptr);
  json p{{"complete", h.complete}, {"tier", tier}, {"text", h.text}};
  if (h.step) p["step"] = step_to_json(*h.step);
  return ok(p, r.spec->id, h.complete ? "complete" : "hint");
}

Response handle_nextstep(Request& r) {
  resolve_exercise(r, "state");
  ProofState s = state_field(r, "state", false);
  NextStep ns = checked_next_step(*r.spec, s);
  json p{{"complete", ns.complete}};
  if (ns.step) {
    p["step"] = step_to_json(*ns.step);
    p["state"] = serialize(apply_step(*r.spec, s, *ns.step));
  }
  return ok(p, r.spec->id, ns.complete ? "complete" : "step");
}

Response handle_derivation(Request& r) {
  resolve_exercise(r, nullptr);
  ProofState s = derivation(*r.spec);
  json sections = json::array();
  for (const auto& sp : s.subproofs) sections.push_back(to_string(sp.ref));
  return ok({{"complete", is_done(*r.spec, s)}, {"state", serialize(s)}, {"subproofs", sections}}, r.spec->id,
            "derivation");
}

Response handle_constraints(Request& r) {
  resolve_exercise(r, "state");
  ProofState s = state_field(r, "state", false);
  auto results = check_constraints(*r.spec, s);
  json p = constraints_to_json(results);
  p["softStatus"] = guidance_to_json(soft_status(*r.spec, s));
  return ok(p, r.spec->id, all_satisfied(results) ? "satisfied" : "violated");
}

std::string timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%S") << '.' << std::setw(3) << std::setfill('0') << ms << 'Z';
  return out.str();
}

}  // namespace

json location_to_json(const Location& l) {
  return {{"section", l.section}, {"chain", std::string(to_string(l.chain))}, {"line", l.line}};
}

json step_to_json(const Step& s) {
  json j{{"rule", std::string(to_string(s.rule.kind))},
         {"description", describe(s.rule)},
         {"obligation", s.hint(1)},
         {"text", s.hint(3)}};
  if (!s.rule.function.empty()) j["function"] = s.rule.function;
  if (s.kind == Step::Kind::StateIH) {
    j["kind"] = "state-ih";
    j["hypothesis"] = print_statement(s.hypothesis);
    return j;
  }
  j["kind"] = "add-line";
  j["subproof"] = to_string(s.ref);
  j["chain"] = std::string(to_string(s.end));
  j["line"] = print_expr(s.line.expr);
  j["opensSubproof"] = s.opens_subproof;
  if (s.line.rel) j["relation"] = std::string(symbol(*s.line.rel));
  std::string m = print_motivation(s.line.motivation);
  if (!m.empty()) j["motivation"] = m;
  return j;
}

json guidance_to_json(const Guidance& g) {
  json sections = json::array();
  for (const auto& s : g.sections) sections.push_back({{"section", s.section}, {"status", std::string(to_string(s.status))}});
  return {{"sections", sections}, {"guidanceId", g.message_id}, {"guidanceText", g.text}};
}

json diagnosis_to_json(const Diagnosis& d) {
  json j{{"outcome", std::string(to_string(d.outcome))}};
  if (!d.message_id.empty()) {
    j["messageId"] = d.message_id;
    j["messageText"] = d.message_text;
  }
  if (d.location) j["location"] = location_to_json(*d.location);
  json rules = json::array();
  for (const auto& r : d.rules) rules.push_back(std::string(to_string(r.kind)));
  j["rules"] = rules;
  json g = guidance_to_json(d.guidance);
  j["softStatus"] = g["sections"];
  j["guidanceId"] = g["guidanceId"];
  j["guidanceText"] = g["guidanceText"];
  return j;
}

json constraints_to_json(const std::vector<ConstraintResult>& results) {
  json list = json::array();
  for (const auto& r : results) {
    json e{{"id", r.id}, {"satisfied", r.satisfied}};
    if (r.location) e["location"] = location_to_json(*r.location);
    if (!r.detail.empty()) e["detail"] = r.detail;
    list.push_back(e);
  }
  return {{"results", list}, {"satisfied", all_satisfied(results)}};
}

Response dispatch(std::string_view method, std::string_view path, std::string_view body) {
  try {
    if (method == "GET") {
      if (path == "/exercises") {
        json list = json::array();
        for (const auto& e : catalog()) list.push_back(exercise_summary(e));
        return ok(list);
      }
      if (path.substr(0, 11) == "/exercises/" && path.size() > 11) {
        std::string id(path.substr(11));
        const ExerciseSpec* e = find_exercise(id);
        if (!e) return failure(404, to_string(ErrorCode::UnknownExercise), "no exercise '" + id + "'");
        return ok(exercise_to_json(*e), e->id);
      }
      if (path == "/constraint-catalog") return ok(json::parse(constraint_catalog_json()));
      return failure(404, "not-found", "no endpoint " + std::string(path));
    }
    if (method != "POST") return failure(405, "method-not-allowed", std::string(method) + " is not supported");

    Request r;
    try {
      r.body = body.empty() ? json::object() : json::parse(body);
    } catch (const json::exception& e) {
      return failure(400, to_string(ErrorCode::Parse), std::string("malformed JSON: ") + e.what());
    }
    if (!r.body.is_object()) return failure(400, to_string(ErrorCode::Parse), "request body must be a JSON object");
    Response res;
    if (path == "/diagnose")
      res = handle_diagnose(r);
    else if (path == "/hint")
      res = handle_hint(r);
    else if (path == "/nextstep")
      res = handle_nextstep(r);
    else if (path == "/derivation")
      res = handle_derivation(r);
    else if (path == "/constraints")
      res = handle_constraints(r);
    else
      return failure(404, "not-found", "no endpoint " + std::string(path));
    return res;
  } catch (const Error& e) {
    return failure(status_for(e.code()), to_string(e.code()), e.what(), e.code() == ErrorCode::Parse ||
                                                                           e.code() == ErrorCode::StatementOnOneLine
                                                                       ? e.where()
                                                                       : Error::npos);
  } catch (const std::exception& e) {
    return failure(500, "internal", e.what());
  }
}

std::string log_line(std::string_view endpoint, const Response& r) {
  json j{{"timestamp", timestamp()}, {"endpoint", endpoint}, {"status", r.status}, {"outcome", r.outcome}};
  j["exerciseId"] = r.exercise_id.empty() ? json(nullptr) : json(r.exercise_id);
  return j.dump();
}

bool serve(const ServerOptions& options) {
  httplib::Server server;
  std::mutex log_mutex;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  if (options.static_dir && !server.set_mount_point("/", *options.static_dir)) return false;

  auto handle = [&](const httplib::Request& req, httplib::Response& res) {
    Response r = dispatch(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
    if (options.log) {
      std::lock_guard lock(log_mutex);
      *options.log << log_line(req.path, r) << '\n' << std::flush;
    }
  };
  server.Get(R"(/exercises(/[^/]+)?)", handle);
  server.Get("/constraint-catalog", handle);
  server.Post(R"(/(diagnose|hint|nextstep|derivation|constraints))", handle);
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  return server.listen(options.host, options.port);
}

}  // namespace induction
