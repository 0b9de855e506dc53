#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "induction/diagnosis.hpp"

namespace induction {

struct Response {
  int status = 200;
  nlohmann::json body;  // {ok, payload} or {ok, error: {code, message}}
  // What the call log records besides the timestamp.
  std::string exercise_id;
  std::string outcome;
};

// Stateless request handling; every call carries the full proof document.
// Endpoints: GET /exercises, GET /exercises/{id}, GET /constraint-catalog,
// POST /diagnose, /hint, /nextstep, /derivation, /constraints.
Response dispatch(std::string_view method, std::string_view path, std::string_view body);

// {timestamp, endpoint, exerciseId, outcome} as one line.
std::string log_line(std::string_view endpoint, const Response& r);

nlohmann::json location_to_json(const Location& l);
nlohmann::json step_to_json(const Step& s);
nlohmann::json diagnosis_to_json(const Diagnosis& d);
nlohmann::json constraints_to_json(const std::vector<ConstraintResult>& results);
nlohmann::json guidance_to_json(const Guidance& g);

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::optional<std::string> static_dir;
  std::ostream* log = nullptr;
};

// Blocks until the server stops. Returns false when the port cannot be bound.
bool serve(const ServerOptions& options);

}  // namespace induction
