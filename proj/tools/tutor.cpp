#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "induction/exercise_json.hpp"
#include "induction/fuzz.hpp"
#include "induction/service.hpp"

using namespace induction;

namespace {

constexpr int kViolations = 1;
constexpr int kParseError = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExerciseSpec load_exercise_file(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  ExerciseSpec spec = exercise_from_json(j);
  require_valid(spec);
  return spec;
}

struct Loaded {
  ExerciseSpec spec;
  ProofState state;
};

Loaded load_proof(const std::string& path, const std::string& exercise_file) {
  std::string text = read_file(path);
  if (!exercise_file.empty()) {
    ExerciseSpec spec = load_exercise_file(exercise_file);
    ProofState s = deserialize(text, &spec);
    return {spec, s};
  }
  ProofState s = deserialize(text);
  return {catalog_exercise(s.exercise_id), s};
}

std::string where(const Location& l) {
  return l.section + ", " + std::string(to_string(l.chain)) + " chain, line " + std::to_string(l.line);
}

int cmd_list() {
  for (const auto& e : catalog()) std::cout << e.id << "  " << print_statement(e.theorem) << "\n";
  return 0;
}

int cmd_solve(const std::string& id, const std::string& exercise_file) {
  ExerciseSpec spec = exercise_file.empty() ? catalog_exercise(id) : load_exercise_file(exercise_file);
  ProofState s = derivation(spec);
  std::cout << serialize(s);
  CasePlan plan = case_analysis(spec);
  std::cout << "# " << plan.base_cases.size() << " base case(s), " << plan.inductive_cases.size()
            << " inductive case(s): all cases closed\n";
  return 0;
}

int cmd_check(const std::string& path, const std::string& exercise_file) {
  Loaded l = load_proof(path, exercise_file);
  auto results = check_constraints(l.spec, l.state);
  bool ok = true;
  for (const auto& r : results) {
    if (r.satisfied) continue;
    ok = false;
    const ConstraintInfo& info = constraint_info(r.id);
    std::cout << "violation " << info.message_id << " at " << where(*r.location) << ": " << info.message_text;
    if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
    std::cout << "\n";
  }
  Guidance g = soft_status(l.spec, l.state);
  for (const auto& s : g.sections) std::cout << "status " << s.section << ": " << to_string(s.status) << "\n";
  std::cout << "guidance: " << g.text << "\n";
  std::cout << (ok ? "no violations" : "violations found") << "\n";
  return ok ? 0 : kViolations;
}

int cmd_hint(const std::string& path, const std::string& exercise_file, int tier) {
  Loaded l = load_proof(path, exercise_file);
  try {
    Hint h = checked_hint(l.spec, l.state, tier);
    std::cout << h.text << "\n";
    return 0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StateInvalid) throw;
    std::cout << e.what() << "\n";
    return kViolations;
  }
}

int cmd_gen(std::uint64_t seed, std::size_t count, const GeneratorParams& params) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < count; ++i) out.push_back(exercise_to_json(generate_exercise(seed + i, params)));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_fuzz(std::size_t states, std::uint64_t seed, bool verbose) {
  FuzzOptions o;
  o.states = states;
  o.seed = seed;
  FuzzReport r = run_hint_fuzz(o);
  if (verbose)
    for (const auto& f : r.failures) std::cout << "failure: " << f << "\n";
  std::cout << "hint available: " << r.available << "/" << r.total << "\n";
  return r.available == r.total && r.total == states ? 0 : kViolations;
}

int cmd_serve(int port, const std::string& host, const std::string& static_dir, const std::string& log_file) {
  ServerOptions o;
  o.port = port;
  o.host = host;
  if (!static_dir.empty()) o.static_dir = static_dir;
  std::ofstream log;
  if (log_file.empty()) {
    o.log = &std::cerr;
  } else if (log_file != "-") {
    log.open(log_file, std::ios::app);
    if (!log) throw Error(ErrorCode::Parse, "cannot open log file " + log_file);
    o.log = &log;
  }
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!serve(o)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return kInternal;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural induction tutor: exercises, proofs, hints and diagnosis"};
  app.require_subcommand(1);
  std::string exercise_file, constraints_file;
  app.add_option("--constraints", constraints_file, "Constraint catalog JSON replacing the built-in messages");

  auto* list = app.add_subcommand("list", "List the catalog exercises");

  std::string id;
  auto* solve = app.add_subcommand("solve", "Print a complete proof");
  solve->add_option("id", id, "Exercise id")->required();
  solve->add_option("--exercise", exercise_file, "Exercise JSON file instead of the catalog entry");

  std::string proof;
  auto* check = app.add_subcommand("check", "Check a proof document against every constraint");
  check->add_option("proof", proof, "Proof document")->required();
  check->add_option("--exercise", exercise_file, "Exercise JSON file");

  int tier = 1;
  auto* hint = app.add_subcommand("hint", "Hint for the next step of a proof document");
  hint->add_option("proof", proof, "Proof document")->required();
  hint->add_option("--tier", tier, "1: obligation, 2: rule, 3: full line")->check(CLI::Range(1, 3));
  hint->add_option("--exercise", exercise_file, "Exercise JSON file");

  std::uint64_t seed = 1;
  std::size_t count = 1;
  GeneratorParams params;
  auto* gen = app.add_subcommand("gen", "Generate exercises as JSON");
  gen->add_option("--seed", seed, "First seed");
  gen->add_option("--count", count, "Number of exercises");
  gen->add_option("--connectives", params.lang_size, "Connectives in the language")->check(CLI::Range(1, 4));
  gen->add_option("--bound", params.coeff_bound, "Bound on coefficients")->check(CLI::Range(1, 9));

  std::size_t states = 1000;
  bool verbose = false;
  auto* fuzz = app.add_subcommand("fuzz", "Hint totality over fuzzed reachable states");
  fuzz->add_option("--states", states, "Number of states");
  fuzz->add_option("--seed", seed, "Random seed");
  fuzz->add_flag("--verbose", verbose, "Print failing states");

  int port = 8080;
  std::string host = "0.0.0.0", static_dir, log_file;
  auto* srv = app.add_subcommand("serve", "Run the HTTP/JSON feedback service");
  srv->add_option("--port", port, "Port");
  srv->add_option("--host", host, "Address to bind");
  srv->add_option("--static", static_dir, "Directory with the built UI");
  srv->add_option("--log", log_file, "JSON-lines call log (default stderr, '-' for none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParseError;
  }

  try {
    if (!constraints_file.empty()) install_constraint_catalog(parse_constraint_catalog(read_file(constraints_file)));
    if (*list) return cmd_list();
    if (*solve) return cmd_solve(id, exercise_file);
    if (*check) return cmd_check(proof, exercise_file);
    if (*hint) return cmd_hint(proof, exercise_file, tier);
    if (*gen) return cmd_gen(seed, count, params);
    if (*fuzz) return cmd_fuzz(states, seed, verbose);
    if (*srv) return cmd_serve(port, host, static_dir, log_file);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Parse:
      case ErrorCode::Syntax:
      case ErrorCode::StatementOnOneLine:
      case ErrorCode::UnknownConnective:
      case ErrorCode::UnknownExercise:
      case ErrorCode::InvalidExercise: return kParseError;
      case ErrorCode::StateInvalid:
      case ErrorCode::UnknownSubproof:
      case ErrorCode::NotProvable: return kViolations;
      default: return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
