#include "induction/exercise_json.hpp"

namespace induction {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::InvalidExercise, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t integer(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) schema(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string text(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) schema(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Connective connective(const std::string& sym) {
  auto c = connective_from_symbol(sym);
  if (!c) schema("unknown connective '" + sym + "'");
  return *c;
}

Formula parse_template(const std::string& s, const LanguageSpec& codomain) {
  try {
    return parse_formula(s, codomain, true);
  } catch (const Error& e) {
    schema("bad template '" + s + "': " + e.what());
  }
}

Comparator comparator(const std::string& s) {
  auto c = parse_comparator(s);
  if (!c) schema("unknown comparator '" + s + "'");
  return *c;
}

json counting_to_json(const CountingFunction& f) {
  json j{{"name", f.name}, {"kind", "counting"}, {"atom", f.atom_value}};
  if (!f.atom_values.empty()) j["atoms"] = f.atom_values;
  if (f.neg) j["neg"] = {{"a", f.neg->a}, {"b", f.neg->b}};
  json bin = json::object();
  for (const auto& [c, k] : f.binary) bin[std::string(symbol(c))] = {{"a", k.a}, {"b", k.b}, {"c", k.c}};
  j["binary"] = bin;
  return j;
}

CountingFunction counting_from_json(const json& j) {
  CountingFunction f;
  f.name = text(j, "name");
  f.atom_value = integer(j, "atom");
  if (j.contains("atoms"))
    for (const auto& [a, v] : field(j, "atoms").items()) {
      if (!v.is_number_integer()) schema("atom value must be an integer");
      f.atom_values[a] = v.get<std::int64_t>();
    }
  if (j.contains("neg")) f.neg = CountingFunction::NegCase{integer(j["neg"], "a"), integer(j["neg"], "b")};
  if (j.contains("binary"))
    for (const auto& [sym, k] : field(j, "binary").items()) {
      Connective c = connective(sym);
      if (arity(c) != 2) schema("'" + sym + "' is not a binary connective");
      f.binary[c] = {integer(k, "a"), integer(k, "b"), integer(k, "c")};
    }
  return f;
}

json transform_to_json(const TransformFunction& g) {
  json j{{"name", g.name},
         {"kind", "transform"},
         {"domain", language_to_json(g.domain)},
         {"codomain", language_to_json(g.codomain)},
         {"atom", print_formula(g.atom_template)}};
  if (!g.atom_overrides.empty()) {
    json a = json::object();
    for (const auto& [atom, t] : g.atom_overrides) a[atom] = print_formula(t);
    j["atoms"] = a;
  }
  if (g.neg_template) j["neg"] = print_formula(*g.neg_template);
  json bin = json::object();
  for (const auto& [c, t] : g.binary_templates) bin[std::string(symbol(c))] = print_formula(t);
  j["binary"] = bin;
  return j;
}

TransformFunction transform_from_json(const json& j, const LanguageSpec& lang) {
  TransformFunction g;
  g.name = text(j, "name");
  g.domain = j.contains("domain") ? language_from_json(j["domain"]) : lang;
  g.codomain = j.contains("codomain") ? language_from_json(j["codomain"]) : lang;
  g.atom_template = j.contains("atom") ? parse_template(text(j, "atom"), g.codomain) : Formula::subst("s");
  if (j.contains("atoms"))
    for (const auto& [a, t] : field(j, "atoms").items()) {
      if (!t.is_string()) schema("atom template must be a string");
      g.atom_overrides.insert_or_assign(a, parse_template(t.get<std::string>(), g.codomain));
    }
  if (j.contains("neg")) g.neg_template = parse_template(text(j, "neg"), g.codomain);
  if (j.contains("binary"))
    for (const auto& [sym, t] : field(j, "binary").items()) {
      Connective c = connective(sym);
      if (arity(c) != 2) schema("'" + sym + "' is not a binary connective");
      if (!t.is_string()) schema("template must be a string");
      g.binary_templates.insert_or_assign(c, parse_template(t.get<std::string>(), g.codomain));
    }
  return g;
}

json valuation_to_json(const Valuation& v) {
  json props = json::array();
  for (const auto& p : v.properties) {
    json jp{{"comp", std::string(symbol(p.comparator))}};
    if (p.atom) jp["atom"] = *p.atom;
    if (p.other)
      jp["other"] = *p.other;
    else
      jp["value"] = p.value;
    props.push_back(jp);
  }
  return {{"name", v.name}, {"kind", "valuation"}, {"properties", props}};
}

Valuation valuation_from_json(const json& j) {
  Valuation v;
  v.name = text(j, "name");
  if (j.contains("properties"))
    for (const auto& jp : field(j, "properties")) {
      ValuationProperty p;
      p.comparator = comparator(text(jp, "comp"));
      if (jp.contains("atom")) p.atom = text(jp, "atom");
      if (jp.contains("other"))
        p.other = text(jp, "other");
      else
        p.value = integer(jp, "value");
      v.properties.push_back(std::move(p));
    }
  return v;
}

Expr parse_side(const std::string& s) {
  try {
    return parse_expr(s);
  } catch (const Error& e) {
    schema("bad theorem expression '" + s + "': " + e.what());
  }
}

}  // namespace

json language_to_json(const LanguageSpec& lang) {
  json cs = json::array();
  for (Connective c : lang.connectives) cs.push_back(std::string(symbol(c)));
  return {{"atoms", lang.atoms}, {"connectives", cs}};
}

LanguageSpec language_from_json(const json& j) {
  LanguageSpec lang;
  for (const auto& a : field(j, "atoms")) {
    if (!a.is_string()) schema("atom names must be strings");
    lang.atoms.push_back(a.get<std::string>());
  }
  for (const auto& c : field(j, "connectives")) {
    if (!c.is_string()) schema("connectives must be strings");
    lang.connectives.push_back(connective(c.get<std::string>()));
  }
  return lang;
}

json exercise_to_json(const ExerciseSpec& spec) {
  json fns = json::array();
  for (const auto& def : spec.functions.defs()) {
    if (const auto* f = std::get_if<CountingFunction>(&def)) fns.push_back(counting_to_json(*f));
    if (const auto* g = std::get_if<TransformFunction>(&def)) fns.push_back(transform_to_json(*g));
    if (const auto* v = std::get_if<Valuation>(&def)) fns.push_back(valuation_to_json(*v));
  }
  return {{"id", spec.id},
          {"description", spec.description},
          {"language", language_to_json(spec.language)},
          {"functions", fns},
          {"theorem",
           {{"lhs", print_expr(spec.theorem.lhs)},
            {"comp", std::string(symbol(spec.theorem.comparator))},
            {"rhs", print_expr(spec.theorem.rhs)}}}};
}

ExerciseSpec exercise_from_json(const json& j) {
  ExerciseSpec spec;
  spec.id = text(j, "id");
  if (j.contains("description")) spec.description = text(j, "description");
  spec.language = language_from_json(field(j, "language"));
  if (j.contains("functions"))
    for (const auto& jf : field(j, "functions")) {
      std::string kind = text(jf, "kind");
      if (kind == "counting")
        spec.functions.add(counting_from_json(jf));
      else if (kind == "transform")
        spec.functions.add(transform_from_json(jf, spec.language));
      else if (kind == "valuation")
        spec.functions.add(valuation_from_json(jf));
      else
        schema("unknown function kind '" + kind + "'");
    }
  const json& th = field(j, "theorem");
  spec.theorem = {parse_side(text(th, "lhs")), comparator(text(th, "comp")), parse_side(text(th, "rhs"))};
  return spec;
}

}  // namespace induction
