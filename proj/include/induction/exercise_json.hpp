#pragma once

#include <json.hpp>

#include "induction/exercises.hpp"

namespace induction {

nlohmann::json exercise_to_json(const ExerciseSpec& spec);
// Throws InvalidExercise on schema errors; expressions are parsed with the
// usual concrete syntax.
ExerciseSpec exercise_from_json(const nlohmann::json& j);

nlohmann::json language_to_json(const LanguageSpec& lang);
LanguageSpec language_from_json(const nlohmann::json& j);

}  // namespace induction
