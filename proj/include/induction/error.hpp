#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace induction {

enum class ErrorCode {
  Syntax,
  UnknownConnective,
  UnboundVariable,
  MissingCase,
  UnassignedAtom,
  NoRedex,
  NotLinear,
  IncomparableDirections,
  NotGround,
  GenerationFailed,
  SubproofClosed,
  UnknownSubproof,
  Parse,
  StatementOnOneLine,
  NotProvable,
  StateInvalid,
  InvalidExercise,
  UnknownFunction,
  UnknownExercise,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library. `where` is a byte offset for syntax
// errors and a 1-based line number for proof-document parse errors.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& message, std::size_t where = npos)
      : std::runtime_error(message), code_(code), where_(where) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t where() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::size_t where_;
};

}  // namespace induction
