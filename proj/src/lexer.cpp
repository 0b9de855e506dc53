#include "lexer.hpp"

#include <cctype>

namespace induction {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "syntax-error";
    case ErrorCode::UnknownConnective: return "unknown-connective";
    case ErrorCode::UnboundVariable: return "unbound-variable";
    case ErrorCode::MissingCase: return "missing-case";
    case ErrorCode::UnassignedAtom: return "unassigned-atom";
    case ErrorCode::NoRedex: return "no-redex";
    case ErrorCode::NotLinear: return "not-linear";
    case ErrorCode::IncomparableDirections: return "incomparable-directions";
    case ErrorCode::NotGround: return "not-ground";
    case ErrorCode::GenerationFailed: return "generation-failed";
    case ErrorCode::SubproofClosed: return "subproof-closed";
    case ErrorCode::UnknownSubproof: return "unknown-subproof";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::StatementOnOneLine: return "statement-on-one-line";
    case ErrorCode::NotProvable: return "not-provable";
    case ErrorCode::StateInvalid: return "state-invalid";
    case ErrorCode::InvalidExercise: return "invalid-exercise";
    case ErrorCode::UnknownFunction: return "unknown-function";
    case ErrorCode::UnknownExercise: return "unknown-exercise";
  }
  return "error";
}

namespace detail {

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Tilde: return "'~'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Imp: return "'->'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Eq: return "'='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) { return i + 1 < text.size() && text[i] == a && text[i + 1] == b; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '\''))
        ++i;
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Int, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (two('/', '\\')) { out.push_back({Tok::And, "/\\", start}); i += 2; continue; }
    if (two('\\', '/')) { out.push_back({Tok::Or, "\\/", start}); i += 2; continue; }
    if (two('-', '>')) { out.push_back({Tok::Imp, "->", start}); i += 2; continue; }
    if (two('<', '=')) { out.push_back({Tok::Le, "<=", start}); i += 2; continue; }
    if (two('>', '=')) { out.push_back({Tok::Ge, ">=", start}); i += 2; continue; }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '~': k = Tok::Tilde; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '=': k = Tok::Eq; break;
      case '<': k = Tok::Lt; break;
      case '>': k = Tok::Gt; break;
      default:
        throw Error(ErrorCode::Syntax, "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start),
                    start);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

Token TokenStream::expect(Tok k) {
  if (!at(k)) fail("expected " + std::string(describe(k)));
  return next();
}

void TokenStream::fail(const std::string& what) const {
  const Token& t = peek();
  std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw Error(ErrorCode::Syntax, what + ", found " + found + " at position " + std::to_string(t.pos), t.pos);
}

}  // namespace detail
}  // namespace induction
