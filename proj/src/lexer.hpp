#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "induction/error.hpp"

namespace induction::detail {

enum class Tok {
  Ident, Int, LParen, RParen, Comma,
  Tilde, And, Or, Imp,
  Plus, Minus, Star,
  Eq, Lt, Le, Gt, Ge,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string_view describe(Tok t);

// Tokenizes expression/formula text. Throws Error(Syntax, pos) on stray
// characters.
std::vector<Token> tokenize(std::string_view text);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok k) const { return peek().kind == k; }
  Token next() { Token t = peek(); if (pos_ < toks_.size() - 1) ++pos_; return t; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  Token expect(Tok k);
  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace induction::detail
