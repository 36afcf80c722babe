#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fsplit/errors.hpp"

namespace fsplit {

/// Recursive-descent parser for the polynomial text syntax:
///
///   sum    := ['+'|'-'] term (('+'|'-') term)*
///   term   := power ('*' power)*
///   power  := atom ['^' integer]
///   atom   := integer | name | '(' sum ')'
///
/// Whitespace is ignored between tokens. The Builder supplies the value
/// domain: integer(digits), variable(name) -> optional<Value>, add, sub, neg,
/// mul and pow.
template <class Builder>
class ExprParser {
 public:
  using Value = typename Builder::Value;

  ExprParser(std::string_view text, Builder& builder, std::size_t line = 1,
             std::size_t column_offset = 0)
      : text_(text), builder_(builder), line_(line), column_offset_(column_offset) {}

  Value parse() {
    Value v = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, column_offset_ + pos_ + 1, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value parse_sum() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Value acc = parse_term();
    if (negate) acc = builder_.neg(acc);
    for (;;) {
      if (accept('+')) acc = builder_.add(acc, parse_term());
      else if (accept('-')) acc = builder_.sub(acc, parse_term());
      else return acc;
    }
  }

  Value parse_term() {
    Value acc = parse_power();
    while (accept('*')) acc = builder_.mul(acc, parse_power());
    return acc;
  }

  Value parse_power() {
    Value base = parse_atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    unsigned long long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (e > 1000000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a nonnegative integer exponent");
    return builder_.pow(base, static_cast<unsigned>(e));
  }

  Value parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a term");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return builder_.integer(text_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      std::optional<Value> v = builder_.variable(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return *v;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  Builder& builder_;
  std::size_t line_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

}  // namespace fsplit
