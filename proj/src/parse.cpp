#include "fsplit/parse.hpp"

#include "fsplit/expr_parser.hpp"

namespace fsplit {

namespace {

struct PolynomialBuilder {
  using Value = Polynomial;
  RingPtr ring;

  Value integer(std::string_view digits) const {
    return Polynomial::monomial(ring, Monomial(ring->arity()), ring->field().from_digits(digits));
  }
  std::optional<Value> variable(std::string_view name) const {
    auto i = ring->index_of(name);
    if (!i) return std::nullopt;
    return Polynomial::variable(ring, *i);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, unsigned e) const { return a.pow(e); }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line,
                            std::size_t column_offset) {
  PolynomialBuilder b{ring};
  return ExprParser<PolynomialBuilder>(text, b, line, column_offset).parse();
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text,
                                              std::size_t line, std::size_t column_offset) {
  std::vector<Polynomial> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] != ',' || depth != 0) continue;
    }
    out.push_back(parse_polynomial(ring, text.substr(start, i - start), line, column_offset + start));
    start = i + 1;
  }
  return out;
}

}  // namespace fsplit
