#include "fsplit/hilbert_polynomial.hpp"

#include <sstream>

#include "fsplit/expr_parser.hpp"

namespace fsplit {

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == Rational(0)) c.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Coeffs scale(Coeffs a, Rational s) {
  for (auto& x : a) x *= s;
  trim(a);
  return a;
}

struct RationalBuilder {
  using Value = Coeffs;

  Value integer(std::string_view digits) const {
    long long v = 0;
    for (char c : digits) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, c - '0', &v))
        throw Error("integer literal too large");
    }
    Coeffs r{Rational(v)};
    trim(r);
    return r;
  }
  std::optional<Value> variable(std::string_view name) const {
    if (name != "n") return std::nullopt;
    return Coeffs{Rational(0), Rational(1)};
  }
  Value add(const Value& a, const Value& b) const { return fsplit::add(a, b); }
  Value sub(const Value& a, const Value& b) const { return fsplit::add(a, scale(b, -1)); }
  Value neg(const Value& a) const { return scale(a, -1); }
  Value mul(const Value& a, const Value& b) const { return fsplit::mul(a, b); }
  Value pow(const Value& a, unsigned e) const {
    Coeffs r{Rational(1)};
    for (unsigned k = 0; k < e; ++k) r = fsplit::mul(r, a);
    return r;
  }
};

}  // namespace

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

HilbertPolynomial HilbertPolynomial::interpolate(long long first, std::span<const long long> values) {
  // Newton forward differences on the points first, first+1, ...
  std::vector<Rational> diff(values.begin(), values.end());
  Coeffs result;
  Coeffs basis{Rational(1)};  // prod_{j<k} (n - first - j) / k!
  for (std::size_t k = 0; k < values.size(); ++k) {
    result = add(result, scale(basis, diff[0]));
    for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
    Coeffs factor{Rational(-first - static_cast<long long>(k)), Rational(1)};
    basis = scale(mul(basis, factor), Rational(1, static_cast<long long>(k + 1)));
  }
  return HilbertPolynomial(std::move(result));
}

Rational HilbertPolynomial::operator()(long long n) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * n + coeffs_[i];
  return acc;
}

std::string HilbertPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Rational c = coeffs_[i];
    if (c == Rational(0)) continue;
    if (!first) os << (c < Rational(0) ? " - " : " + ");
    else if (c < Rational(0)) os << "-";
    first = false;
    Rational a = c < Rational(0) ? -c : c;
    bool unit = a == Rational(1);
    if (i == 0 || !unit) {
      os << a.numerator();
      if (a.denominator() != 1) os << "/" << a.denominator();
      if (i > 0) os << "*";
    }
    if (i > 0) os << "n";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

HilbertPolynomial parse_hilbert_polynomial(std::string_view text) {
  RationalBuilder b;
  return HilbertPolynomial(ExprParser<RationalBuilder>(text, b).parse());
}

}  // namespace fsplit
