#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace fsplit {

using Rational = boost::rational<long long>;

/// A univariate polynomial in n with rational coefficients (constant term
/// first, no trailing zeros).
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rational> coefficients);

  /// The unique polynomial of degree < values.size() through
  /// (first + k, values[k]).
  static HilbertPolynomial interpolate(long long first, std::span<const long long> values);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(long long n) const;

  std::string to_string() const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Parses e.g. "n + 1" or "2" (variable n, integer coefficients, same syntax
/// as ring polynomials).
HilbertPolynomial parse_hilbert_polynomial(std::string_view text);

}  // namespace fsplit
