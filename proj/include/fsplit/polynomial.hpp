#pragma once

#include <span>
#include <string>
#include <vector>

#include "fsplit/monomial.hpp"
#include "fsplit/ring.hpp"

namespace fsplit {

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial over F_p in canonical form: no zero coefficients, terms in
/// strictly decreasing weighted grevlex order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Combines like terms, drops zeros and sorts.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, Scalar coeff = 1);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_term() const { return terms_.size() == 1; }
  /// Grevlex-leading term; requires nonzero.
  const Term& leading_term() const { return terms_.front(); }
  Scalar coefficient(const Monomial& m) const;

  /// Maximal distinguished degree; -1 for zero.
  long long degree() const;
  bool is_homogeneous() const;
  /// Homogeneous for every row of the grading.
  bool is_multihomogeneous() const;

  Polynomial operator-() const;
  Polynomial scaled(Scalar c) const;
  Polynomial times_term(const Monomial& m, Scalar c = 1) const;
  Polynomial pow(unsigned k) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Text in the input syntax, e.g. "x^2*y + 2*z"; "0" for zero.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Ring& a, const Ring& b);

std::string monomial_to_string(const Ring& ring, const Monomial& m);

/// f^p, computed termwise as x^e -> x^{p e}; F_p coefficients are fixed.
Polynomial frobenius(const Polynomial& f);

/// Terms of f whose multidegree equals deg. deg has one entry per grading row.
Polynomial homogeneous_component(const Polynomial& f, std::span<const long long> deg);
/// Component of distinguished degree deg.
Polynomial homogeneous_component(const Polynomial& f, long long deg);

}  // namespace fsplit
