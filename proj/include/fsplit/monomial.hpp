#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fsplit {

using Exponent = std::uint32_t;

/// An exponent vector x^e. The arity always matches the ring's variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_one() const;
  bool is_squarefree() const;
  /// Sum of exponents (unweighted).
  std::uint64_t total_degree() const;
  long long weighted_degree(std::span<const int> weights) const;

  /// Throws DegreeBoundExceeded on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial pow(Exponent k) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Variables with positive exponent.
  std::vector<std::size_t> support() const;

  /// Lexicographic on exponent vectors; a storage order, not a monomial order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace fsplit
