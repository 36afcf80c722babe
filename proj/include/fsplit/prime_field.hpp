#pragma once

#include <cstdint>
#include <string_view>

namespace fsplit {

/// A canonical residue in [0, p).
using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The prime field F_p. p is checked for primality by trial division and
/// must stay below 2^31 so that sums of two residues fit in 32 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Scalar from_int(long long v) const;
  /// Reduces a decimal digit string without overflowing.
  Scalar from_digits(std::string_view digits) const;

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Scalar inv(Scalar a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace fsplit
