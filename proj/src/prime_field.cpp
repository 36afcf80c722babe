#include "fsplit/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "fsplit/errors.hpp"

namespace fsplit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw PreconditionError("characteristic must be below 2^31");
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
}

Scalar PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

Scalar PrimeField::from_digits(std::string_view digits) const {
  std::uint64_t r = 0;
  for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
  return static_cast<Scalar>(r);
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

}  // namespace fsplit
