#include "fsplit/monomial.hpp"

#include <algorithm>
#include <limits>

#include "fsplit/errors.hpp"

namespace fsplit {

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

long long Monomial::weighted_degree(std::span<const int> weights) const {
  long long d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<long long>(weights[i]) * exps_[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &r.exps_[i]))
      throw DegreeBoundExceeded("exponent overflow in monomial product");
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  return r;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (__builtin_mul_overflow(exps_[i], k, &r.exps_[i]))
      throw DegreeBoundExceeded("exponent overflow in monomial power");
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) s.push_back(i);
  return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

}  // namespace fsplit
