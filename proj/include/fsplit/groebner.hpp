#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit {

/// A global monomial order. Grevlex uses the distinguished weights; the
/// elimination order compares the first `block` variables by weighted grevlex
/// and breaks ties by weighted grevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  int compare(const Ring& ring, const Monomial& a, const Monomial& b) const;
  std::string name() const;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Reduced Groebner basis: monic, interreduced, sorted by increasing leading
/// monomial. Buchberger's algorithm with the sugar selection strategy and
/// Gebauer-Moeller pair elimination. Throws DegreeBoundExceeded if a basis
/// element exceeds the ring's degree cap.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& order = MonomialOrder::grevlex());

/// A reduced basis with cofactors: basis[i] = sum_k cofactors[i][k] * generators[k].
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

TrackedBasis buchberger_tracked(std::span<const Polynomial> generators,
                                const MonomialOrder& order = MonomialOrder::grevlex());

/// f = sum_j quotients[j] * divisors[j] + remainder, with no term of the
/// remainder divisible by a leading monomial of a divisor.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

Division divide(const Polynomial& f, std::span<const Polynomial> divisors,
                const MonomialOrder& order = MonomialOrder::grevlex());

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace fsplit
