#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsplit/errors.hpp"
#include "fsplit/groebner.hpp"
#include "fsplit/hilbert_polynomial.hpp"
#include "fsplit/polynomial.hpp"

namespace fsplit {

/// An ideal of a polynomial ring: the generators as given plus the reduced
/// grevlex Groebner basis, computed once at construction. Two ideals are
/// equal iff their reduced bases coincide.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Polynomial> generators() const { return generators_; }
  /// Reduced grevlex basis, increasing leading monomials.
  std::span<const Polynomial> basis() const { return basis_; }

  bool is_zero() const { return basis_.empty(); }
  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }
  /// Generated by homogeneous elements of the distinguished grading.
  bool is_graded() const;
  /// Generated by elements homogeneous for every grading row.
  bool is_multigraded() const;
  /// Every reduced-basis element is a single term.
  bool is_monomial() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  /// Largest distinguished degree of a basis element (0 for the zero ideal).
  long long max_basis_degree() const;

  /// Canonical text of the reduced basis, e.g. "(x, y)", "(0)", "(1)".
  std::string to_string() const;
  const std::string& key() const { return key_; }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_ring(a.ring(), b.ring()) && a.key_ == b.key_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
  std::string key_;
};

/// Unique remainder modulo the reduced basis; zero iff f lies in I.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

/// Quotients expressing f in terms of I.basis(); throws PreconditionError if
/// f is not in I.
std::vector<Polynomial> express_in_basis(const Polynomial& f, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// Eliminates t from t*I + (1-t)*J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
/// (I : J) = {f : f J in I}.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
/// The ideal generated by all variables.
Ideal irrelevant_ideal(const RingPtr& ring);
/// (I : m^infinity) for the irrelevant ideal m.
Ideal saturate(const Ideal& I);
bool is_saturated(const Ideal& I);
/// I^[p], generated by p-th powers of the generators. p must be the
/// characteristic of the ring.
Ideal bracket_power(const Ideal& I, std::uint32_t p);
Ideal bracket_power(const Ideal& I);

/// Exact quotient f / g; throws PreconditionError if g does not divide f.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);

/// Relations sum_j relations[k][j] * generators[j] = 0.
struct SyzygyModule {
  std::vector<Polynomial> generators;
  std::vector<std::vector<Polynomial>> relations;
};

/// Generating set of the first syzygies of I.generators(), obtained from the
/// Schreyer syzygies of the reduced basis transported along the cofactor
/// matrices.
SyzygyModule syzygies(const Ideal& I);
/// Schreyer syzygies of I.basis() itself.
SyzygyModule basis_syzygies(const Ideal& I);

/// An F_p-basis of the graded piece I_k (distinguished grading).
std::vector<Polynomial> graded_piece(const Ideal& I, long long k);

/// dim (R/I)_n, from the standard monomials of the leading-term ideal.
long long hilbert_function(const Ideal& I, long long n);

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

/// Interpolates the Hilbert function on [window, window + n) (n = arity)
/// and checks agreement on the following five degrees. The default window is
/// the largest basis degree. I must be graded and saturated.
HilbertPolynomial hilbert_polynomial(const Ideal& I, std::optional<long long> window = std::nullopt);

}  // namespace fsplit
