#pragma once

// Shared helpers and independent oracles for the test suites. Nothing here
// calls the Groebner engine: the oracles use plain linear algebra on
// monomial coordinates so they can check it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fsplit/ideal.hpp"
#include "fsplit/parse.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit::testing {

inline RingPtr ring(std::uint32_t p, std::vector<std::string> vars,
                    std::optional<Grading> grading = std::nullopt) {
  return Ring::make(p, std::move(vars), std::move(grading));
}

inline RingPtr xy(std::uint32_t p) { return ring(p, {"x", "y"}); }
inline RingPtr xyz(std::uint32_t p) { return ring(p, {"x", "y", "z"}); }

inline Polynomial P(const RingPtr& R, const std::string& text) { return parse_polynomial(R, text); }

inline Ideal ideal(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(P(R, g));
  return Ideal(R, std::move(polys));
}

/// Random polynomial with up to `terms` terms of distinguished degree <= max_degree.
inline Polynomial random_polynomial(const RingPtr& R, std::mt19937_64& rng, int terms, long long max_degree) {
  std::uniform_int_distribution<long long> deg(0, max_degree);
  std::uniform_int_distribution<Scalar> coeff(0, R->characteristic() - 1);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    auto monos = graded_piece_basis(*R, deg(rng));
    if (monos.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    out.push_back({monos[pick(rng)], coeff(rng)});
  }
  return Polynomial(R, std::move(out));
}

/// Random homogeneous polynomial of degree d (may be zero).
inline Polynomial random_homogeneous(const RingPtr& R, std::mt19937_64& rng, long long d) {
  std::uniform_int_distribution<Scalar> coeff(0, R->characteristic() - 1);
  std::vector<Term> out;
  for (const auto& m : graded_piece_basis(*R, d)) out.push_back({m, coeff(rng)});
  return Polynomial(R, std::move(out));
}

/// Sparse row-space tracker over F_p keyed by monomials; independent of the
/// library's linear algebra.
class SpanOracle {
 public:
  explicit SpanOracle(const PrimeField& F) : F_(F) {}

  /// Adds v to the span; returns true if it was independent.
  bool add(std::map<Monomial, Scalar> v) {
    reduce(v);
    if (v.empty()) return false;
    auto pivot = v.begin()->first;
    Scalar inv = F_.inv(v.begin()->second);
    for (auto& [m, c] : v) c = F_.mul(c, inv);
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(std::map<Monomial, Scalar> v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::map<Monomial, Scalar>& v) const {
    for (;;) {
      auto it = std::find_if(v.begin(), v.end(), [&](const auto& kv) { return rows_.contains(kv.first); });
      if (it == v.end()) return;
      const auto& row = rows_.at(it->first);
      Scalar f = it->second;
      for (const auto& [m, c] : row) {
        Scalar& slot = v[m];
        slot = F_.sub(slot, F_.mul(f, c));
        if (slot == 0) v.erase(m);
      }
    }
  }

  const PrimeField& F_;
  std::map<Monomial, std::map<Monomial, Scalar>> rows_;
};

inline std::map<Monomial, Scalar> coords(const Polynomial& f) {
  std::map<Monomial, Scalar> v;
  for (const auto& t : f.terms()) v[t.monomial] = t.coeff;
  return v;
}

/// Distinguished degree of a monomial without going through Ring helpers.
inline long long oracle_degree(const Ring& R, const Monomial& m) {
  long long d = 0;
  for (std::size_t i = 0; i < m.arity(); ++i) d += static_cast<long long>(R.grading().distinguished()[i]) * m[i];
  return d;
}

/// All monomials of distinguished degree d, by direct recursion.
inline std::vector<Monomial> oracle_monomials(const Ring& R, long long d) {
  std::vector<Monomial> out;
  Monomial m(R.arity());
  auto rec = [&](auto&& self, std::size_t i, long long left) -> void {
    if (i == R.arity()) {
      if (left == 0) out.push_back(m);
      return;
    }
    long long w = R.grading().distinguished()[i];
    for (long long e = 0; e * w <= left; ++e) {
      m[i] = static_cast<Exponent>(e);
      self(self, i + 1, left - e * w);
    }
    m[i] = 0;
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

/// Membership of f in the ideal generated by homogeneous `gens`, decided on
/// each graded piece by linear algebra over {m * g}.
inline bool span_oracle_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  const Ring& R = f.ring();
  std::map<long long, std::map<Monomial, Scalar>> pieces;
  for (const auto& t : f.terms()) pieces[oracle_degree(R, t.monomial)][t.monomial] = t.coeff;
  for (auto& [d, piece] : pieces) {
    SpanOracle span(R.field());
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      long long rest = d - oracle_degree(R, g.terms().front().monomial);
      for (const auto& m : oracle_monomials(R, rest)) span.add(coords(g.times_term(m)));
    }
    if (!span.contains(piece)) return false;
  }
  return true;
}

/// dim R_n - dim I_n by linear algebra on the given homogeneous generators.
inline long long rank_hilbert_function(const Ring& R, const std::vector<Polynomial>& gens, long long n) {
  SpanOracle span(R.field());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    long long rest = n - oracle_degree(R, g.terms().front().monomial);
    for (const auto& m : oracle_monomials(R, rest)) span.add(coords(g.times_term(m)));
  }
  return static_cast<long long>(oracle_monomials(R, n).size()) - static_cast<long long>(span.rank());
}

/// Number of down-closed families of subsets of an n-set (simplicial
/// complexes, counting the void and the empty complex), by checking every
/// family of subsets.
inline std::size_t count_simplicial_complexes(unsigned n) {
  const unsigned subsets = 1u << n;
  std::size_t count = 0;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    bool closed = true;
    for (unsigned s = 0; s < subsets && closed; ++s) {
      if (!(family >> s & 1)) continue;
      for (unsigned t = 0; t < subsets && closed; ++t)
        if ((t & s) == t && !(family >> t & 1)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

/// Pointwise graded part: for a monomial r of multidegree k,
/// the k/p component of phi(r) if p divides k, else 0.
inline Polynomial pointwise_graded_part(const Splitting& phi, const Monomial& r) {
  const Ring& R = phi.ring();
  const long long p = R.characteristic();
  std::vector<long long> k;
  for (const auto& row : R.grading().rows()) {
    long long d = 0;
    for (std::size_t i = 0; i < r.arity(); ++i) d += static_cast<long long>(row[i]) * r[i];
    k.push_back(d);
  }
  for (long long d : k)
    if (d % p) return Polynomial(phi.ring_ptr());
  for (auto& d : k) d /= p;
  Polynomial image = phi(Polynomial::monomial(phi.ring_ptr(), r));
  std::vector<Term> keep;
  for (const auto& t : image.terms()) {
    bool match = true;
    for (std::size_t row = 0; row < k.size(); ++row) {
      long long d = 0;
      for (std::size_t i = 0; i < t.monomial.arity(); ++i)
        d += static_cast<long long>(R.grading().rows()[row][i]) * t.monomial[i];
      if (d != k[row]) match = false;
    }
    if (match) keep.push_back(t);
  }
  return Polynomial(phi.ring_ptr(), std::move(keep));
}

}  // namespace fsplit::testing
