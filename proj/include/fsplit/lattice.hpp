#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/hilbert_polynomial.hpp"
#include "fsplit/ideal.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit {

class NonMonomialInput : public PreconditionError {
 public:
  NonMonomialInput() : PreconditionError("non-monomial input") {}
};

class SeedNotCompatible : public Error {
 public:
  SeedNotCompatible(const Ideal& seed, const Polynomial& witness)
      : Error("seed not compatible: " + seed.to_string() + " (witness " + witness.to_string() + ")"),
        seed_key(seed.key()),
        witness_text(witness.to_string()) {}

  std::string seed_key;
  std::string witness_text;
};

/// Minimal primes of a monomial ideal, each generated by variables, sorted
/// by key. (0) has the single minimal prime (0); (1) has none.
std::vector<Ideal> minimal_primes_monomial(const Ideal& I);

struct ClosureRecord {
  std::string operation;  // "seed", "sum", "intersection", "minimal-prime"
  std::vector<std::string> inputs;
  std::string output;
  bool added;
};

/// A finite set of compatibly split ideals, ordered by (sum of basis
/// degrees, key).
struct IdealLattice {
  Splitting splitting;
  std::vector<Ideal> members;
  std::vector<ClosureRecord> closure_log;
  /// Minimal primes were skipped for some non-monomial member.
  bool partial = false;
  /// Brute force only: sampled non-squarefree monomial ideals found compatible.
  std::vector<Ideal> anomalies;
  std::size_t nonsquarefree_checked = 0;

  bool contains(const Ideal& I) const;
};

/// Least set containing the seeds and closed under sum, intersection and
/// (for monomial members) minimal primes. Throws SeedNotCompatible.
IdealLattice enumerate_closure(std::span<const Ideal> seeds, const Splitting& phi);

/// All squarefree monomial ideals of the ring, one per antichain of subsets
/// of the variables (the empty antichain gives (0), the antichain {{}} gives (1)).
std::vector<Ideal> squarefree_monomial_ideals(const RingPtr& ring);

/// Compatible ideals among all squarefree monomial ideals, for a splitting
/// with monomial premultiplier. Also tests a fixed sample of non-squarefree
/// monomial ideals of degree <= 3 and records any that pass as anomalies.
IdealLattice brute_force_toric(const Splitting& phi, std::size_t max_arity = 4);

/// Members I with saturate(I) != (1) and Hilbert polynomial of saturate(I) equal to f.
std::vector<Ideal> filter_by_hilbert(const IdealLattice& lattice, const HilbertPolynomial& f);

/// The coordinate points of Proj R (ideals generated by all variables but
/// one) with their compatibility verdicts.
std::vector<std::pair<Ideal, bool>> torus_fixed_points(const Splitting& phi);

}  // namespace fsplit
