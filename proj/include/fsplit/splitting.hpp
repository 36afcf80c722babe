#pragma once

#include <optional>
#include <vector>

#include "fsplit/ideal.hpp"
#include "fsplit/polynomial.hpp"

namespace fsplit {

/// The trace map: Tr(x^c) = x^{(c - (p-1))/p} when every c_i = p-1 mod p,
/// and 0 otherwise; coefficients pass through. Tr(f^p g) = f Tr(g).
Polynomial trace(const Polynomial& f);

/// A Frobenius splitting phi(f) = Tr(g f), given by its premultiplier g with
/// Tr(g) = 1.
class Splitting {
 public:
  /// Throws NotASplitting if Tr(g) != 1.
  explicit Splitting(Polynomial premultiplier);

  const Polynomial& premultiplier() const { return g_; }
  const Ring& ring() const { return g_.ring(); }
  const RingPtr& ring_ptr() const { return g_.ring_ptr(); }

  Polynomial operator()(const Polynomial& f) const;

  friend bool operator==(const Splitting&, const Splitting&) = default;

 private:
  Polynomial g_;
};

Polynomial apply(const Splitting& phi, const Polynomial& f);

/// Tr(g) = 1.
bool is_splitting(const Polynomial& g);

/// (p-1) times the sum of all variable weights, per grading row: the
/// multidegree of the premultiplier of a graded splitting.
std::vector<long long> graded_premultiplier_degree(const Ring& ring);

/// A monomial r of multidegree k with phi(r) not in R_{k/p} (or nonzero
/// although p does not divide k).
struct GradingViolation {
  Monomial input;
  Polynomial image;
};

/// Scans monomial bases of R_k, k <= max_degree, against the graded-splitting
/// condition for the full multigrading.
std::optional<GradingViolation> find_grading_violation(const Splitting& phi, long long max_degree);

/// A degree bound within which a non-graded splitting always shows a
/// violation: (p-1) * (sum of distinguished weights), at least p.
long long grading_scan_bound(const Ring& ring);

/// g is multihomogeneous of multidegree (p-1) * sum(weights); cross-checked
/// against find_grading_violation up to grading_scan_bound.
bool is_graded(const Splitting& phi);

/// The graded part: premultiplier restricted to its component of multidegree
/// (p-1) * sum(weights).
Splitting graded_part(const Splitting& phi);

/// Verdict on phi(I) in I. A negative verdict carries h in I with phi(h) not in I.
struct CompatibilityCertificate {
  Ideal ideal;
  Splitting splitting;
  bool verdict;
  std::optional<Polynomial> witness;
};

/// Decides compatibility by g in (I^[p] : I). Positive verdicts are
/// spot-checked semantically; negative ones get a verified witness.
CompatibilityCertificate is_compatible(const Splitting& phi, const Ideal& I);

/// p * (max basis degree) + arity.
long long default_semantic_bound(const Splitting& phi, const Ideal& I);

/// Checks phi(m h) in I for every basis element h and monomial m with
/// deg(m h) <= degree_bound. Returns the first failing m h, if any.
std::optional<Polynomial> semantic_violation(const Splitting& phi, const Ideal& I,
                                             long long degree_bound);

/// Premultiplier (x_1 ... x_n)^{p-1}.
Splitting standard_splitting(const RingPtr& ring);

/// All monomials m of total degree n(p-1) with Tr(m) = 1.
std::vector<Monomial> monomial_splittings(const Ring& ring);

}  // namespace fsplit
