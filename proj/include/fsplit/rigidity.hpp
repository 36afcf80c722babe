#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fsplit/ideal.hpp"
#include "fsplit/linalg.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit {

/// One coordinate of the unknown map: the coefficient of the standard
/// monomial `target` in lambda(generators[generator]).
struct HomUnknown {
  std::size_t generator;
  Monomial target;
};

/// Homogeneous linear constraints over F_p on a vector of unknowns.
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<Row> rows;

  std::size_t solution_dimension(const PrimeField& field) const;
};

/// Degree-zero R-linear maps lambda: I -> R/I. The generating set is the
/// reduced basis of I; lambda(f_j) ranges over the standard monomials of
/// (R/I)_{deg f_j}, and the Schreyer syzygies of the basis give the
/// well-definedness relations.
class HomSpace {
 public:
  explicit HomSpace(const Ideal& I);

  const Ideal& ideal() const { return ideal_; }
  std::span<const Polynomial> generators() const { return ideal_.basis(); }
  const std::vector<long long>& generator_degrees() const { return degrees_; }
  const std::vector<std::vector<Monomial>>& target_bases() const { return targets_; }
  const std::vector<HomUnknown>& unknowns() const { return unknowns_; }
  const std::vector<Row>& relations() const { return relations_; }

  /// dim Hom_R(I, R/I)_0.
  std::size_t dimension() const;

  /// lambda(f) for f in I, as one element of R/I per unknown: lambda(f) =
  /// sum_u c_u images[u]. Uses R-linearity through the basis quotients of f.
  std::vector<Polynomial> image(const Polynomial& f) const;

 private:
  Ideal ideal_;
  std::vector<long long> degrees_;
  std::vector<std::vector<Monomial>> targets_;
  std::vector<HomUnknown> unknowns_;
  std::vector<Row> relations_;
};

/// Rejects (0), (1) and non-graded ideals.
HomSpace hom_degree_zero(const Ideal& I);

/// Rows expressing sum_u c_u images[u] = 0 coordinatewise.
std::vector<Row> rows_from_images(std::span<const Polynomial> images);

/// The induced splitting on R/I applied to a lift v: normal_form(phi(v), I).
Polynomial quotient_splitting(const Splitting& phi, const Ideal& I, const Polynomial& v);

/// Appends, for each element i of I, the constraints
/// lambda(phi(i)) = phi_{R/I}(lambda(i)) to the relations of H.
LinearSystem intertwining_constraints(const HomSpace& H, const Splitting& phi,
                                      std::span<const Polynomial> elements);

struct RigidityReport {
  std::size_t dim_hom = 0;
  std::size_t dim_intertwined = 0;
  std::vector<Polynomial> constraint_elements;
  long long degree_bound = 0;
  bool saturated = false;

  /// The intertwined space contains the tangent space, so only zero certifies.
  bool certified() const { return dim_intertwined == 0; }
};

/// Builds Hom_R(I, R/I)_0 and imposes intertwining at the p-th powers of the
/// basis elements and at an F_p-basis of I_k for k <= degree_bound (default
/// p * max basis degree). Requires I graded, proper, nonzero and compatible.
RigidityReport rigidity_report(const Ideal& I, const Splitting& phi,
                               std::optional<long long> degree_bound = std::nullopt);

/// For every r in an F_p-basis of I_N: phi(r)^p lies in I_N.
bool phi_membership(const Ideal& I, const Splitting& phi, long long N);

}  // namespace fsplit
