#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsplit/monomial.hpp"
#include "fsplit/prime_field.hpp"

namespace fsplit {

/// A (multi)grading: rows()[r][i] is the r-th weight of variable i. Row 0 is
/// the distinguished single grading and must be strictly positive, so every
/// graded piece R_n is finite-dimensional and R_0 = F_p.
class Grading {
 public:
  explicit Grading(std::vector<std::vector<int>> rows);

  /// All weights 1.
  static Grading standard(std::size_t arity);
  /// Standard row followed by the identity rows: the full Z^n torus grading.
  static Grading fine(std::size_t arity);

  std::size_t rank() const { return rows_.size(); }
  std::size_t arity() const { return rows_.front().size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& distinguished() const { return rows_.front(); }

  long long degree(const Monomial& m) const;
  std::vector<long long> multidegree(const Monomial& m) const;
  /// Sum of the weights of all variables, per row.
  std::vector<long long> weight_sum() const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// F_p[x_1..x_n] with named variables and a grading. Immutable; shared by
/// pointer between the polynomials that live in it.
class Ring {
 public:
  static constexpr long long kDefaultMaxDegree = 64;

  Ring(PrimeField field, std::vector<std::string> variables, Grading grading,
       long long max_degree = kDefaultMaxDegree);

  static RingPtr make(std::uint32_t p, std::vector<std::string> variables,
                      std::optional<Grading> grading = std::nullopt,
                      long long max_degree = kDefaultMaxDegree);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t arity() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const Grading& grading() const { return grading_; }
  /// Cap on the degree of any Groebner basis element computed in this ring.
  long long max_degree() const { return max_degree_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  long long degree(const Monomial& m) const { return grading_.degree(m); }

  /// Weighted graded-reverse-lexicographic comparison on the distinguished
  /// grading; returns <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Copy of this ring with one extra variable in front, weight 1 in row 0
  /// and 0 in the other rows.
  RingPtr with_prepended_variable(const std::string& name) const;

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  Grading grading_;
  long long max_degree_;
};

bool same_ring(const Ring& a, const Ring& b);

/// Monomial basis of R_deg under the distinguished grading, largest first.
std::vector<Monomial> graded_piece_basis(const Ring& ring, long long deg);

}  // namespace fsplit
