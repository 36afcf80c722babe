#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fsplit/polynomial.hpp"
#include "fsplit/prime_field.hpp"

namespace fsplit {

using Row = std::vector<Scalar>;

/// Reduced row echelon form: rows[k] has a leading 1 in column pivots[k].
struct Echelon {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
};

/// Dense Gaussian elimination over F_p. Every row must have `cols` entries.
Echelon row_reduce(const PrimeField& field, std::vector<Row> rows, std::size_t cols);

std::size_t rank(const PrimeField& field, std::vector<Row> rows, std::size_t cols);

/// A basis of {v : A v = 0}, one vector per free column.
std::vector<Row> nullspace(const PrimeField& field, std::vector<Row> rows, std::size_t cols);

/// An F_p-basis of span(polys), in reduced echelon form with respect to
/// decreasing grevlex order (leading monomials distinct).
std::vector<Polynomial> span_basis(const RingPtr& ring, std::span<const Polynomial> polys);

}  // namespace fsplit
