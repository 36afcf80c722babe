#include "fsplit/linalg.hpp"

#include <algorithm>
#include <map>

namespace fsplit {

Echelon row_reduce(const PrimeField& F, std::vector<Row> rows, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = F.inv(rows[r][c]);
    for (std::size_t k = c; k < cols; ++k) rows[r][k] = F.mul(rows[r][k], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Scalar f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

std::size_t rank(const PrimeField& F, std::vector<Row> rows, std::size_t cols) {
  return row_reduce(F, std::move(rows), cols).rank();
}

std::vector<Row> nullspace(const PrimeField& F, std::vector<Row> rows, std::size_t cols) {
  Echelon e = row_reduce(F, std::move(rows), cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = F.neg(e.rows[k][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Polynomial> span_basis(const RingPtr& ring, std::span<const Polynomial> polys) {
  auto cmp = [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) > 0; };
  std::map<Monomial, std::size_t, decltype(cmp)> column(cmp);
  for (const auto& f : polys)
    for (const auto& t : f.terms()) column.emplace(t.monomial, 0);
  std::vector<Monomial> monomials;
  for (auto& [m, idx] : column) {
    idx = monomials.size();
    monomials.push_back(m);
  }
  std::vector<Row> rows;
  for (const auto& f : polys) {
    Row r(monomials.size(), 0);
    for (const auto& t : f.terms()) r[column.at(t.monomial)] = t.coeff;
    rows.push_back(std::move(r));
  }
  Echelon e = row_reduce(ring->field(), std::move(rows), monomials.size());
  std::vector<Polynomial> out;
  for (const auto& r : e.rows) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c]) terms.push_back({monomials[c], r[c]});
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

}  // namespace fsplit
