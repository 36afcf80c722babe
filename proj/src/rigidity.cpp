#include "fsplit/rigidity.hpp"

#include <algorithm>
#include <map>

#include "fsplit/errors.hpp"

namespace fsplit {

std::size_t LinearSystem::solution_dimension(const PrimeField& field) const {
  return unknowns - rank(field, rows, unknowns);
}

std::vector<Row> rows_from_images(std::span<const Polynomial> images) {
  if (images.empty()) return {};
  const Ring& ring = images.front().ring();
  auto cmp = [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; };
  std::map<Monomial, Row, decltype(cmp)> rows(cmp);
  for (std::size_t u = 0; u < images.size(); ++u)
    for (const auto& t : images[u].terms()) {
      auto [it, _] = rows.try_emplace(t.monomial, Row(images.size(), 0));
      it->second[u] = t.coeff;
    }
  std::vector<Row> out;
  for (auto& [m, r] : rows) out.push_back(std::move(r));
  return out;
}

HomSpace::HomSpace(const Ideal& I) : ideal_(I) {
  if (I.is_zero() || I.is_unit()) throw PreconditionError("Hom space needs a proper nonzero ideal");
  if (!I.is_graded()) throw PreconditionError("Hom space needs a graded ideal");
  for (std::size_t j = 0; j < I.basis().size(); ++j) {
    long long d = I.basis()[j].degree();
    degrees_.push_back(d);
    std::vector<Monomial> standard;
    for (const auto& m : graded_piece_basis(I.ring(), d)) {
      bool reducible = std::any_of(I.basis().begin(), I.basis().end(), [&](const Polynomial& g) {
        return g.leading_term().monomial.divides(m);
      });
      if (!reducible) standard.push_back(m);
    }
    for (const auto& m : standard) unknowns_.push_back({j, m});
    targets_.push_back(std::move(standard));
  }
  for (const auto& rel : basis_syzygies(I).relations) {
    std::vector<Polynomial> images;
    for (const auto& u : unknowns_)
      images.push_back(normal_form(rel[u.generator].times_term(u.target), I));
    auto rows = rows_from_images(images);
    relations_.insert(relations_.end(), rows.begin(), rows.end());
  }
}

std::size_t HomSpace::dimension() const {
  return unknowns_.size() - rank(ideal_.ring().field(), relations_, unknowns_.size());
}

std::vector<Polynomial> HomSpace::image(const Polynomial& f) const {
  std::vector<Polynomial> q = express_in_basis(f, ideal_);
  std::vector<Polynomial> out;
  out.reserve(unknowns_.size());
  for (const auto& u : unknowns_) out.push_back(normal_form(q[u.generator].times_term(u.target), ideal_));
  return out;
}

HomSpace hom_degree_zero(const Ideal& I) { return HomSpace(I); }

Polynomial quotient_splitting(const Splitting& phi, const Ideal& I, const Polynomial& v) {
  return normal_form(phi(v), I);
}

LinearSystem intertwining_constraints(const HomSpace& H, const Splitting& phi,
                                      std::span<const Polynomial> elements) {
  const Ideal& I = H.ideal();
  require_same_ring(phi.ring(), I.ring());
  if (!is_compatible(phi, I).verdict)
    throw PreconditionError("splitting is not compatible with " + I.to_string() +
                            "; the induced splitting on R/I is undefined");
  LinearSystem sys{H.unknowns().size(), H.relations()};
  for (const auto& i : elements) {
    if (!I.contains(i)) throw PreconditionError(i.to_string() + " is not in " + I.to_string());
    std::vector<Polynomial> lhs = H.image(phi(i));
    std::vector<Polynomial> rhs = H.image(i);
    std::vector<Polynomial> diff;
    diff.reserve(lhs.size());
    for (std::size_t u = 0; u < lhs.size(); ++u)
      diff.push_back(lhs[u] - quotient_splitting(phi, I, rhs[u]));
    auto rows = rows_from_images(diff);
    sys.rows.insert(sys.rows.end(), rows.begin(), rows.end());
  }
  return sys;
}

RigidityReport rigidity_report(const Ideal& I, const Splitting& phi,
                               std::optional<long long> degree_bound) {
  require_same_ring(phi.ring(), I.ring());
  if (I.is_zero() || I.is_unit()) throw PreconditionError("rigidity needs a proper nonzero ideal");
  if (!I.is_graded()) throw PreconditionError("rigidity needs a graded ideal");
  if (!is_compatible(phi, I).verdict)
    throw PreconditionError(I.to_string() + " is not compatibly split");

  RigidityReport report;
  report.degree_bound =
      degree_bound.value_or(static_cast<long long>(I.ring().characteristic()) * I.max_basis_degree());
  report.saturated = is_saturated(I);
  for (const auto& f : I.basis()) report.constraint_elements.push_back(frobenius(f));
  for (long long k = 0; k <= report.degree_bound; ++k)
    for (auto& b : graded_piece(I, k)) report.constraint_elements.push_back(std::move(b));

  HomSpace H(I);
  LinearSystem sys = intertwining_constraints(H, phi, report.constraint_elements);
  report.dim_hom = H.dimension();
  report.dim_intertwined = sys.solution_dimension(I.ring().field());
  return report;
}

bool phi_membership(const Ideal& I, const Splitting& phi, long long N) {
  require_same_ring(phi.ring(), I.ring());
  if (!I.is_graded()) throw PreconditionError("phi membership needs a graded ideal");
  for (const auto& r : graded_piece(I, N)) {
    Polynomial v = frobenius(phi(r));
    if (v.is_zero()) continue;
    if (!v.is_homogeneous() || v.degree() != N || !I.contains(v)) return false;
  }
  return true;
}

}  // namespace fsplit
