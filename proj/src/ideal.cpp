#include "fsplit/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fsplit/errors.hpp"
#include "fsplit/linalg.hpp"

namespace fsplit {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_) require_same_ring(*ring_, g.ring());
  basis_ = buchberger(generators_);
  key_ = "(";
  for (std::size_t k = 0; k < basis_.size(); ++k) key_ += (k ? ", " : "") + basis_[k].to_string();
  if (basis_.empty()) key_ += "0";
  key_ += ")";
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::is_graded() const {
  return std::all_of(basis_.begin(), basis_.end(), [](const Polynomial& f) { return f.is_homogeneous(); });
}

bool Ideal::is_multigraded() const {
  // The reduced basis of a multigraded ideal is multihomogeneous.
  return std::all_of(basis_.begin(), basis_.end(),
                     [](const Polynomial& f) { return f.is_multihomogeneous(); });
}

bool Ideal::is_monomial() const {
  return std::all_of(basis_.begin(), basis_.end(), [](const Polynomial& f) { return f.is_term(); });
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, *this).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Polynomial& f) { return contains(f); });
}

long long Ideal::max_basis_degree() const {
  long long d = 0;
  for (const auto& f : basis_) d = std::max(d, f.degree());
  return d;
}

std::string Ideal::to_string() const { return key_; }

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  return divide(f, I.basis()).remainder;
}

std::vector<Polynomial> express_in_basis(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  Division d = divide(f, I.basis());
  if (!d.remainder.is_zero())
    throw PreconditionError(f.to_string() + " is not in " + I.to_string());
  return std::move(d.quotients);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens(I.basis().begin(), I.basis().end());
  gens.insert(gens.end(), J.basis().begin(), J.basis().end());
  return Ideal(I.ring_ptr(), std::move(gens));
}

namespace {

std::string fresh_name(const Ring& ring) {
  std::string name = "_t";
  while (ring.index_of(name)) name += "_";
  return name;
}

Polynomial embed(const RingPtr& target, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e{0};
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

std::optional<Polynomial> project(const RingPtr& target, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial[0] != 0) return std::nullopt;
    auto e = t.monomial.exponents();
    terms.push_back({Monomial(std::vector<Exponent>(e.begin() + 1, e.end())), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero() || J.is_unit()) return I;
  if (J.is_zero() || I.is_unit()) return J;
  RingPtr ext = I.ring().with_prepended_variable(fresh_name(I.ring()));
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.basis()) gens.push_back(t * embed(ext, f));
  for (const auto& g : J.basis()) gens.push_back(one_minus_t * embed(ext, g));
  std::vector<Polynomial> out;
  for (const auto& h : buchberger(gens, MonomialOrder::elimination(1)))
    if (auto q = project(I.ring_ptr(), h)) out.push_back(std::move(*q));
  return Ideal(I.ring_ptr(), std::move(out));
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  std::vector<Polynomial> divisor{g};
  Division d = divide(f, divisor);
  if (!d.remainder.is_zero())
    throw PreconditionError(g.to_string() + " does not divide " + f.to_string());
  return d.quotients.front();
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::optional<Ideal> result;
  for (const auto& g : J.basis()) {
    Ideal principal(I.ring_ptr(), {g});
    Ideal meet = ideal_intersection(I, principal);
    std::vector<Polynomial> gens;
    for (const auto& h : meet.basis()) gens.push_back(exact_quotient(h, g));
    Ideal part(I.ring_ptr(), std::move(gens));
    result = result ? ideal_intersection(*result, part) : part;
  }
  return result ? *result : Ideal::unit(I.ring_ptr());
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->arity(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

Ideal saturate(const Ideal& I) {
  if (I.ring().arity() == 0) return I;
  Ideal m = irrelevant_ideal(I.ring_ptr());
  Ideal current = I;
  for (;;) {
    Ideal next = ideal_quotient(current, m);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_saturated(const Ideal& I) { return saturate(I) == I; }

Ideal bracket_power(const Ideal& I, std::uint32_t p) {
  if (p != I.ring().characteristic())
    throw PreconditionError("bracket power must use the characteristic of the ring");
  std::vector<Polynomial> gens;
  for (const auto& f : I.basis()) gens.push_back(frobenius(f));
  return Ideal(I.ring_ptr(), std::move(gens));
}

Ideal bracket_power(const Ideal& I) { return bracket_power(I, I.ring().characteristic()); }

namespace {

std::vector<std::vector<Polynomial>> schreyer(const RingPtr& ring, std::span<const Polynomial> basis) {
  std::vector<std::vector<Polynomial>> out;
  const PrimeField& F = ring->field();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Term& a = basis[i].leading_term();
      const Term& b = basis[j].leading_term();
      Monomial l = a.monomial.lcm(b.monomial);
      Monomial ma = l / a.monomial, mb = l / b.monomial;
      Scalar ca = F.inv(a.coeff), cb = F.inv(b.coeff);
      Polynomial s = basis[i].times_term(ma, ca) - basis[j].times_term(mb, cb);
      Division d = divide(s, basis);
      if (!d.remainder.is_zero()) throw std::logic_error("Schreyer: input is not a Groebner basis");
      std::vector<Polynomial> rel = std::move(d.quotients);
      for (auto& q : rel) q = -q;
      rel[i] += Polynomial::monomial(ring, ma, ca);
      rel[j] -= Polynomial::monomial(ring, mb, cb);
      out.push_back(std::move(rel));
    }
  return out;
}

void verify_relations(const SyzygyModule& S) {
  for (const auto& rel : S.relations) {
    Polynomial sum(S.generators.front().ring_ptr());
    for (std::size_t k = 0; k < rel.size(); ++k) sum += rel[k] * S.generators[k];
    if (!sum.is_zero()) throw std::logic_error("computed syzygy does not annihilate the generators");
  }
}

void prune(std::vector<std::vector<Polynomial>>& rels) {
  std::vector<std::vector<Polynomial>> out;
  for (auto& r : rels) {
    if (std::all_of(r.begin(), r.end(), [](const Polynomial& f) { return f.is_zero(); })) continue;
    // Scale so the first nonzero component is monic.
    auto first = std::find_if(r.begin(), r.end(), [](const Polynomial& f) { return !f.is_zero(); });
    Scalar inv = first->ring().field().inv(first->leading_term().coeff);
    for (auto& f : r) f = f.scaled(inv);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  rels = std::move(out);
}

}  // namespace

SyzygyModule basis_syzygies(const Ideal& I) {
  SyzygyModule S{{I.basis().begin(), I.basis().end()}, schreyer(I.ring_ptr(), I.basis())};
  prune(S.relations);
  if (!S.generators.empty()) verify_relations(S);
  return S;
}

SyzygyModule syzygies(const Ideal& I) {
  const RingPtr& ring = I.ring_ptr();
  SyzygyModule S{{I.generators().begin(), I.generators().end()}, {}};
  const std::size_t m = S.generators.size();
  if (m == 0) return S;
  TrackedBasis tb = buchberger_tracked(S.generators);
  auto transport = [&](const std::vector<Polynomial>& over_basis) {
    std::vector<Polynomial> rel(m, Polynomial(ring));
    for (std::size_t i = 0; i < over_basis.size(); ++i) {
      if (over_basis[i].is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k) rel[k] += over_basis[i] * tb.cofactors[i][k];
    }
    return rel;
  };
  for (const auto& s : schreyer(ring, tb.basis)) S.relations.push_back(transport(s));
  for (std::size_t j = 0; j < m; ++j) {
    Division d = divide(S.generators[j], tb.basis);
    std::vector<Polynomial> rel = transport(d.quotients);
    for (auto& r : rel) r = -r;
    rel[j] += Polynomial::constant(ring, 1);
    S.relations.push_back(std::move(rel));
  }
  prune(S.relations);
  verify_relations(S);
  return S;
}

std::vector<Polynomial> graded_piece(const Ideal& I, long long k) {
  if (!I.is_graded()) throw PreconditionError("graded piece of a non-graded ideal");
  std::vector<Polynomial> spanning;
  for (const auto& g : I.basis()) {
    long long rest = k - g.degree();
    if (rest < 0) continue;
    for (const auto& m : graded_piece_basis(I.ring(), rest)) spanning.push_back(g.times_term(m));
  }
  return span_basis(I.ring_ptr(), spanning);
}

long long hilbert_function(const Ideal& I, long long n) {
  if (!I.is_graded()) throw PreconditionError("Hilbert function of a non-graded ideal");
  long long count = 0;
  for (const auto& m : graded_piece_basis(I.ring(), n)) {
    bool standard = std::none_of(I.basis().begin(), I.basis().end(), [&](const Polynomial& g) {
      return g.leading_term().monomial.divides(m);
    });
    if (standard) ++count;
  }
  return count;
}

HilbertPolynomial hilbert_polynomial(const Ideal& I, std::optional<long long> window) {
  if (!I.is_graded()) throw PreconditionError("Hilbert polynomial of a non-graded ideal");
  if (!is_saturated(I)) throw PreconditionError("Hilbert polynomial requires a saturated ideal");
  long long w = window.value_or(I.max_basis_degree());
  long long points = std::max<long long>(1, static_cast<long long>(I.ring().arity()));
  std::vector<long long> values;
  for (long long k = 0; k < points; ++k) values.push_back(hilbert_function(I, w + k));
  HilbertPolynomial h = HilbertPolynomial::interpolate(w, values);
  for (long long k = points; k < points + 5; ++k)
    if (h(w + k) != Rational(hilbert_function(I, w + k)))
      throw WindowTooSmall("Hilbert function is not polynomial on [" + std::to_string(w) + ", " +
                           std::to_string(w + points + 4) + "]; raise the window");
  return h;
}

}  // namespace fsplit
