#include "fsplit/splitting.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fsplit/errors.hpp"

namespace fsplit {

Polynomial trace(const Polynomial& f) {
  const Exponent p = f.ring().characteristic();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(t.monomial.arity());
    bool survives = true;
    for (std::size_t i = 0; i < m.arity() && survives; ++i) {
      Exponent c = t.monomial[i];
      if (c % p != p - 1) survives = false;
      else m[i] = (c - (p - 1)) / p;
    }
    if (survives) terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(f.ring_ptr(), std::move(terms));
}

Splitting::Splitting(Polynomial premultiplier) : g_(std::move(premultiplier)) {
  Polynomial tr = trace(g_);
  if (!tr.is_one())
    throw NotASplitting("premultiplier is not a splitting: Tr(g) = " + tr.to_string());
}

Polynomial Splitting::operator()(const Polynomial& f) const {
  require_same_ring(ring(), f.ring());
  return trace(g_ * f);
}

Polynomial apply(const Splitting& phi, const Polynomial& f) { return phi(f); }

bool is_splitting(const Polynomial& g) { return trace(g).is_one(); }

std::vector<long long> graded_premultiplier_degree(const Ring& ring) {
  auto d = ring.grading().weight_sum();
  for (auto& x : d) x *= static_cast<long long>(ring.characteristic()) - 1;
  return d;
}

std::optional<GradingViolation> find_grading_violation(const Splitting& phi, long long max_degree) {
  const Ring& ring = phi.ring();
  const long long p = ring.characteristic();
  for (long long k = 0; k <= max_degree; ++k) {
    for (const auto& r : graded_piece_basis(ring, k)) {
      Polynomial image = phi(Polynomial::monomial(phi.ring_ptr(), r));
      auto md = ring.grading().multidegree(r);
      bool divisible = std::all_of(md.begin(), md.end(), [&](long long d) { return d % p == 0; });
      bool ok;
      if (!divisible) {
        ok = image.is_zero();
      } else {
        for (auto& d : md) d /= p;
        ok = homogeneous_component(image, md) == image;
      }
      if (!ok) return GradingViolation{r, std::move(image)};
    }
  }
  return std::nullopt;
}

long long grading_scan_bound(const Ring& ring) {
  long long w = ring.grading().weight_sum().front();
  long long p = ring.characteristic();
  return std::max((p - 1) * w, p);
}

bool is_graded(const Splitting& phi) {
  auto target = graded_premultiplier_degree(phi.ring());
  const Polynomial& g = phi.premultiplier();
  bool homogeneous = homogeneous_component(g, target) == g;
  bool scan_clean = !find_grading_violation(phi, grading_scan_bound(phi.ring()));
  if (homogeneous != scan_clean)
    throw std::logic_error("premultiplier degree test disagrees with the graded-piece scan");
  return homogeneous;
}

Splitting graded_part(const Splitting& phi) {
  Polynomial g = homogeneous_component(phi.premultiplier(), graded_premultiplier_degree(phi.ring()));
  if (!is_splitting(g)) throw NotASplitting("graded part is not a splitting");
  return Splitting(std::move(g));
}

namespace {

/// Monomials with every exponent below p, by increasing distinguished degree.
std::vector<Monomial> restricted_monomials(const Ring& ring) {
  const Exponent p = ring.characteristic();
  std::vector<Monomial> out{Monomial(ring.arity())};
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (Exponent e = 0; e < p; ++e) {
        Monomial x = m;
        x[i] = e;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) < 0; });
  return out;
}

Polynomial random_member(const Ideal& I, std::mt19937_64& rng) {
  const Ring& ring = I.ring();
  Polynomial acc(I.ring_ptr());
  std::uniform_int_distribution<std::size_t> pick(0, I.basis().size() - 1);
  std::uniform_int_distribution<Scalar> coeff(1, ring.characteristic() - 1);
  std::uniform_int_distribution<int> deg(0, 2);
  for (int k = 0; k < 3; ++k) {
    auto monos = graded_piece_basis(ring, deg(rng));
    if (monos.empty()) continue;
    std::uniform_int_distribution<std::size_t> mi(0, monos.size() - 1);
    acc += I.basis()[pick(rng)].times_term(monos[mi(rng)], coeff(rng));
  }
  return acc;
}

}  // namespace

CompatibilityCertificate is_compatible(const Splitting& phi, const Ideal& I) {
  require_same_ring(phi.ring(), I.ring());
  CompatibilityCertificate cert{I, phi, true, std::nullopt};
  if (I.is_zero() || I.is_unit()) return cert;

  Ideal colon = ideal_quotient(bracket_power(I), I);
  cert.verdict = colon.contains(phi.premultiplier());

  if (cert.verdict) {
    std::mt19937_64 rng(0x5eedu);
    std::vector<Polynomial> sample(I.basis().begin(), I.basis().end());
    for (int k = 0; k < 8; ++k) sample.push_back(random_member(I, rng));
    for (const auto& h : sample)
      if (!I.contains(phi(h)))
        throw std::logic_error("colon criterion accepted " + I.to_string() +
                               " but phi(" + h.to_string() + ") is not in it");
    return cert;
  }

  // F_p is fixed by Frobenius, so phi(I) is spanned by phi(m h) with h in the
  // basis and m = m0^p m1, exponents of m1 below p; phi(m h) = m0 phi(m1 h).
  const auto monos = restricted_monomials(I.ring());
  std::vector<Polynomial> candidates;
  for (const auto& h : I.basis())
    for (const auto& m : monos) candidates.push_back(h.times_term(m));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  for (const auto& c : candidates)
    if (!I.contains(phi(c))) {
      cert.witness = c;
      return cert;
    }
  throw std::logic_error("colon criterion rejected " + I.to_string() + " but no witness exists");
}

long long default_semantic_bound(const Splitting& phi, const Ideal& I) {
  return static_cast<long long>(phi.ring().characteristic()) * I.max_basis_degree() +
         static_cast<long long>(phi.ring().arity());
}

std::optional<Polynomial> semantic_violation(const Splitting& phi, const Ideal& I,
                                             long long degree_bound) {
  require_same_ring(phi.ring(), I.ring());
  for (long long k = 0; k <= degree_bound; ++k)
    for (const auto& h : I.basis()) {
      long long rest = degree_bound - h.degree();
      if (k > rest) continue;
      for (const auto& m : graded_piece_basis(I.ring(), k)) {
        Polynomial mh = h.times_term(m);
        if (!I.contains(phi(mh))) return mh;
      }
    }
  return std::nullopt;
}

Splitting standard_splitting(const RingPtr& ring) {
  Monomial m(ring->arity());
  for (std::size_t i = 0; i < m.arity(); ++i) m[i] = ring->characteristic() - 1;
  return Splitting(Polynomial::monomial(ring, std::move(m)));
}

std::vector<Monomial> monomial_splittings(const Ring& ring) {
  const std::size_t n = ring.arity();
  const Exponent target = static_cast<Exponent>(n * (ring.characteristic() - 1));
  std::vector<Monomial> out;
  Monomial m(n);
  auto ring_ptr = std::make_shared<const Ring>(ring);
  // Enumerate exponent vectors of total degree `target`.
  auto rec = [&](auto&& self, std::size_t i, Exponent left) -> void {
    if (i + 1 == n || n == 0) {
      if (n) m[i] = left;
      if (n || left == 0)
        if (trace(Polynomial::monomial(ring_ptr, m)).is_one()) out.push_back(m);
      return;
    }
    for (Exponent e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(rec, 0, target);
  return out;
}

}  // namespace fsplit
