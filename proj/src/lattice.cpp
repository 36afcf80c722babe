#include "fsplit/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace fsplit {

namespace {

using Mask = std::uint64_t;

Ideal ideal_of_masks(const RingPtr& ring, const std::vector<Mask>& masks) {
  std::vector<Polynomial> gens;
  for (Mask s : masks) {
    Monomial m(ring->arity());
    for (std::size_t i = 0; i < ring->arity(); ++i)
      if (s >> i & 1) m[i] = 1;
    gens.push_back(Polynomial::monomial(ring, std::move(m)));
  }
  return Ideal(ring, std::move(gens));
}

long long weight(const Ideal& I) {
  long long w = 0;
  for (const auto& f : I.basis()) w += f.degree();
  return w;
}

struct WorkOrder {
  bool operator()(const Ideal& a, const Ideal& b) const {
    long long wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    return a.key() < b.key();
  }
};

void sort_members(std::vector<Ideal>& v) { std::sort(v.begin(), v.end(), WorkOrder{}); }

}  // namespace

bool IdealLattice::contains(const Ideal& I) const {
  return std::find(members.begin(), members.end(), I) != members.end();
}

std::vector<Ideal> minimal_primes_monomial(const Ideal& I) {
  if (!I.is_monomial()) throw NonMonomialInput();
  const RingPtr& ring = I.ring_ptr();
  if (I.is_zero()) return {I};
  if (I.is_unit()) return {};
  if (ring->arity() > 64) throw PreconditionError("too many variables for minimal primes");

  std::vector<Mask> supports;
  for (const auto& g : I.basis()) {
    Mask s = 0;
    for (std::size_t i : g.leading_term().monomial.support()) s |= Mask{1} << i;
    supports.push_back(s);
  }
  // Branch on the variables of the first generator not yet covered.
  std::set<Mask> covers;
  auto rec = [&](auto&& self, Mask chosen) -> void {
    auto open = std::find_if(supports.begin(), supports.end(), [&](Mask s) { return !(s & chosen); });
    if (open == supports.end()) {
      covers.insert(chosen);
      return;
    }
    for (std::size_t i = 0; i < ring->arity(); ++i)
      if (*open >> i & 1) self(self, chosen | Mask{1} << i);
  };
  rec(rec, 0);

  std::vector<Ideal> primes;
  for (Mask c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(),
                                [&](Mask d) { return d != c && (d & c) == d; });
    if (!minimal) continue;
    std::vector<Mask> vars;
    for (std::size_t i = 0; i < ring->arity(); ++i)
      if (c >> i & 1) vars.push_back(Mask{1} << i);
    primes.push_back(ideal_of_masks(ring, vars));
  }
  std::sort(primes.begin(), primes.end(),
            [](const Ideal& a, const Ideal& b) { return a.key() < b.key(); });
  return primes;
}

IdealLattice enumerate_closure(std::span<const Ideal> seeds, const Splitting& phi) {
  IdealLattice L{phi, {}, {}, false, {}, 0};
  std::map<std::string, Ideal> members;
  std::set<Ideal, WorkOrder> worklist;
  std::vector<Ideal> processed;

  auto add = [&](const Ideal& I, std::string op, std::vector<std::string> inputs) {
    bool fresh = !members.contains(I.key());
    if (fresh) {
      if (!is_compatible(phi, I).verdict)
        throw std::logic_error("closure produced an incompatible ideal " + I.to_string());
      members.emplace(I.key(), I);
      worklist.insert(I);
    }
    L.closure_log.push_back({std::move(op), std::move(inputs), I.key(), fresh});
  };

  std::vector<Ideal> ordered(seeds.begin(), seeds.end());
  sort_members(ordered);
  for (const auto& s : ordered) {
    require_same_ring(s.ring(), phi.ring());
    auto cert = is_compatible(phi, s);
    if (!cert.verdict) throw SeedNotCompatible(s, *cert.witness);
    add(s, "seed", {});
  }

  while (!worklist.empty()) {
    Ideal W = *worklist.begin();
    worklist.erase(worklist.begin());
    if (W.is_monomial()) {
      for (const auto& P : minimal_primes_monomial(W)) add(P, "minimal-prime", {W.key()});
    } else {
      L.partial = true;
    }
    for (const auto& Q : processed) {
      add(ideal_sum(Q, W), "sum", {Q.key(), W.key()});
      add(ideal_intersection(Q, W), "intersection", {Q.key(), W.key()});
    }
    processed.push_back(std::move(W));
  }

  for (auto& [key, I] : members) L.members.push_back(I);
  sort_members(L.members);
  return L;
}

std::vector<Ideal> squarefree_monomial_ideals(const RingPtr& ring) {
  const std::size_t n = ring->arity();
  if (n > 6) throw PreconditionError("arity too large for squarefree enumeration");
  const Mask subsets = Mask{1} << n;
  std::vector<Ideal> out;
  std::vector<Mask> chosen;
  auto comparable = [](Mask a, Mask b) { return (a & b) == a || (a & b) == b; };
  auto rec = [&](auto&& self, Mask next) -> void {
    if (next == subsets) {
      out.push_back(ideal_of_masks(ring, chosen));
      return;
    }
    self(self, next + 1);
    if (std::none_of(chosen.begin(), chosen.end(), [&](Mask c) { return comparable(c, next); })) {
      chosen.push_back(next);
      self(self, next + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  sort_members(out);
  return out;
}

namespace {

/// Principal ideals of non-squarefree monomials of degree <= 3, and their
/// sums with one variable outside the support.
std::vector<Ideal> nonsquarefree_sample(const RingPtr& ring) {
  std::vector<Ideal> out;
  Monomial m(ring->arity());
  std::vector<Monomial> monos;
  auto rec = [&](auto&& self, std::size_t i, Exponent left) -> void {
    if (i == ring->arity()) {
      if (!m.is_squarefree()) monos.push_back(m);
      return;
    }
    for (Exponent e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(rec, 0, 3);
  for (const auto& mono : monos) {
    Polynomial f = Polynomial::monomial(ring, mono);
    out.emplace_back(ring, std::vector<Polynomial>{f});
    for (std::size_t i = 0; i < ring->arity(); ++i)
      if (mono[i] == 0) out.emplace_back(ring, std::vector<Polynomial>{f, Polynomial::variable(ring, i)});
  }
  return out;
}

}  // namespace

IdealLattice brute_force_toric(const Splitting& phi, std::size_t max_arity) {
  if (!phi.premultiplier().is_term())
    throw PreconditionError("brute force requires a monomial premultiplier");
  if (phi.ring().arity() > max_arity) throw PreconditionError("arity too large");
  IdealLattice L{phi, {}, {}, false, {}, 0};
  for (const auto& I : squarefree_monomial_ideals(phi.ring_ptr()))
    if (is_compatible(phi, I).verdict) L.members.push_back(I);
  for (const auto& I : nonsquarefree_sample(phi.ring_ptr())) {
    ++L.nonsquarefree_checked;
    if (is_compatible(phi, I).verdict) L.anomalies.push_back(I);
  }
  sort_members(L.members);
  return L;
}

std::vector<Ideal> filter_by_hilbert(const IdealLattice& lattice, const HilbertPolynomial& f) {
  std::vector<Ideal> out;
  for (const auto& I : lattice.members) {
    if (!I.is_graded()) continue;
    Ideal S = saturate(I);
    if (S.is_unit()) continue;
    std::optional<HilbertPolynomial> h;
    for (long long w = S.max_basis_degree(); !h; ++w) {
      try {
        h = hilbert_polynomial(S, w);
      } catch (const WindowTooSmall&) {
        if (w > S.max_basis_degree() + 16) throw;
      }
    }
    if (*h == f) out.push_back(I);
  }
  return out;
}

std::vector<std::pair<Ideal, bool>> torus_fixed_points(const Splitting& phi) {
  std::vector<std::pair<Ideal, bool>> out;
  const RingPtr& ring = phi.ring_ptr();
  for (std::size_t k = 0; k < ring->arity(); ++k) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->arity(); ++i)
      if (i != k) gens.push_back(Polynomial::variable(ring, i));
    Ideal P(ring, std::move(gens));
    bool ok = is_compatible(phi, P).verdict;
    out.emplace_back(std::move(P), ok);
  }
  return out;
}

}  // namespace fsplit
