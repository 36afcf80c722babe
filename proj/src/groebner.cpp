#include "fsplit/groebner.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

int grevlex_range(const Ring& ring, const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
  const auto& w = ring.grading().distinguished();
  long long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += static_cast<long long>(w[i]) * a[i];
    db += static_cast<long long>(w[i]) * b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Ring& ring, const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      return ring.compare(a, b);
    case Kind::lex:
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::elimination: {
      std::size_t k = std::min(block_, a.arity());
      if (int c = grevlex_range(ring, a, b, 0, k)) return c;
      return grevlex_range(ring, a, b, k, a.arity());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::elimination: return "elimination(" + std::to_string(block_) + ")";
  }
  return "";
}

namespace {

using Terms = std::vector<Term>;

struct Entry {
  Terms terms;
  long long sugar = 0;
  std::vector<Polynomial> cofactors;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  long long sugar;
};

class Engine {
 public:
  Engine(const RingPtr& ring, const MonomialOrder& order, bool track)
      : ring_(ring), order_(order), F_(ring->field()), track_(track) {}

  int cmp(const Monomial& a, const Monomial& b) const { return order_.compare(*ring_, a, b); }

  Terms to_order(const Polynomial& f) const {
    Terms t(f.terms().begin(), f.terms().end());
    if (order_.kind() != MonomialOrder::Kind::grevlex)
      std::sort(t.begin(), t.end(),
                [&](const Term& a, const Term& b) { return cmp(a.monomial, b.monomial) > 0; });
    return t;
  }

  Polynomial to_poly(Terms t) const { return Polynomial(ring_, std::move(t)); }

  long long max_degree(const Terms& t) const {
    long long d = 0;
    for (const auto& x : t) d = std::max(d, ring_->degree(x.monomial));
    return d;
  }

  /// a -= c * m * b, with b sorted by the order.
  void sub_mul(Terms& a, Scalar c, const Monomial& m, const Terms& b) const {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Scalar nc = F_.neg(c);
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(std::move(a[i++]));
        continue;
      }
      Monomial mb = b[j].monomial * m;
      int s = i == a.size() ? -1 : cmp(a[i].monomial, mb);
      if (s > 0) {
        out.push_back(std::move(a[i++]));
      } else if (s < 0) {
        out.push_back({std::move(mb), F_.mul(nc, b[j].coeff)});
        ++j;
      } else {
        Scalar v = F_.sub(a[i].coeff, F_.mul(c, b[j].coeff));
        if (v) out.push_back({std::move(mb), v});
        ++i;
        ++j;
      }
    }
    a.swap(out);
  }

  void sub_mul_cofactors(std::vector<Polynomial>& a, Scalar c, const Monomial& m,
                         const std::vector<Polynomial>& b) const {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!b[k].is_zero()) a[k] -= b[k].times_term(m, c);
  }

  void make_monic(Entry& e) const {
    Scalar inv = F_.inv(e.terms.front().coeff);
    if (inv == 1) return;
    for (auto& t : e.terms) t.coeff = F_.mul(t.coeff, inv);
    for (auto& c : e.cofactors) c = c.scaled(inv);
  }

  /// Full reduction of e by the monic entries in `reducers`.
  void reduce(Entry& e, const std::vector<const Entry*>& reducers) const {
    Terms rem;
    while (!e.terms.empty()) {
      const Term lt = e.terms.front();
      const Entry* red = nullptr;
      for (const Entry* g : reducers)
        if (g->terms.front().monomial.divides(lt.monomial)) {
          red = g;
          break;
        }
      if (!red) {
        rem.push_back(lt);
        e.terms.erase(e.terms.begin());
        continue;
      }
      Monomial m = lt.monomial / red->terms.front().monomial;
      e.sugar = std::max(e.sugar, red->sugar + ring_->degree(m));
      sub_mul(e.terms, lt.coeff, m, red->terms);
      if (track_) sub_mul_cofactors(e.cofactors, lt.coeff, m, red->cofactors);
    }
    e.terms = std::move(rem);
  }

  void check_degree(const Entry& e) const {
    long long d = max_degree(e.terms);
    if (d > ring_->max_degree())
      throw DegreeBoundExceeded("Groebner basis element of degree " + std::to_string(d) +
                                " exceeds the degree cap " +
                                std::to_string(ring_->max_degree()));
  }

  TrackedBasis run(std::span<const Polynomial> gens) {
    for (const auto& g : gens) require_same_ring(*ring_, g.ring());
    std::vector<Entry> inputs;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].is_zero()) continue;
      Entry e;
      e.terms = to_order(gens[k]);
      e.sugar = max_degree(e.terms);
      if (track_) {
        e.cofactors.assign(gens.size(), Polynomial(ring_));
        e.cofactors[k] = Polynomial::constant(ring_, 1);
      }
      inputs.push_back(std::move(e));
    }
    std::sort(inputs.begin(), inputs.end(), [&](const Entry& a, const Entry& b) {
      return cmp(a.terms.front().monomial, b.terms.front().monomial) < 0;
    });
    for (auto& e : inputs) {
      reduce(e, active_entries());
      if (e.terms.empty()) continue;
      make_monic(e);
      check_degree(e);
      update(std::move(e));
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (int c = cmp(a.lcm, b.lcm)) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair pr = *best;
      pairs_.erase(best);
      Entry s = spoly(pr);
      reduce(s, active_entries());
      if (s.terms.empty()) continue;
      make_monic(s);
      check_degree(s);
      update(std::move(s));
    }
    return finish();
  }

 private:
  std::vector<const Entry*> active_entries() const {
    std::vector<const Entry*> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) out.push_back(&basis_[k]);
    return out;
  }

  const Monomial& lm(std::size_t k) const { return basis_[k].terms.front().monomial; }

  Entry spoly(const Pair& pr) const {
    const Entry& a = basis_[pr.i];
    const Entry& b = basis_[pr.j];
    Monomial ma = pr.lcm / lm(pr.i);
    Monomial mb = pr.lcm / lm(pr.j);
    Entry s;
    s.sugar = pr.sugar;
    s.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) s.terms.push_back({t.monomial * ma, t.coeff});
    sub_mul(s.terms, 1, mb, b.terms);
    if (track_) {
      s.cofactors.assign(a.cofactors.size(), Polynomial(ring_));
      for (std::size_t k = 0; k < a.cofactors.size(); ++k)
        s.cofactors[k] = a.cofactors[k].times_term(ma) - b.cofactors[k].times_term(mb);
    }
    return s;
  }

  long long pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    return std::max(basis_[i].sugar + ring_->degree(l / lm(i)),
                    basis_[j].sugar + ring_->degree(l / lm(j)));
  }

  /// Gebauer-Moeller update.
  void update(Entry h) {
    std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lh = lm(hi);

    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) cand.push_back(k);
    std::vector<Monomial> lcms;
    for (std::size_t k : cand) lcms.push_back(lh.lcm(lm(k)));

    std::vector<char> in_c(cand.size(), 1), in_d(cand.size(), 0);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      in_c[a] = 0;
      bool keep = lh.coprime(lm(cand[a]));
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < cand.size() && keep; ++b)
          if ((in_c[b] || in_d[b]) && lcms[b].divides(lcms[a])) keep = false;
      }
      if (keep) in_d[a] = 1;
    }

    std::vector<Pair> kept;
    for (auto& pr : pairs_) {
      bool drop = lh.divides(pr.lcm) && lm(pr.i).lcm(lh) != pr.lcm && lm(pr.j).lcm(lh) != pr.lcm;
      if (!drop) kept.push_back(std::move(pr));
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (in_d[a] && !lh.coprime(lm(cand[a])))
        kept.push_back({cand[a], hi, lcms[a], pair_sugar(cand[a], hi, lcms[a])});
    pairs_ = std::move(kept);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(lm(k))) active_[k] = false;
  }

  TrackedBasis finish() {
    std::vector<Entry> g;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) g.push_back(basis_[k]);
    // Interreduce tails.
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<const Entry*> others;
      for (std::size_t l = 0; l < g.size(); ++l)
        if (l != k) others.push_back(&g[l]);
      Term head = g[k].terms.front();
      Entry tail = g[k];
      tail.terms.erase(tail.terms.begin());
      reduce(tail, others);
      tail.terms.insert(tail.terms.begin(), std::move(head));
      g[k] = std::move(tail);
    }
    std::sort(g.begin(), g.end(), [&](const Entry& a, const Entry& b) {
      return cmp(a.terms.front().monomial, b.terms.front().monomial) < 0;
    });
    TrackedBasis out;
    for (auto& e : g) {
      out.basis.push_back(to_poly(std::move(e.terms)));
      out.cofactors.push_back(std::move(e.cofactors));
    }
    return out;
  }

  RingPtr ring_;
  MonomialOrder order_;
  const PrimeField& F_;
  bool track_;
  std::vector<Entry> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw PreconditionError("leading monomial of zero");
  if (order.kind() == MonomialOrder::Kind::grevlex) return f.leading_term().monomial;
  const Monomial* best = &f.terms().front().monomial;
  for (const auto& t : f.terms())
    if (order.compare(f.ring(), t.monomial, *best) > 0) best = &t.monomial;
  return *best;
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& order) {
  if (generators.empty()) return {};
  Engine engine(generators.front().ring_ptr(), order, false);
  return engine.run(generators).basis;
}

TrackedBasis buchberger_tracked(std::span<const Polynomial> generators, const MonomialOrder& order) {
  if (generators.empty()) return {};
  Engine engine(generators.front().ring_ptr(), order, true);
  return engine.run(generators);
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors,
                const MonomialOrder& order) {
  const Ring& ring = f.ring();
  const PrimeField& F = ring.field();
  for (const auto& g : divisors) require_same_ring(ring, g.ring());
  std::vector<Monomial> lms;
  std::vector<Scalar> lc_inv;
  for (const auto& g : divisors) {
    if (g.is_zero()) {
      lms.emplace_back();
      lc_inv.push_back(0);
      continue;
    }
    Monomial m = leading_monomial(g, order);
    lc_inv.push_back(F.inv(g.coefficient(m)));
    lms.push_back(std::move(m));
  }
  std::vector<std::vector<Term>> qterms(divisors.size());
  std::vector<Term> rem;
  Polynomial h = f;
  while (!h.is_zero()) {
    Monomial lm = leading_monomial(h, order);
    Scalar lc = h.coefficient(lm);
    std::size_t k = 0;
    for (; k < divisors.size(); ++k)
      if (lc_inv[k] && lms[k].divides(lm)) break;
    if (k == divisors.size()) {
      rem.push_back({lm, lc});
      h -= Polynomial::monomial(f.ring_ptr(), lm, lc);
      continue;
    }
    Monomial m = lm / lms[k];
    Scalar c = F.mul(lc, lc_inv[k]);
    qterms[k].push_back({m, c});
    h -= divisors[k].times_term(m, c);
  }
  Division d{{}, Polynomial(f.ring_ptr(), std::move(rem))};
  for (auto& q : qterms) d.quotients.emplace_back(f.ring_ptr(), std::move(q));
  return d;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_same_ring(f.ring(), g.ring());
  const PrimeField& F = f.ring().field();
  Monomial lf = leading_monomial(f, order), lg = leading_monomial(g, order);
  Monomial l = lf.lcm(lg);
  return f.times_term(l / lf, F.inv(f.coefficient(lf))) -
         g.times_term(l / lg, F.inv(g.coefficient(lg)));
}

}  // namespace fsplit
