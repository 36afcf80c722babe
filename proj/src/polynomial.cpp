#include "fsplit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

void canonicalize(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.monomial, b.monomial) > 0;
  });
  const PrimeField& F = ring.field();
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Scalar c = t.coeff % ring.characteristic();
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = F.add(out.back().coeff, c);
      continue;
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    out.push_back({std::move(t.monomial), c});
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms.swap(out);
}

template <bool Subtract>
std::vector<Term> merge(const Ring& ring, std::span<const Term> a, std::span<const Term> b) {
  const PrimeField& F = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, Subtract ? F.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Scalar s = Subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (s) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, Subtract ? F.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.monomial.arity() != ring_->arity())
      throw PreconditionError("exponent vector arity does not match the ring");
  canonicalize(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Scalar s = ring->field().from_int(c);
  Monomial one(ring->arity());
  return Polynomial(std::move(ring), {{std::move(one), s}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->arity());
  m[index] = 1;
  return Polynomial(std::move(ring), {{std::move(m), 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar coeff) {
  return Polynomial(std::move(ring), {{std::move(m), coeff}});
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].monomial.is_one();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

long long Polynomial::degree() const {
  // Terms are sorted by degree first.
  return terms_.empty() ? -1 : ring_->degree(terms_.front().monomial);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return ring_->degree(terms_.front().monomial) == ring_->degree(terms_.back().monomial);
}

bool Polynomial::is_multihomogeneous() const {
  if (terms_.empty()) return true;
  auto d = ring_->grading().multidegree(terms_.front().monomial);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return ring_->grading().multidegree(t.monomial) == d;
  });
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::scaled(Scalar c) const {
  Polynomial r(ring_);
  if (c % ring_->characteristic() == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Scalar c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  Polynomial r(a.ring_);
  r.terms_ = merge<false>(*a.ring_, a.terms_, b.terms_);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  Polynomial r(a.ring_);
  r.terms_ = merge<true>(*a.ring_, a.terms_, b.terms_);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  const PrimeField& F = a.ring().field();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Scalar& c = acc[s.monomial * t.monomial];
      c = F.add(c, F.mul(s.coeff, t.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) terms.push_back({m, c});
  return Polynomial(a.ring_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring(), b.ring()) && a.terms_ == b.terms_;
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (!m[i]) continue;
    if (!first) os << "*";
    first = false;
    os << ring.variables()[i];
    if (m[i] > 1) os << "^" << m[i];
  }
  if (first) os << "1";
  return os.str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (k) os << " + ";
    if (t.monomial.is_one()) {
      os << t.coeff;
    } else {
      if (t.coeff != 1) os << t.coeff << "*";
      os << monomial_to_string(*ring_, t.monomial);
    }
  }
  return os.str();
}

Polynomial frobenius(const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  Exponent p = f.ring().characteristic();
  for (const auto& t : f.terms()) terms.push_back({t.monomial.pow(p), t.coeff});
  return Polynomial(f.ring_ptr(), std::move(terms));
}

Polynomial homogeneous_component(const Polynomial& f, std::span<const long long> deg) {
  const Grading& g = f.ring().grading();
  if (deg.size() != g.rank())
    throw PreconditionError("degree vector length does not match the grading rank");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    auto md = g.multidegree(t.monomial);
    if (std::equal(md.begin(), md.end(), deg.begin())) terms.push_back(t);
  }
  return Polynomial(f.ring_ptr(), std::move(terms));
}

Polynomial homogeneous_component(const Polynomial& f, long long deg) {
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (f.ring().degree(t.monomial) == deg) terms.push_back(t);
  return Polynomial(f.ring_ptr(), std::move(terms));
}

}  // namespace fsplit
