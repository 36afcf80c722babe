#include "fsplit/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fsplit/errors.hpp"

namespace fsplit {

Grading::Grading(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw PreconditionError("grading needs at least one row");
  for (const auto& r : rows_)
    if (r.size() != rows_.front().size())
      throw PreconditionError("grading rows have different lengths");
  for (int w : rows_.front())
    if (w <= 0) throw PreconditionError("the first grading row must be strictly positive");
}

Grading Grading::standard(std::size_t arity) {
  return Grading({std::vector<int>(arity, 1)});
}

Grading Grading::fine(std::size_t arity) {
  std::vector<std::vector<int>> rows{std::vector<int>(arity, 1)};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<int> r(arity, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return Grading(std::move(rows));
}

long long Grading::degree(const Monomial& m) const { return m.weighted_degree(rows_.front()); }

std::vector<long long> Grading::multidegree(const Monomial& m) const {
  std::vector<long long> d;
  d.reserve(rows_.size());
  for (const auto& r : rows_) d.push_back(m.weighted_degree(r));
  return d;
}

std::vector<long long> Grading::weight_sum() const {
  std::vector<long long> s;
  for (const auto& r : rows_) {
    long long t = 0;
    for (int w : r) t += w;
    s.push_back(t);
  }
  return s;
}

Ring::Ring(PrimeField field, std::vector<std::string> variables, Grading grading,
           long long max_degree)
    : field_(field),
      variables_(std::move(variables)),
      grading_(std::move(grading)),
      max_degree_(max_degree) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
  }
  if (grading_.arity() != variables_.size())
    throw PreconditionError("grading arity does not match variable count");
  if (max_degree_ < 1) throw PreconditionError("max degree must be positive");
}

RingPtr Ring::make(std::uint32_t p, std::vector<std::string> variables,
                   std::optional<Grading> grading, long long max_degree) {
  std::size_t n = variables.size();
  return std::make_shared<const Ring>(PrimeField(p), std::move(variables),
                                      grading ? std::move(*grading) : Grading::standard(n),
                                      max_degree);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  long long da = degree(a), db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

RingPtr Ring::with_prepended_variable(const std::string& name) const {
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), variables_.begin(), variables_.end());
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < grading_.rank(); ++r) {
    std::vector<int> row{r == 0 ? 1 : 0};
    row.insert(row.end(), grading_.rows()[r].begin(), grading_.rows()[r].end());
    rows.push_back(std::move(row));
  }
  return std::make_shared<const Ring>(field_, std::move(vars), Grading(std::move(rows)),
                                      max_degree_);
}

std::string Ring::to_string() const {
  std::ostringstream os;
  os << "F_" << characteristic() << "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) os << (i ? "," : "") << variables_[i];
  os << "]";
  return os.str();
}

bool same_ring(const Ring& a, const Ring& b) { return &a == &b || a == b; }

namespace {

void fill_piece(const Ring& ring, std::size_t var, long long remaining, Monomial& current,
                std::vector<Monomial>& out) {
  const auto& w = ring.grading().distinguished();
  if (var + 1 == ring.arity()) {
    if (remaining % w[var] == 0) {
      current[var] = static_cast<Exponent>(remaining / w[var]);
      out.push_back(current);
      current[var] = 0;
    }
    return;
  }
  for (long long e = 0; e * w[var] <= remaining; ++e) {
    current[var] = static_cast<Exponent>(e);
    fill_piece(ring, var + 1, remaining - e * w[var], current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> graded_piece_basis(const Ring& ring, long long deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  if (ring.arity() == 0) {
    if (deg == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(ring.arity());
  fill_piece(ring, 0, deg, current, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

}  // namespace fsplit
