// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "fsplit/lattice.hpp"
#include "fsplit/rigidity.hpp"
#include "support.hpp"

using namespace fsplit;
using namespace fsplit::testing;

namespace {

// Records the number of checks and the first failure.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::string(Tally&)> body;
};

RingPtr vars_ring(std::uint32_t p, std::size_t n) {
  std::vector<std::string> vars{"x", "y", "z"};
  vars.resize(n);
  return ring(p, vars);
}

Polynomial random_premultiplier(const RingPtr& R, std::mt19937_64& rng) {
  auto h = random_polynomial(R, rng, 5, 5);
  return h + frobenius(Polynomial::constant(R, 1) - trace(h)) * standard_splitting(R).premultiplier();
}

// Standard-splitting lattices by brute force, n = 1..3, p = 2, 3.
std::vector<IdealLattice> standard_lattices() {
  std::vector<IdealLattice> out;
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 3; ++n) out.push_back(brute_force_toric(standard_splitting(vars_ring(p, n))));
  return out;
}

// Closure lattices seeded by the compatible corpus ideals of each splitting.
std::vector<IdealLattice> corpus_closures() {
  std::vector<std::pair<Splitting, std::vector<Ideal>>> groups;
  for (const auto& [phi, I] : compatibility_corpus()) {
    if (!is_compatible(phi, I).verdict) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == phi; });
    if (it == groups.end()) {
      groups.push_back({phi, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back(I);
  }
  std::vector<IdealLattice> out;
  for (const auto& [phi, seeds] : groups) out.push_back(enumerate_closure(seeds, phi));
  return out;
}

std::string ac1(Tally& t) {
  std::mt19937_64 rng(101);
  std::vector<Splitting> splittings;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = xyz(p);
    splittings.push_back(standard_splitting(R));
    splittings.emplace_back(random_premultiplier(R, rng));
  }
  std::size_t pairs = 0;
  for (const auto& phi : splittings) {
    auto R = phi.ring_ptr();
    t.expect(phi(Polynomial::constant(R, 1)).is_one(), "phi(1) != 1 for " + phi.premultiplier().to_string());
    for (int k = 0; k < 1000; ++k, ++pairs) {
      auto a = random_polynomial(R, rng, 3, 2);
      auto b = random_polynomial(R, rng, 4, 4);
      t.expect(phi(a + b) == phi(a) + phi(b), "additivity fails at a = " + a.to_string());
      t.expect(phi(frobenius(a) * b) == a * phi(b), "a^p rule fails at a = " + a.to_string());
    }
  }
  return std::to_string(splittings.size()) + " splittings, " + std::to_string(pairs) + " pairs";
}

std::string ac2(Tally& t) {
  auto R = ring(2, {"x", "y"}, Grading::fine(2));
  Splitting phi(P(R, "x*y + x^2"));
  t.expect(!is_graded(phi), "x*y + x^2 should not be graded for the fine grading");
  auto gp = graded_part(phi);
  t.expect(is_graded(gp), "graded part is not graded");
  std::size_t monomials = 0;
  for (long long k = 0; k <= 10; ++k)
    for (const auto& m : graded_piece_basis(*R, k)) {
      ++monomials;
      t.expect(gp(Polynomial::monomial(R, m)) == pointwise_graded_part(phi, m),
               "mismatch at " + monomial_to_string(*R, m));
    }
  return "premultiplier " + gp.premultiplier().to_string() + ", " + std::to_string(monomials) + " monomials";
}

std::string ac3(Tally& t) {
  auto corpus = compatibility_corpus();
  t.expect(corpus.size() >= 30, "corpus too small");
  std::size_t positive = 0;
  for (const auto& [phi, I] : corpus) {
    auto cert = is_compatible(phi, I);
    auto bad = semantic_violation(phi, I, default_semantic_bound(phi, I));
    t.expect(cert.verdict == !bad.has_value(), "disagreement on " + I.to_string());
    if (cert.verdict) ++positive;
    else
      t.expect(cert.witness && I.contains(*cert.witness) && !I.contains(phi(*cert.witness)),
               "bad witness for " + I.to_string());
  }
  return std::to_string(corpus.size()) + " ideals, " + std::to_string(positive) + " compatible";
}

std::string ac4(Tally& t) {
  auto lattices = standard_lattices();
  for (auto& L : corpus_closures()) lattices.push_back(std::move(L));
  std::size_t pairs = 0;
  for (const auto& L : lattices)
    for (const auto& I : L.members)
      for (const auto& J : L.members) {
        ++pairs;
        auto S = ideal_sum(I, J);
        auto M = ideal_intersection(I, J);
        t.expect(L.contains(S), "sum missing: " + S.to_string());
        t.expect(L.contains(M), "intersection missing: " + M.to_string());
        t.expect(is_compatible(L.splitting, S).verdict, "sum not compatible: " + S.to_string());
        t.expect(is_compatible(L.splitting, M).verdict, "intersection not compatible: " + M.to_string());
      }
  return std::to_string(lattices.size()) + " lattices, " + std::to_string(pairs) + " pairs";
}

std::string ac5(Tally& t) {
  auto closures = corpus_closures();
  std::ostringstream counts;
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 3; ++n) {
      auto R = vars_ring(p, n);
      auto L = brute_force_toric(standard_splitting(R));
      std::set<std::string> got, want;
      for (const auto& I : L.members) got.insert(I.key());
      for (const auto& I : squarefree_monomial_ideals(R)) want.insert(I.key());
      t.expect(got == want, "brute force differs from the squarefree ideals");
      t.expect(L.members.size() == count_simplicial_complexes(static_cast<unsigned>(n)), "count differs from oracle");
      t.expect(L.anomalies.empty(), "a non-squarefree monomial ideal passed");
      if (p == 2) counts << (n > 1 ? "/" : "") << L.members.size();
    }
  return std::to_string(closures.size()) + " closures terminated, counts " + counts.str();
}

std::string ac6(Tally& t) {
  std::size_t reports = 0, positive_hom = 0;
  for (const auto& L : standard_lattices())
    for (const auto& I : L.members) {
      if (I.is_zero() || I.is_unit()) continue;
      auto r = rigidity_report(I, L.splitting);
      ++reports;
      if (r.dim_hom > 0) ++positive_hom;
      t.expect(r.dim_intertwined == 0, "not rigid: " + I.to_string() + " over " + I.ring().to_string());
    }
  auto R = xy(2);
  auto x = rigidity_report(ideal(R, {"x"}), standard_splitting(R));
  t.expect(x.dim_hom == 1 && x.dim_intertwined == 0, "(x) in F_2[x,y] should give 1/0");
  t.expect(positive_hom > 0, "no case with dim_hom > 0");
  return std::to_string(reports) + " ideals, " + std::to_string(positive_hom) + " with dim_hom > 0";
}

std::string ac7(Tally& t) {
  std::size_t members = 0;
  auto lattices = standard_lattices();
  for (auto& L : corpus_closures())
    if (L.splitting.premultiplier().is_term()) lattices.push_back(std::move(L));
  for (const auto& L : lattices)
    for (const auto& I : L.members) {
      ++members;
      t.expect(I.is_monomial(), "non-monomial member " + I.to_string());
    }
  // Every ideal generated by one or two forms of degree <= 2 in F_2[x,y] that
  // is compatible with the standard splitting is monomial.
  auto R = xy(2);
  auto phi = standard_splitting(R);
  std::vector<Polynomial> forms;
  for (long long d = 1; d <= 2; ++d) {
    auto basis = graded_piece_basis(*R, d);
    for (unsigned mask = 1; mask < (1u << basis.size()); ++mask) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (mask >> i & 1) terms.push_back({basis[i], 1});
      forms.emplace_back(R, terms);
    }
  }
  std::size_t searched = 0;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i; j < forms.size(); ++j) {
      Ideal I(R, {forms[i], forms[j]});
      ++searched;
      if (is_compatible(phi, I).verdict) t.expect(I.is_monomial(), "compatible non-monomial " + I.to_string());
    }
  auto K = ideal(R, {"x + y"});
  auto cert = is_compatible(phi, K);
  t.expect(!cert.verdict, "(x + y) should be refuted");
  t.expect(cert.witness && K.contains(*cert.witness) && !normal_form(phi(*cert.witness), K).is_zero(),
           "(x + y) witness does not verify");
  return std::to_string(members) + " members, " + std::to_string(searched) + " form ideals, witness " +
         (cert.witness ? cert.witness->to_string() : "none");
}

std::string ac8(Tally& t) {
  std::size_t checked = 0;
  for (const auto& [phi, I] : compatibility_corpus()) {
    if (!I.is_graded() || !is_compatible(phi, I).verdict) continue;
    const long long p = I.ring().characteristic();
    for (long long N = 0; N <= 2 * p; ++N) {
      ++checked;
      t.expect(phi_membership(I, phi, N), "phi_membership fails for " + I.to_string() + " at N = " + std::to_string(N));
    }
  }
  auto R = xy(2);
  t.expect(!phi_membership(ideal(R, {"x + y"}), standard_splitting(R), 2), "(x + y) should fail at N = 2");
  return std::to_string(checked) + " (ideal, N) checks";
}

std::string ac9(Tally& t) {
  std::mt19937_64 rng(109);
  std::size_t pairs = 0, members = 0;
  while (pairs < 600) {
    auto R = (pairs % 4 < 2) ? xy(pairs % 2 ? 3 : 2) : xyz(pairs % 2 ? 3 : 2);
    std::uniform_int_distribution<int> count(1, 3), deg(1, 3), coin(0, 1);
    std::vector<Polynomial> gens;
    int k = count(rng);
    while (static_cast<int>(gens.size()) < k) {
      auto g = random_homogeneous(R, rng, deg(rng));
      if (!g.is_zero()) gens.push_back(g);
    }
    Ideal I(R, gens);
    Polynomial f(R);
    if (coin(rng)) {
      for (const auto& g : gens) {
        long long room = 6 - g.degree();
        if (room >= 0) f += random_polynomial(R, rng, 3, room) * g;
      }
    } else {
      f = random_polynomial(R, rng, 5, 6);
    }
    bool engine = normal_form(f, I).is_zero();
    bool oracle = span_oracle_member(f, gens);
    if (engine) ++members;
    t.expect(engine == oracle, "membership disagrees on " + f.to_string() + " in " + I.to_string());
    ++pairs;
  }
  return std::to_string(pairs) + " pairs, " + std::to_string(members) + " members";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "splitting axioms", 10, ac1},
      {2, "graded part against the pointwise definition", 5, ac2},
      {3, "colon criterion agrees with the semantic check", 60, ac3},
      {4, "lattices closed under sum and intersection", 60, ac4},
      {5, "closure terminates; brute force gives the squarefree ideals", 120, ac5},
      {6, "rigidity of compatibly split ideals", 120, ac6},
      {7, "compatible ideals of monomial splittings are monomial", 10, ac7},
      {8, "phi membership up to N = 2p", 30, ac8},
      {9, "normal form against the span oracle", 60, ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
      detail = c.body(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.limit_seconds;
    bool pass = t.failures == 0 && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s | %s | %zu checks | %.2fs (limit %.0fs)", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), detail.c_str(), t.checks, seconds, c.limit_seconds);
    if (t.failures) std::printf(" | %zu failures, first: %s", t.failures, t.first.c_str());
    if (!in_time) std::printf(" | over time");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
