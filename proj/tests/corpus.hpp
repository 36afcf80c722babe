#pragma once

// Fixed test corpus of (splitting, ideal) pairs over F_2 and F_3 in at most
// three variables.

#include <string>
#include <vector>

#include "fsplit/lattice.hpp"
#include "support.hpp"

namespace fsplit::testing {

struct CorpusEntry {
  Splitting phi;
  Ideal ideal;
};

inline std::vector<CorpusEntry> compatibility_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const Splitting& phi, const std::vector<std::string>& gens) {
    out.push_back({phi, ideal(phi.ring_ptr(), gens)});
  };
  for (std::uint32_t p : {2u, 3u}) {
    auto R1 = ring(p, {"x"});
    auto R2 = xy(p);
    auto R3 = xyz(p);
    auto s1 = standard_splitting(R1);
    auto s2 = standard_splitting(R2);
    auto s3 = standard_splitting(R3);
    for (const auto& I : squarefree_monomial_ideals(R2)) out.push_back({s2, I});
    for (const auto& I : squarefree_monomial_ideals(R3)) out.push_back({s3, I});
    add(s1, {"x^2"});
    add(s2, {"x^2"});
    add(s2, {"x", "y^2"});
    add(s2, {"x + y"});
    add(s2, {"x^2 + y^2"});
    add(s2, {"x^2*y"});
    add(s3, {"x - y", "z"});
    add(s3, {"x*y - z^2"});
    add(s3, {"x*y + y*z"});
    add(s3, {"x^2", "y*z"});
    add(s3, {"x*y*z", "x^2"});
    add(s3, {"x + y + z"});
  }
  // Splittings that are not the standard one.
  {
    auto R = xy(2);
    Splitting phi(P(R, "x*y + x^2"));
    for (const auto& gens : std::vector<std::vector<std::string>>{
             {"x"}, {"y"}, {"x*y"}, {"x", "y"}, {"x + y"}, {"x^2"}})
      add(phi, gens);
  }
  {
    auto R = xy(3);
    Splitting phi(P(R, "x^2*y^2 + x^3*y"));
    for (const auto& gens : std::vector<std::vector<std::string>>{
             {"x"}, {"y"}, {"x*y"}, {"x", "y"}, {"x - y"}, {"y^2"}})
      add(phi, gens);
  }
  {
    auto R = xyz(2);
    Splitting phi(P(R, "x*y*z + x^2*y"));
    for (const auto& gens : std::vector<std::vector<std::string>>{
             {"x"}, {"y"}, {"z"}, {"x*z"}, {"y", "z"}, {"x + z"}})
      add(phi, gens);
  }
  return out;
}

}  // namespace fsplit::testing
