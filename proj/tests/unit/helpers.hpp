#pragma once

#include <initializer_list>
#include <vector>

#include "brute_oracle.hpp"
#include "facetreg/homology.hpp"
#include "facetreg/monomial.hpp"
#include "facetreg/simplicial.hpp"

namespace th {

using namespace facetreg;

// Squarefree ideal from 1-based supports.
inline MonomialIdeal sq(int n, std::initializer_list<std::vector<int>> supports) {
  std::vector<Monomial> g;
  for (const auto& s : supports) {
    std::vector<int> v;
    for (int x : s) v.push_back(x - 1);
    g.push_back(Monomial::from_support(n, v));
  }
  return MonomialIdeal(n, g);
}

// Complex from 1-based facets.
inline SimplicialComplex cx(int n, std::initializer_list<std::vector<int>> facets) {
  std::vector<Facet> fs;
  for (const auto& f : facets) {
    Facet g;
    for (int x : f) g.push_back(x - 1);
    fs.push_back(g);
  }
  return SimplicialComplex(n, fs);
}

inline brute::Table brute_table(const MonomialIdeal& I) {
  std::vector<brute::Exps> g;
  for (const Monomial& m : I.generators()) g.push_back(m.exponents());
  return brute::betti(g);
}

inline brute::Table as_table(const BettiTable& b) {
  brute::Table t;
  for (const auto& [k, v] : b.entries())
    if (v != 0) t[k] = v;
  return t;
}

}  // namespace th
