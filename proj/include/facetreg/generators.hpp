#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "facetreg/rooted_tree.hpp"
#include "facetreg/simplicial.hpp"

namespace facetreg {

// mt19937_64 with our own bounded sampling, so a seed gives the same corpus on
// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  int uniform(int lo, int hi);  // inclusive
  bool chance(int numerator, int denominator);
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

// Unlabeled rooted trees, one per isomorphism class, sorted by canonical code.
std::vector<RootedTree> all_rooted_trees(int n);
std::vector<RootedTree> perfect_trees(int height, int max_branching);
RootedTree k_nary_tree(int k, int height);
RootedTree path_tree(int vertices);
// bristles[i - 1] extra leaves on level i, i = 1..h; the handle is 0..h.
RootedTree make_broom(const std::vector<int>& bristles);
std::vector<RootedTree> brooms(int height, int max_bristles);
RootedTree random_rooted_tree(Rng& rng, int vertices);

struct ForestParams {
  int min_facets = 1;
  int max_facets = 6;
  int max_dim = 3;
  bool connected = false;
  bool pure = false;
  // pure, codimension one leaves only, kept only when the property holds
  bool intersection_property = false;
};

SimplicialComplex random_simplicial_forest(Rng& rng, const ForestParams& params);

// Isomorphism invariant of small complexes (exact for <= 8 facets).
std::string complex_canonical_form(const SimplicialComplex& c);
// Every complex with the intersection property, dimension <= max_dim and at
// most max_facets facets, one per isomorphism class.
std::vector<SimplicialComplex> intersection_property_trees(int max_dim, int max_facets);

}  // namespace facetreg
