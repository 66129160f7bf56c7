#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facetreg/monomial.hpp"

namespace facetreg {

using Facet = std::vector<int>;  // sorted, 0-based vertices

// Facet list on the vertex set {0..n-1}. Vertices outside every facet are
// allowed in memory so that subcomplexes keep the ambient ring; the file
// parser drops them.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Sorts each facet; rejects empty facets, out-of-range vertices and nested facets.
  SimplicialComplex(int n, std::vector<Facet> facets);

  int vertex_count() const { return n_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(int i) const { return facets_.at(static_cast<std::size_t>(i)); }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  bool empty() const { return facets_.empty(); }

  int dimension() const;
  bool is_pure() const;
  // Vertices lying in some facet.
  std::vector<int> covered_vertices() const;
  // Facets with the given indices, in that order, on the same vertex set.
  SimplicialComplex subcomplex(const std::vector<int>& facet_ids) const;
  int index_of(const Facet& f) const;  // -1 when absent

 private:
  int n_ = 0;
  std::vector<Facet> facets_;
};

Facet intersect(const Facet& a, const Facet& b);
int intersection_size(const Facet& a, const Facet& b);
bool is_subset(const Facet& a, const Facet& b);
std::string to_string(const Facet& f);  // 1-based, e.g. {1,2,3}

Monomial facet_monomial(int n, const Facet& f);
MonomialIdeal facet_ideal(const SimplicialComplex& c);

bool is_good_leaf(const SimplicialComplex& c, int facet);
// Facet indices F_1..F_r, or nullopt when c is not a forest.
std::optional<std::vector<int>> good_leaf_order(const SimplicialComplex& c);
bool is_forest(const SimplicialComplex& c);
bool is_good_leaf_order(const SimplicialComplex& c, const std::vector<int>& order);
// Brute force over all permutations; small complexes only.
bool has_good_leaf_order_exhaustive(const SimplicialComplex& c);

// Connected in the usual sense: facets linked by nonempty intersections.
bool is_connected(const SimplicialComplex& c);
// |G cap H| = |H| - 1, meaningful for pure complexes.
bool codim_one_adjacent(const Facet& g, const Facet& h);
bool is_connected_codim_one(const SimplicialComplex& c);

std::vector<int> irredundant_proper_chain(const SimplicialComplex& c, int g, int h);
int distance(const SimplicialComplex& c, int g, int h);
// All irredundant proper chains from g to h, stopping once `limit` are found.
std::vector<std::vector<int>> irredundant_proper_chains(const SimplicialComplex& c, int g, int h,
                                                        std::size_t limit);

enum class IntersectionReason { Holds, NotPure, NotForest, NotCodim1, PairFail };
const char* to_string(IntersectionReason r);

struct IntersectionReport {
  bool holds = false;
  IntersectionReason reason = IntersectionReason::Holds;
  int g = -1, h = -1;  // failing pair for PairFail
};

IntersectionReport intersection_property(const SimplicialComplex& c);

std::vector<int> adjacent_good_leaf_order(const SimplicialComplex& c);
bool consecutive_distance_one(const SimplicialComplex& c, const std::vector<int>& order);

struct OrderingCheck {
  bool a_holds = true;
  bool b_holds = true;
  std::string witness;  // first failure, if any
  bool holds() const { return a_holds && b_holds; }
};
OrderingCheck ordering_consequences_check(const SimplicialComplex& c, const std::vector<int>& order);

}  // namespace facetreg
