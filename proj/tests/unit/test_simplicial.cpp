#include <doctest.h>

#include <set>

#include "facetreg/error.hpp"
#include "facetreg/generators.hpp"
#include "helpers.hpp"

using namespace facetreg;
using th::cx;
using th::sq;

namespace {
const SimplicialComplex kTriangle = cx(3, {{1, 2}, {2, 3}, {1, 3}});
const SimplicialComplex kPath = cx(4, {{1, 2}, {2, 3}, {3, 4}});
const SimplicialComplex kStrip = cx(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
const SimplicialComplex kGap = cx(5, {{1, 2, 3}, {3, 4, 5}});
}  // namespace

TEST_CASE("construction rejects bad facet lists") {
  CHECK_THROWS_AS(cx(3, {{1, 2}, {1, 2, 3}}), StructuralError);
  CHECK_THROWS_AS(cx(2, {{1, 3}}), StructuralError);
  CHECK_THROWS_AS(SimplicialComplex(2, {{}}), StructuralError);
}

TEST_CASE("dimension and purity") {
  CHECK(kGap.dimension() == 2);
  CHECK(kGap.is_pure());
  SimplicialComplex mixed = cx(4, {{1, 2}, {2, 3, 4}});
  CHECK(mixed.dimension() == 2);
  CHECK_FALSE(mixed.is_pure());
  SimplicialComplex point = cx(1, {{1}});
  CHECK(point.dimension() == 0);
  CHECK(point.is_pure());
}

TEST_CASE("facet ideals") {
  CHECK(facet_ideal(cx(3, {{1, 2}, {2, 3}})) == sq(3, {{1, 2}, {2, 3}}));
  CHECK(facet_ideal(cx(3, {{1, 2, 3}})) == sq(3, {{1, 2, 3}}));
  CHECK(facet_ideal(kTriangle) == sq(3, {{1, 2}, {2, 3}, {1, 3}}));
}

TEST_CASE("good leaves") {
  CHECK(is_good_leaf(kPath, 0));
  CHECK_FALSE(is_good_leaf(kTriangle, 0));
  CHECK(is_good_leaf(cx(2, {{1, 2}}), 0));
}

TEST_CASE("good leaf orders and forests") {
  auto o = good_leaf_order(kPath);
  REQUIRE(o.has_value());
  CHECK(is_good_leaf_order(kPath, *o));
  CHECK(is_forest(kPath));
  CHECK_FALSE(good_leaf_order(kTriangle).has_value());
  CHECK_FALSE(has_good_leaf_order_exhaustive(kTriangle));
  CHECK(good_leaf_order(cx(3, {{1, 2, 3}})) == std::vector<int>{0});
}

TEST_CASE("greedy good leaf order agrees with exhaustive search") {
  Rng rng(42);
  int forests = 0, others = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // random facet lists on 6 vertices, mostly not forests
    std::vector<Facet> fs;
    const int r = rng.uniform(1, 5);
    for (int k = 0; k < r; ++k) {
      Facet f;
      for (int v = 0; v < 6; ++v)
        if (rng.chance(1, 2)) f.push_back(v);
      if (f.empty()) f.push_back(rng.uniform(0, 5));
      bool nested = false;
      for (const Facet& g : fs) nested = nested || is_subset(f, g) || is_subset(g, f);
      if (!nested) fs.push_back(f);
    }
    SimplicialComplex c(6, fs);
    const bool greedy = good_leaf_order(c).has_value();
    CHECK(greedy == has_good_leaf_order_exhaustive(c));
    (greedy ? forests : others)++;
  }
  CHECK(forests > 20);
  CHECK(others > 20);
}

TEST_CASE("codimension one connectivity and distance") {
  CHECK(is_connected_codim_one(kStrip));
  CHECK_FALSE(is_connected_codim_one(kGap));
  CHECK(is_connected_codim_one(cx(3, {{1, 2, 3}})));
  CHECK(distance(kStrip, 0, 2) == 2);
  CHECK(distance(kStrip, 0, 1) == 1);
  CHECK(distance(kStrip, 1, 1) == 0);
  CHECK(irredundant_proper_chains(kStrip, 0, 2, 10).size() == 1);
}

TEST_CASE("irredundant chains are unique in forests with the intersection property") {
  for (const SimplicialComplex& c : intersection_property_trees(3, 5))
    for (int g = 0; g < c.facet_count(); ++g)
      for (int h = 0; h < c.facet_count(); ++h) CHECK(irredundant_proper_chains(c, g, h, 3).size() == 1);
}

TEST_CASE("intersection property with reasons") {
  CHECK(intersection_property(kStrip).holds);
  CHECK(has_linear_resolution(facet_ideal(kStrip)));
  IntersectionReport gap = intersection_property(kGap);
  CHECK_FALSE(gap.holds);
  CHECK(gap.reason == IntersectionReason::NotCodim1);
  CHECK(intersection_property(cx(1, {{1}})).holds);
  CHECK(intersection_property(cx(4, {{1, 2}, {2, 3, 4}})).reason == IntersectionReason::NotPure);
  CHECK(intersection_property(kTriangle).reason == IntersectionReason::NotForest);
  // pure, codim-1 connected forest where the end facets still share vertex 3
  IntersectionReport pair = intersection_property(cx(6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {3, 5, 6}}));
  CHECK_FALSE(pair.holds);
  CHECK(pair.reason == IntersectionReason::PairFail);
  CHECK(std::string(to_string(IntersectionReason::PairFail)) == "PAIR_FAIL");
}

TEST_CASE("intersection property matches linear resolution on forests") {
  Rng rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    ForestParams p;
    p.pure = trial % 2 == 0;
    p.max_facets = 5;
    SimplicialComplex c = random_simplicial_forest(rng, p);
    CHECK(intersection_property(c).holds == has_linear_resolution(facet_ideal(c)));
  }
}

TEST_CASE("adjacent good leaf order") {
  std::vector<int> p = adjacent_good_leaf_order(kPath);
  CHECK((p == std::vector<int>{0, 1, 2} || p == std::vector<int>{2, 1, 0}));
  CHECK(adjacent_good_leaf_order(cx(2, {{1, 2}})) == std::vector<int>{0});
  std::vector<int> s = adjacent_good_leaf_order(kStrip);
  CHECK(is_good_leaf_order(kStrip, s));
  CHECK(consecutive_distance_one(kStrip, s));
  for (const SimplicialComplex& c : intersection_property_trees(3, 6)) {
    std::vector<int> o = adjacent_good_leaf_order(c);
    CHECK(is_good_leaf_order(c, o));
    CHECK(consecutive_distance_one(c, o));
    CHECK(ordering_consequences_check(c, o).holds());
  }
}

TEST_CASE("ordering consequences on small trees") {
  CHECK(ordering_consequences_check(kPath, {0, 1, 2}).holds());
  CHECK(ordering_consequences_check(cx(3, {{1, 2}, {2, 3}}), {0, 1}).holds());
}

TEST_CASE("random forests are forests and respect their parameters") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    ForestParams p;
    p.connected = trial % 2 == 0;
    p.intersection_property = trial % 3 == 0;
    p.pure = trial % 5 == 0;
    SimplicialComplex c = random_simplicial_forest(rng, p);
    CHECK(is_forest(c));
    CHECK(c.facet_count() <= p.max_facets);
    CHECK(c.dimension() <= p.max_dim);
    if (p.connected || (p.intersection_property && c.dimension() > 0)) CHECK(is_connected(c));
    if (p.intersection_property) CHECK(intersection_property(c).holds);
    if (p.pure) CHECK(c.is_pure());
  }
}

TEST_CASE("intersection property corpus is deduplicated") {
  auto corpus = intersection_property_trees(2, 4);
  std::set<std::string> forms;
  for (const SimplicialComplex& c : corpus) {
    CHECK(intersection_property(c).holds);
    forms.insert(complex_canonical_form(c));
  }
  CHECK(forms.size() == corpus.size());
}
