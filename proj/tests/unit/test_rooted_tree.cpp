#include <doctest.h>

#include <algorithm>

#include "facetreg/error.hpp"
#include "facetreg/generators.hpp"
#include "facetreg/rooted_tree.hpp"
#include "helpers.hpp"

using namespace facetreg;

namespace {

int oracle(const RootedTree& t, int len) { return quotient_regularity(t_path_ideal(t, len)); }

RootedTree star(int k) {
  std::vector<int> parent{-1};
  for (int i = 0; i < k; ++i) parent.push_back(0);
  return RootedTree(parent);
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(RootedTree({-1, -1}), StructuralError);
  CHECK_THROWS_AS(RootedTree({1, 0}), StructuralError);
  CHECK_THROWS_AS(RootedTree({-1, 5}), StructuralError);
  CHECK(RootedTree().empty());
  CHECK(RootedTree().height() == -1);
}

TEST_CASE("tree statistics") {
  TreeStats b = tree_stats(k_nary_tree(2, 2));
  CHECK(b.height == 2);
  CHECK(b.top_level_count == 4);
  CHECK(b.outdegree[0] == 2);
  TreeStats one = tree_stats(RootedTree({-1}));
  CHECK(one.height == 0);
  CHECK(one.top_level_count == 1);
  TreeStats p = tree_stats(path_tree(5));
  CHECK(p.height == 4);
  for (int d : p.outdegree) CHECK(d <= 1);
}

TEST_CASE("classification") {
  TreeClass b = classify(k_nary_tree(2, 2));
  CHECK(b.perfect);
  CHECK(b.k_nary == 2);
  CHECK_FALSE(b.broom);
  TreeClass p = classify(path_tree(4));
  CHECK(p.perfect);
  CHECK(p.k_nary == 1);
  CHECK(p.broom);
  TreeClass c = classify(RootedTree({-1, 0, 0, 1}));
  CHECK_FALSE(c.perfect);
  CHECK(c.broom);
  CHECK(c.handle == std::vector<int>{0, 1, 3});
}

TEST_CASE("path ideals") {
  CHECK(t_path_ideal(path_tree(3), 2) == th::sq(3, {{1, 2}, {2, 3}}));
  CHECK(t_path_ideal(k_nary_tree(2, 2), 3).size() == 4);
  CHECK(t_path_ideal(path_tree(3), 4).is_zero());
  CHECK(t_path_ideal(path_tree(3), 1).size() == 3);
}

TEST_CASE("path complexes are forests") {
  SimplicialComplex p = path_complex(path_tree(5), 3);
  CHECK(p.facet_count() == 3);
  CHECK(is_forest(p));
  SimplicialComplex b = path_complex(k_nary_tree(2, 2), 3);
  CHECK(b.facet_count() == 4);
  CHECK(is_forest(b));
  SimplicialComplex s = path_complex(star(4), 2);
  CHECK(s.facet_count() == 4);
  CHECK(is_forest(s));
}

TEST_CASE("clean form") {
  // bristle at level 1 sits below t - 1 = 2
  RootedTree c = clean_form(make_broom({1, 0, 0}), 3);
  CHECK(c.size() == 4);
  RootedTree p = k_nary_tree(3, 2);
  CHECK(clean_form(p, 2).size() == p.size());
  CHECK(clean_form(path_tree(3), 4).empty());
}

TEST_CASE("clean form keeps the path ideal") {
  for (int n = 1; n <= 8; ++n)
    for (const RootedTree& t : all_rooted_trees(n))
      for (int len = 1; len <= 4; ++len)
        CHECK(t_path_ideal(clean_form(t, len), len, t.size()) == t_path_ideal(t, len));
}

TEST_CASE("leaf decomposition of a path") {
  LeafDecomposition d = leaf_decomposition(path_tree(5), 4, 2);
  CHECK(d.path == std::vector<int>{3, 4});
  CHECK(d.above == 2);
  CHECK(d.remainder.size() == 2);
  for (const RootedForest& f : d.sides) CHECK(f.empty());

  LeafDecomposition one = leaf_decomposition(path_tree(5), 4, 1);
  CHECK(one.path == std::vector<int>{4});

  LeafDecomposition b = leaf_decomposition(k_nary_tree(2, 2), 3, 3);
  CHECK_FALSE(b.above.has_value());
  CHECK(b.remainder.empty());
  REQUIRE(b.sides[0].empty());
  // the other subtree of the root hangs off x_1(z), the sibling leaf off x_2(z)
  REQUIRE(b.sides[1].size() == 1);
  CHECK(b.sides[1][0].height() == 1);
  REQUIRE(b.sides[2].size() == 1);
  CHECK(b.sides[2][0].height() == 0);
  CHECK_THROWS_AS(leaf_decomposition(path_tree(5), 2, 2), PreconditionError);
}

TEST_CASE("canonical codes") {
  const std::vector<std::size_t> counts{1, 1, 2, 4, 9, 20, 48, 115};
  for (int n = 1; n <= 8; ++n) {
    auto trees = all_rooted_trees(n);
    CHECK(trees.size() == counts[static_cast<std::size_t>(n - 1)]);
    for (const RootedTree& t : trees) CHECK(canonical_code(tree_from_code(canonical_code(t))) == canonical_code(t));
  }
  CHECK(canonical_code(RootedTree({-1, 0, 0, 1})) == canonical_code(RootedTree({-1, 0, 1, 0})));
}

TEST_CASE("perfect formula and the k-nary values") {
  CHECK(reg_formula_perfect(k_nary_tree(2, 2), 3) == 3);
  CHECK(reg_formula_perfect(k_nary_tree(2, 2), 2) == 2);
  CHECK(reg_formula_perfect(k_nary_tree(2, 3), 2) == 4);
  CHECK(oracle(k_nary_tree(2, 3), 2) == 4);
  CHECK(reg_formula_perfect(k_nary_tree(3, 2), 3) == 4);
  CHECK_THROWS_AS(reg_formula_perfect(k_nary_tree(2, 3), 1), PreconditionError);
  CHECK_THROWS_AS(reg_formula_perfect(RootedTree({-1, 0, 0, 1}), 2), PreconditionError);
}

TEST_CASE("general upper bound") {
  for (int h = 1; h <= 2; ++h)
    for (const RootedTree& p : perfect_trees(h, 3))
      for (int t = (h + 2) / 2; t <= h + 1; ++t) CHECK(reg_upper_bound_general(p, t) == reg_formula_perfect(p, t));
  CHECK(reg_upper_bound_general(path_tree(5), 3) == 2);
  CHECK(oracle(path_tree(5), 3) == 2);
  CHECK(reg_upper_bound_general(make_broom({0, 1, 0, 0}), 3) >= oracle(make_broom({0, 1, 0, 0}), 3));
}

TEST_CASE("broom formula instantiations") {
  CHECK(reg_broom(path_tree(3), 2) == 1);
  CHECK(reg_broom(path_tree(8), 3) == 4);
  CHECK(reg_broom(path_tree(3), 3) == 2);
  CHECK(reg_broom(path_tree(5), 2) == oracle(path_tree(5), 2));
}

TEST_CASE("broom formula misses brooms with a low bristle") {
  // Handle of height 3 plus one leaf on the root: I_2 is the edge ideal of a
  // path on five vertices, which has reg(R/I) = 2.
  const RootedTree b = make_broom({1, 0, 0});
  CHECK(reg_broom(b, 2) == 1);
  CHECK(oracle(b, 2) == 2);
  CHECK(reg_recursive(b, 2) == 2);
}

TEST_CASE("recursion") {
  CHECK(reg_recursive(path_tree(5), 2) == 2);
  CHECK(reg_recursive(path_tree(2), 3) == 0);
  for (int h = 1; h <= 2; ++h)
    for (const RootedTree& p : perfect_trees(h, 3))
      for (int t = (h + 2) / 2; t <= h + 1; ++t) CHECK(reg_recursive(p, t) == reg_formula_perfect(p, t));
  for (int n = 1; n <= 7; ++n)
    for (const RootedTree& t : all_rooted_trees(n))
      for (int len = 2; len <= 3; ++len) CHECK(reg_recursive(t, len) == oracle(t, len));
  CHECK(recursion_cache_size() > 0);
  clear_recursion_cache();
  CHECK(recursion_cache_size() == 0);
}

TEST_CASE("recursion is monotone under induced subforests") {
  for (int n = 2; n <= 7; ++n)
    for (const RootedTree& t : all_rooted_trees(n))
      for (int len = 2; len <= 3; ++len) {
        const int whole = reg_recursive(t, len);
        for (int v = 0; v < t.size(); ++v) {
          std::vector<int> keep;
          for (int u = 0; u < t.size(); ++u)
            if (u != v) keep.push_back(u);
          CHECK(reg_recursive(induced_subforest(t, keep), len) <= whole);
        }
      }
}

TEST_CASE("alpha bound") {
  CHECK(alpha_bound(path_tree(5), 2) == 2);
  CHECK(alpha_bound(k_nary_tree(2, 2), 2) >= 2);
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    RootedTree t = random_rooted_tree(rng, rng.uniform(2, 9));
    for (int len = 2; len <= t.height() + 1; ++len) CHECK(alpha_bound(t, len) >= reg_recursive(t, len));
  }
  CHECK_THROWS_AS(alpha_bound(path_tree(2), 4), PreconditionError);
}

TEST_CASE("broom facet order") {
  BroomOrder p = broom_facet_order(path_tree(4), 2);
  CHECK(p.index == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}});
  BroomOrder b = broom_facet_order(make_broom({0, 1}), 2);
  CHECK(b.index == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {1, 0}});
  for (int h = 1; h <= 4; ++h)
    for (const RootedTree& br : brooms(h, 2))
      for (int t = 2; t <= h + 1; ++t) {
        BroomOrder o = broom_facet_order(br, t);
        std::vector<int> ids(static_cast<std::size_t>(o.complex.facet_count()));
        for (int i = 0; i < o.complex.facet_count(); ++i) ids[static_cast<std::size_t>(i)] = i;
        CHECK(is_good_leaf_order(o.complex, ids));
        CHECK(facet_ideal(o.complex) == t_path_ideal(br, t));
      }
}

TEST_CASE("power closed forms") {
  CHECK(power_reg_broom(path_tree(3), 2, 2) == 3);
  CHECK(power_reg_broom(path_tree(3), 2, 1) == reg_broom(path_tree(3), 2));
  CHECK(power_reg_broom(path_tree(5), 3, 3) == 8);
  CHECK(power_reg_perfect_top(k_nary_tree(2, 2), 2) == 6);
  CHECK(power_reg_perfect_top(k_nary_tree(3, 2), 2) == 7);
  CHECK(power_reg_perfect_top(k_nary_tree(2, 2), 1) == reg_formula_perfect(k_nary_tree(2, 2), 3));
  CHECK(quotient_regularity(ideal_power(t_path_ideal(k_nary_tree(2, 2), 3), 2)) == 6);
}

TEST_CASE("power linearity classification") {
  CHECK(classify_path_power_linearity(path_tree(4), 2));
  CHECK(has_linear_resolution(t_path_ideal(path_tree(4), 2)));
  CHECK_FALSE(classify_path_power_linearity(path_tree(5), 2));
  CHECK_FALSE(has_linear_resolution(t_path_ideal(path_tree(5), 2)));
  CHECK_FALSE(classify_path_power_linearity(k_nary_tree(2, 2), 3));
}
