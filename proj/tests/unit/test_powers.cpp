#include <doctest.h>

#include "facetreg/error.hpp"
#include "facetreg/generators.hpp"
#include "facetreg/powers.hpp"
#include "helpers.hpp"

using namespace facetreg;
using th::cx;

namespace {
std::vector<int> identity_order(const SimplicialComplex& c) {
  std::vector<int> o(static_cast<std::size_t>(c.facet_count()));
  for (int i = 0; i < c.facet_count(); ++i) o[static_cast<std::size_t>(i)] = i;
  return o;
}
}  // namespace

TEST_CASE("canonical power generators of an edge pair") {
  SimplicialComplex c = cx(3, {{1, 2}, {2, 3}});
  auto g = power_generators_canonical(c, {0, 1}, 2);
  REQUIRE(g.size() == 3);
  CHECK(g[0].exponents == std::vector<int>{2, 0});
  CHECK(g[1].exponents == std::vector<int>{1, 1});
  CHECK(g[2].exponents == std::vector<int>{0, 2});
  auto one = power_generators_canonical(c, {1, 0}, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].value == Monomial::from_support(3, {1, 2}));
}

TEST_CASE("factorizations are unique on a two-triangle strip") {
  SimplicialComplex c = cx(4, {{1, 2, 3}, {2, 3, 4}});
  auto g = power_generators_canonical(c, {0, 1}, 2);
  CHECK(g.size() == 3);
  for (const PowerGenerator& p : g) CHECK(p.factorizations == 1);
}

TEST_CASE("power generators match the ideal power") {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialComplex c = random_simplicial_forest(rng, ForestParams{});
    auto order = *good_leaf_order(c);
    for (int s = 1; s <= 2; ++s) {
      std::vector<Monomial> values;
      for (const PowerGenerator& p : power_generators(c, order, s)) values.push_back(p.value);
      CHECK(MonomialIdeal(c.vertex_count(), values) == ideal_power(facet_ideal(c), s));
    }
  }
}

TEST_CASE("linear quotients of powers with the witness recipe") {
  VerificationReport r = verify_linear_quotients_power(cx(3, {{1, 2}, {2, 3}}), 2);
  CHECK(r.passed());
  CHECK(verify_linear_quotients_power(cx(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}), 1).passed());
  for (const SimplicialComplex& c : intersection_property_trees(2, 5))
    for (int s = 1; s <= 3; ++s) CHECK(verify_linear_quotients_power(c, s).passed());
  CHECK_THROWS_AS(verify_linear_quotients_power(cx(5, {{1, 2, 3}, {3, 4, 5}}), 1), PreconditionError);
}

TEST_CASE("prefix colons of the edge pair square") {
  SimplicialComplex c = cx(3, {{1, 2}, {2, 3}});
  auto g = power_generators_canonical(c, {0, 1}, 2);
  for (std::size_t k = 1; k < g.size(); ++k) {
    std::vector<Monomial> prefix;
    for (std::size_t j = 0; j < k; ++j) prefix.push_back(g[j].value);
    MonomialIdeal colon = colon_by_monomial(MonomialIdeal(3, prefix), g[k].value);
    CHECK(colon == th::sq(3, {{1}}));
  }
}

TEST_CASE("theorem A items") {
  TheoremAItems strip = theorem_A_items(cx(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}), 2);
  CHECK(strip.intersection);
  CHECK(strip.linear);
  CHECK(strip.all_lq());
  CHECK(strip.some_linear_power());
  CHECK(strip.some_linear_syzygies());

  TheoremAItems gap = theorem_A_items(cx(5, {{1, 2, 3}, {3, 4, 5}}), 2);
  CHECK_FALSE(gap.intersection);
  CHECK_FALSE(gap.linear);
  CHECK_FALSE(gap.some_lq());
  CHECK_FALSE(gap.some_linear_power());
  CHECK_FALSE(gap.some_linear_syzygies());

  TheoremAItems single = theorem_A_items(cx(3, {{1, 2, 3}}), 2);
  CHECK(single.intersection);
  CHECK(single.linear);
  CHECK(single.all_lq());
  CHECK(single.some_linear_power());

  CHECK(verify_theorem_A(cx(5, {{1, 2, 3}, {3, 4, 5}}), 2).passed());
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    ForestParams p;
    p.intersection_property = trial % 2 == 0;
    p.max_facets = 5;
    CHECK(verify_theorem_A(random_simplicial_forest(rng, p), 2).passed());
  }
}

TEST_CASE("colon identities") {
  SimplicialComplex c = cx(3, {{1, 2}, {2, 3}});
  // I^2 : m_2 = I
  CHECK(colon_by_monomial(ideal_power(facet_ideal(c), 2), Monomial::from_support(3, {1, 2})) == facet_ideal(c));
  CHECK(verify_colon_identities(c, {0, 1}, 1).passed());
  CHECK(order_prefix_ideal(c, {0, 1}, 1) == th::sq(3, {{1, 2}}));
  CHECK(order_suffix_ideal(c, {0, 1}, 1) == th::sq(3, {{2, 3}}));
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    ForestParams p;
    p.max_facets = 5;
    SimplicialComplex f = random_simplicial_forest(rng, p);
    for (int s = 1; s <= 2; ++s) CHECK(verify_colon_identities(f, *good_leaf_order(f), s).passed());
  }
}

TEST_CASE("power regularity bound") {
  SimplicialComplex c = cx(3, {{1, 2}, {2, 3}});
  CHECK(quotient_regularity(ideal_power(facet_ideal(c), 2)) == 3);
  CHECK(power_reg_upper_bound(c, {0, 1}, 1) >= 3);
  // one facet of degree d: I^{s+1} is principal of degree d(s+1)
  SimplicialComplex one = cx(3, {{1, 2, 3}});
  CHECK(power_reg_upper_bound(one, {0}, 1) == 3 * 2 - 1);
  CHECK(power_reg_upper_bound(one, {0}, 2) == 3 * 3 - 1);
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    ForestParams p;
    p.max_facets = 4;
    SimplicialComplex f = random_simplicial_forest(rng, p);
    CHECK(power_reg_upper_bound(f, *good_leaf_order(f), 1) >=
          quotient_regularity(ideal_power(facet_ideal(f), 2)));
  }
}

TEST_CASE("power bound on a broom path complex") {
  SimplicialComplex c = cx(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(power_reg_upper_bound(c, identity_order(c), 1) >= quotient_regularity(ideal_power(facet_ideal(c), 2)));
}

TEST_CASE("slack tables") {
  ConjectureReport strip = conjecture_D_check(cx(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}), 3);
  REQUIRE(strip.rows.size() == 3);
  for (const SlackRow& r : strip.rows) {
    CHECK(r.slack() == 0);
    CHECK(r.reg_power == 3 * r.s);
  }
  ConjectureReport gap = conjecture_D_check(cx(5, {{1, 2, 3}, {3, 4, 5}}), 3);
  REQUIRE(gap.rows.size() == 3);
  CHECK(gap.min_slack() >= 0);
  CHECK_FALSE(gap.finding());

  ConjectureReport split = conjecture_D_check(cx(6, {{1, 2}, {3, 4, 5}}), 2);
  CHECK_FALSE(split.connected);
  CHECK(split.component_min_slack.size() == 2);

  ConjectureReport row = conjecture_D_check(cx(8, {{1, 2, 3, 4}, {2, 3, 5, 6}, {5, 6, 7, 8}}), 2);
  CHECK(row.rows[1].reg_power == 10);
  CHECK(row.rows[1].bound == 9);
  CHECK(row.finding());
  CHECK_THROWS_AS(conjecture_D_check(cx(3, {{1, 2}, {2, 3}, {1, 3}}), 2), PreconditionError);
}
