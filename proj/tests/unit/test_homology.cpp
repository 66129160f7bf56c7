#include <doctest.h>

#include "facetreg/error.hpp"
#include "facetreg/generators.hpp"
#include "facetreg/powers.hpp"
#include "facetreg/rooted_tree.hpp"
#include "facetreg/suites.hpp"
#include "helpers.hpp"

using namespace facetreg;
using th::cx;
using th::sq;

namespace {

MonomialIdeal random_ideal(Rng& rng, bool squarefree) {
  const int n = rng.uniform(2, 6);
  const int r = rng.uniform(1, 6);
  std::vector<Monomial> g;
  for (int k = 0; k < r; ++k) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int& x : e) x = rng.uniform(0, squarefree ? 1 : 2);
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
    g.push_back(Monomial(e));
  }
  return MonomialIdeal(n, g);
}

}  // namespace

TEST_CASE("lcm lattice") {
  auto lat = lcm_lattice_degrees(sq(3, {{1, 2}, {2, 3}}));
  CHECK(lat.size() == 3);
  CHECK(lcm_lattice_degrees(sq(1, {{1}})).size() == 1);
  CHECK(lcm_lattice_degrees(terai_ideal()).size() <= 1024);
}

TEST_CASE("small Betti tables") {
  BettiTable b = graded_betti(sq(2, {{1}, {2}}));
  CHECK(b.get(0, 1) == 2);
  CHECK(b.get(1, 2) == 1);
  CHECK(b.entries().size() == 2);

  BettiTable path = graded_betti(sq(4, {{1, 2}, {2, 3}, {3, 4}}));
  for (const auto& [k, v] : path.entries()) CHECK(k.second == k.first + 2);
  CHECK(path.regularity() == 2);

  CHECK(quotient_regularity(sq(2, {{1}, {2}})) == 0);
  CHECK(regularity(sq(2, {{1}, {2}})) == 1);
  CHECK_FALSE(regularity(MonomialIdeal::zero(3)).has_value());
  CHECK(quotient_regularity(MonomialIdeal::zero(3)) == 0);
}

TEST_CASE("path x0->x1->x2 at t=2 has reg(R/I) = 1") {
  CHECK(quotient_regularity(t_path_ideal(path_tree(3), 2)) == 1);
}

TEST_CASE("Terai ideal: I linear, I^2 not, over the rationals") {
  const MonomialIdeal I = terai_ideal();
  BettiTable b = graded_betti(I, FieldSpec::rational());
  for (const auto& [k, v] : b.entries()) CHECK(k.second == k.first + 3);
  CHECK(has_linear_resolution(I, FieldSpec::rational()));
  CHECK(*regularity(ideal_power(I, 2), FieldSpec::rational()) > 6);
  // characteristic 2 changes the answer for I
  CHECK_FALSE(has_linear_resolution(I, FieldSpec::prime(2)));
}

TEST_CASE("Sturmfels ideal") {
  CHECK(has_linear_quotients(sturmfels_generators()));
  const MonomialIdeal I(6, sturmfels_generators());
  CHECK(has_linear_resolution(I));
  CHECK_FALSE(has_linear_resolution(ideal_power(I, 2)));
}

TEST_CASE("linear first syzygies and linear quotients") {
  CHECK(has_linear_first_syzygies(sq(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(has_linear_first_syzygies(sq(4, {{1, 2}, {3, 4}})));
  CHECK(has_linear_first_syzygies(sq(4, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK_THROWS_AS(has_linear_first_syzygies(sq(3, {{1}, {2, 3}})), PreconditionError);
  CHECK_FALSE(has_linear_resolution(sq(3, {{1}, {2, 3}})));

  const MonomialIdeal gap = sq(4, {{1, 2}, {3, 4}});
  CHECK_FALSE(has_linear_quotients(gap.generators()));
  CHECK_FALSE(has_linear_quotients({gap.generators()[1], gap.generators()[0]}));
  CHECK(has_linear_quotients({Monomial::from_support(3, {0, 1})}));
}

TEST_CASE("oracle agrees with the brute-force upper Koszul computation") {
  Rng rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const MonomialIdeal I = random_ideal(rng, trial % 2 == 0);
    CAPTURE(to_string(I));
    CHECK(th::as_table(graded_betti(I)) == th::brute_table(I));
  }
}

TEST_CASE("oracle agrees with brute force on small forest powers") {
  Rng rng(5);
  ForestParams p;
  p.max_facets = 4;
  p.max_dim = 2;
  for (int trial = 0; trial < 15; ++trial) {
    SimplicialComplex c = random_simplicial_forest(rng, p);
    if (c.vertex_count() > 9) continue;
    const MonomialIdeal I2 = ideal_power(facet_ideal(c), 2);
    CAPTURE(to_string(I2));
    CHECK(th::as_table(graded_betti(I2)) == th::brute_table(I2));
  }
}

TEST_CASE("strand collapses do not change the table") {
  Rng rng(77);
  OracleLimits plain;
  plain.collapse_strands = false;
  for (int trial = 0; trial < 30; ++trial) {
    const MonomialIdeal I = random_ideal(rng, trial % 3 != 0);
    CHECK(graded_betti(I, {}, plain) == graded_betti(I));
  }
  const MonomialIdeal sq2 = ideal_power(MonomialIdeal(6, sturmfels_generators()), 2);
  CHECK(graded_betti(sq2, {}, plain) == graded_betti(sq2));
}

TEST_CASE("strand bookkeeping passes the Euler check") {
  BettiComputation c = graded_betti_detailed(ideal_power(sq(5, {{1, 2, 3}, {3, 4, 5}}), 2), FieldSpec::rational(),
                                             OracleLimits{}, true);
  REQUIRE_FALSE(c.strands.empty());
  for (const StrandRecord& s : c.strands) CHECK(s.euler_holds());
}

TEST_CASE("twin reduction keeps the regularity") {
  for (int h = 1; h <= 3; ++h)
    for (const RootedTree& p : perfect_trees(h, 2))
      for (int t = (h + 2) / 2; t <= h + 1; ++t) {
        const MonomialIdeal I = t_path_ideal(p, t);
        CHECK(quotient_regularity_reduced(I) == quotient_regularity(I));
        CHECK(drop_twin_variables(I).ambient_size() <= I.ambient_size());
      }
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const MonomialIdeal I = random_ideal(rng, true);
    CHECK(quotient_regularity_reduced(I) == quotient_regularity(I));
  }
}

TEST_CASE("characteristic 0 and 32003 agree on forests") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialComplex c = random_simplicial_forest(rng, ForestParams{});
    CHECK(graded_betti(facet_ideal(c), FieldSpec::prime(32003)) == graded_betti(facet_ideal(c)));
  }
}

TEST_CASE("lattice cap is a clean error") {
  OracleLimits tiny;
  tiny.max_lattice = 4;
  CHECK_THROWS_AS(graded_betti(terai_ideal(), {}, tiny), ResourceError);
}

TEST_CASE("bad characteristic is rejected") { CHECK_THROWS(FieldSpec::prime(4)); }

TEST_CASE("three tetrahedra in a row: reg(I^2) exceeds (d+1)(s-1) + reg(I)") {
  // Values from the brute-force oracle and a separate Python computation.
  const MonomialIdeal I = sq(8, {{1, 2, 3, 4}, {2, 3, 5, 6}, {5, 6, 7, 8}});
  BettiTable b1 = graded_betti(I);
  CHECK(th::as_table(b1) == brute::Table{{{0, 4}, 3}, {{1, 6}, 2}});
  CHECK(b1.regularity() == 5);
  const MonomialIdeal I2 = ideal_power(I, 2);
  BettiTable b2 = graded_betti(I2);
  CHECK(th::as_table(b2) == brute::Table{{{0, 8}, 6}, {{1, 10}, 6}, {{2, 12}, 1}});
  CHECK(th::as_table(b2) == th::brute_table(I2));
  CHECK(b2.regularity() == 10);
}

TEST_CASE("five-facet tree with reg(I^2) = 13") {
  const MonomialIdeal I =
      sq(13, {{1, 2, 3, 4}, {1, 4, 5, 6}, {3, 7, 8, 9}, {3, 7, 10, 11}, {2, 4, 12, 13}});
  CHECK(regularity(ideal_power(I, 2)) == 13);
  CHECK(regularity(ideal_power(I, 2), FieldSpec::prime(32003)) == 13);
}
