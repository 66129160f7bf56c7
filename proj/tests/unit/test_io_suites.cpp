#include <doctest.h>

#include "facetreg/error.hpp"
#include "facetreg/io.hpp"
#include "facetreg/suites.hpp"
#include "helpers.hpp"

using namespace facetreg;

TEST_CASE("complex files") {
  ComplexInput in = parse_complex_json(R"({"n": 4, "facets": [[1,2],[2,3],[3,4]]})");
  CHECK(in.complex.facet_count() == 3);
  CHECK(in.isolated.empty());
  CHECK(complex_to_json(in.complex) == nlohmann::json::parse(R"({"n": 4, "facets": [[1,2],[2,3],[3,4]]})"));

  ComplexInput gaps = parse_complex_json(R"({"n": 6, "facets": [[2,5],[5,6]]})");
  CHECK(gaps.complex.vertex_count() == 3);
  CHECK(gaps.labels == std::vector<int>{2, 5, 6});
  CHECK(gaps.isolated == std::vector<int>{1, 3, 4});
}

TEST_CASE("complex file errors") {
  CHECK_THROWS_AS(parse_complex_json("{"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"facets": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"n": 2, "facets": [[1,3]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"n": 2, "facets": [[1,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"n": 2, "facets": [[1,"a"]]})"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"n": 2, "facets": []})"), ParseError);
  try {
    parse_complex_json(R"({"n": 3, "facets": [[1,2],[1,2,3]]})");
    FAIL("nested facets accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "facets[0] {1,2} is contained in facets[1] {1,2,3}");
  }
  CHECK_THROWS_AS(load_complex_file("/nonexistent/complex.json"), ParseError);
}

TEST_CASE("tree files") {
  RootedTree t = parse_tree_json(R"({"n": 4, "root": 0, "parent": [-1, 0, 0, 1]})");
  CHECK(t.size() == 4);
  CHECK(t.height() == 2);
  CHECK(parse_tree_json(tree_to_json(t).dump()).parents() == t.parents());
  CHECK_THROWS_AS(parse_tree_json(R"({"n": 2, "parent": [-1, -1]})"), ParseError);
  CHECK_THROWS_AS(parse_tree_json(R"({"n": 2, "root": 1, "parent": [-1, 0]})"), ParseError);
  CHECK_THROWS_AS(parse_tree_json(R"({"n": 3, "parent": [-1, 0]})"), ParseError);
  CHECK_THROWS_AS(parse_tree_json(R"({"n": 2, "parent": [1, 0]})"), ParseError);
}

TEST_CASE("betti json keys") {
  nlohmann::json j = betti_json(graded_betti(th::sq(2, {{1}, {2}})));
  CHECK(j == nlohmann::json::parse(R"({"0,1": 2, "1,2": 1})"));
}

TEST_CASE("instances come back in index order") {
  auto out = run_instances(50, 3, [](int i) {
    InstanceResult r;
    r.descriptor = std::to_string(i * i);
    if (i == 7) throw ResourceError("cap");
    if (i == 9) throw std::runtime_error("boom");
    return r;
  });
  REQUIRE(out.size() == 50);
  for (int i = 0; i < 50; ++i) CHECK(out[static_cast<std::size_t>(i)].id == i);
  CHECK(out[5].descriptor == "25");
  CHECK(out[7].error);
  CHECK_FALSE(out[9].error);
  CHECK_FALSE(out[9].pass);
  SuiteResult r;
  r.instances = out;
  CHECK(r.errors() == 1);
  CHECK(r.failures() == 1);
  CHECK(r.exit_code() == 2);
  r.instances.erase(r.instances.begin() + 7);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("reports are reproducible") {
  SuiteConfig a;
  a.seed = 7;
  a.count = 15;
  SuiteConfig b = a;
  b.jobs = 3;
  const std::string first = suite_json(run_suite("theoremA", a), a).dump();
  CHECK(first == suite_json(run_suite("theoremA", a), a).dump());
  CHECK(first == suite_json(run_suite("theoremA", b), a).dump());
  SuiteConfig other = a;
  other.seed = 8;
  CHECK(first != suite_json(run_suite("theoremA", other), other).dump());

  const std::string scan = conjecture_json(run_conjecture_scan(a, "mixed"), a, "mixed").dump();
  CHECK(scan == conjecture_json(run_conjecture_scan(b, "mixed"), a, "mixed").dump());
}

TEST_CASE("reports embed the configuration") {
  SuiteConfig c;
  c.seed = 3;
  c.field = FieldSpec::prime(32003);
  nlohmann::json j = suite_json(run_suite("fixtures", SuiteConfig{}), c);
  CHECK(j["version"] == FACETREG_VERSION);
  CHECK(j["config"]["seed"] == 3);
  CHECK(j["config"]["characteristic"] == 32003);
  CHECK(j["config"]["caps"].contains("max_gens"));
  CHECK_FALSE(j.contains("seconds"));
  CHECK(suite_tsv(run_suite("fixtures", SuiteConfig{}), c).find("seed=3") != std::string::npos);
}

TEST_CASE("suite registry") {
  for (const char* name : {"theoremA", "lemmaColon", "linearQuotients", "perfectFormula", "broomFormula",
                           "recursionOracle", "powerFormulas", "bounds", "fixtures"})
    CHECK(is_suite(name));
  CHECK_FALSE(is_suite("nope"));
  CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), PreconditionError);
  CHECK(run_suite("fixtures", SuiteConfig{}).passed());
}

TEST_CASE("intersection-property scan has zero slack") {
  SuiteConfig c;
  c.count = 20;
  c.s = 2;
  ConjectureScan scan = run_conjecture_scan(c, "ip");
  CHECK(scan.findings == 0);
  CHECK(scan.min_slack == 0);
  CHECK_THROWS_AS(run_conjecture_scan(c, "other"), PreconditionError);
}
