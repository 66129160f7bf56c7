// facetreg: analyze complexes and rooted trees, run verification suites,
// scan the power-regularity bound, generate seeded corpora.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "facetreg/error.hpp"
#include "facetreg/generators.hpp"
#include "facetreg/homology.hpp"
#include "facetreg/io.hpp"
#include "facetreg/powers.hpp"
#include "facetreg/rooted_tree.hpp"
#include "facetreg/simplicial.hpp"
#include "facetreg/suites.hpp"

using namespace facetreg;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string format = "json";
  std::string out;
  std::string mode = "mixed";
  std::string kind = "complex";
  std::string suite;
  int characteristic = 0;
  std::size_t max_lattice = OracleLimits{}.max_lattice;
  SuiteConfig config;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
}

std::string facet_labels(const Facet& f, const std::vector<int>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i)
    s += (i ? "," : "") + std::to_string(labels[static_cast<std::size_t>(f[i])]);
  return s + "}";
}

std::string tsv_of(const json& report) {
  std::ostringstream out;
  out << "# facetreg " << FACETREG_VERSION << "\n";
  for (const auto& [k, v] : report.items()) {
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (text.size() > 200) text = text.substr(0, 200) + "...";
    out << k << "\t" << text << "\n";
  }
  return out.str();
}

json header(const Options& o, const std::string& command) {
  return json{{"tool", "facetreg"}, {"version", FACETREG_VERSION}, {"command", command}, {"config", config_json(o.config)}};
}

int analyze_complex(const Options& o) {
  ComplexInput in = load_complex_file(o.input);
  const SimplicialComplex& c = in.complex;
  auto names = [&](const std::vector<int>& ids) {
    json a = json::array();
    for (int i : ids) a.push_back(facet_labels(c.facet(i), in.labels));
    return a;
  };
  json r = header(o, "analyze-complex");
  r["facets"] = names([&] {
    std::vector<int> all(static_cast<std::size_t>(c.facet_count()));
    for (int i = 0; i < c.facet_count(); ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }());
  r["isolated_vertices_dropped"] = in.isolated;
  r["dim"] = c.dimension();
  r["pure"] = c.is_pure();
  auto order = good_leaf_order(c);
  r["forest"] = order.has_value();
  r["good_leaf_order"] = order ? names(*order) : json(nullptr);
  r["connected"] = is_connected(c);
  r["codim1_connected"] = is_connected_codim_one(c);
  IntersectionReport ip = intersection_property(c);
  r["intersection"] = ip.holds;
  std::string reason = to_string(ip.reason);
  if (ip.reason == IntersectionReason::PairFail)
    reason += "(" + facet_labels(c.facet(ip.g), in.labels) + "," + facet_labels(c.facet(ip.h), in.labels) + ")";
  r["intersection_reason"] = reason;
  if (ip.holds) r["adjacent_good_leaf_order"] = names(adjacent_good_leaf_order(c));
  try {
    BettiTable b = graded_betti(facet_ideal(c), o.config.field, o.config.limits);
    r["betti"] = betti_json(b);
    r["reg_I"] = b.regularity() ? json(*b.regularity()) : json(nullptr);
    r["reg_R_mod_I"] = b.quotient_regularity();
    r["linear_resolution"] = table_is_linear(b, static_cast<int>(c.facet(0).size())) && c.is_pure();
  } catch (const ResourceError& e) {
    r["betti"] = nullptr;
    r["oracle_skipped"] = e.what();
  }
  if (o.config.s > 1 && order) {
    ConjectureReport rep = conjecture_D_check(c, o.config.s, o.config.field, o.config.limits, o.config.max_gens);
    json rows = json::array();
    for (const SlackRow& row : rep.rows)
      rows.push_back(json{{"s", row.s}, {"reg", row.reg_power}, {"bound", row.bound}, {"slack", row.slack()}});
    r["power_slack"] = rows;
  }
  emit(o, o.format == "tsv" ? tsv_of(r) : r.dump(2) + "\n");
  return 0;
}

int analyze_tree(const Options& o) {
  if (o.config.t < 1) throw PreconditionError("--t is required and must be positive");
  const RootedTree tree = load_tree_file(o.input);
  const int t = o.config.t;
  const int h = tree.height();
  json r = header(o, "analyze-tree");
  TreeStats st = tree_stats(tree);
  r["vertices"] = tree.size();
  r["height"] = h;
  r["leaves_per_level"] = st.leaves_per_level;
  r["outdegree_per_level"] = st.outdegree_per_level;
  TreeClass cls = classify(tree);
  r["class"] = {{"perfect", cls.perfect},
                {"k_nary", cls.k_nary ? json(*cls.k_nary) : json(nullptr)},
                {"broom", cls.broom}};
  r["canonical_code"] = canonical_code(tree);
  const MonomialIdeal I = t_path_ideal(tree, t);
  r["clean_form"] = tree_to_json(clean_form(tree, t));
  json gens = json::array();
  for (const Monomial& g : I.generators()) gens.push_back(to_string(g));
  r["generators"] = gens;
  r["reg_recursion"] = reg_recursive(tree, t);
  json closed = json::object();
  if (cls.perfect && h >= 1 && 2 * t >= h + 1 && t <= h + 1) closed["perfect_formula"] = reg_formula_perfect(tree, t);
  if (cls.broom && t >= 2 && t <= h + 1) closed["broom_formula"] = reg_broom(tree, t);
  if (h >= 1 && 2 * t >= h + 1 && t <= h + 1) closed["general_upper_bound"] = reg_upper_bound_general(tree, t);
  if (h >= t - 1) closed["alpha_bound"] = alpha_bound(tree, t);
  if (t >= 2 && t <= h + 1) closed["powers_linear"] = classify_path_power_linearity(tree, t);
  r["closed_forms"] = closed;
  try {
    r["reg_oracle"] = quotient_regularity(I, o.config.field, o.config.limits);
  } catch (const ResourceError& e) {
    r["reg_oracle"] = nullptr;
    r["oracle_skipped"] = e.what();
  }
  if (o.config.s > 1 && t <= h + 1) {
    json rows = json::array();
    for (int s = 2; s <= o.config.s; ++s) {
      json row = {{"s", s}};
      if (cls.broom && t >= 2) row["broom_power_formula"] = power_reg_broom(tree, t, s);
      if (cls.perfect && t == h + 1 && h >= 1) row["perfect_power_formula"] = power_reg_perfect_top(tree, s);
      try {
        row["reg_oracle"] = quotient_regularity(ideal_power(I, s, o.config.max_gens), o.config.field, o.config.limits);
      } catch (const ResourceError& e) {
        row["reg_oracle"] = nullptr;
        row["oracle_skipped"] = e.what();
      }
      rows.push_back(row);
    }
    r["powers"] = rows;
  }
  emit(o, o.format == "tsv" ? tsv_of(r) : r.dump(2) + "\n");
  return 0;
}

int verify(const Options& o) {
  if (!is_suite(o.suite)) {
    std::string all;
    for (const std::string& n : suite_names()) all += " " + n;
    std::cerr << "unknown suite '" << o.suite << "'; choose one of:" << all << "\n";
    return 2;
  }
  SuiteResult r = run_suite(o.suite, o.config);
  emit(o, o.format == "tsv" ? suite_tsv(r, o.config) : suite_json(r, o.config).dump(2) + "\n");
  std::cerr << o.suite << ": " << r.instances.size() << " instances, " << r.failures() << " failures, " << r.errors()
            << " errors\n";
  return r.exit_code();
}

int conjecture_scan(const Options& o) {
  if (!o.input.empty()) {
    ComplexInput in = load_complex_file(o.input);
    const int s_max = o.config.s > 0 ? o.config.s : 3;
    ConjectureReport rep = conjecture_D_check(in.complex, s_max, o.config.field, o.config.limits, o.config.max_gens);
    json r = header(o, "conjecture-scan");
    json rows = json::array();
    for (const SlackRow& row : rep.rows)
      rows.push_back(json{{"s", row.s}, {"reg", row.reg_power}, {"bound", row.bound}, {"slack", row.slack()},
                          {"flag", row.slack() < 0 ? "FINDING" : "ok"}});
    r["dim"] = rep.dimension;
    r["rows"] = rows;
    r["component_min_slack"] = rep.component_min_slack;
    r["min_slack"] = rep.min_slack();
    r["finding"] = rep.finding();
    emit(o, o.format == "tsv" ? tsv_of(r) : r.dump(2) + "\n");
    return 0;
  }
  ConjectureScan scan = run_conjecture_scan(o.config, o.mode);
  emit(o, o.format == "tsv" ? conjecture_tsv(scan, o.config, o.mode)
                            : conjecture_json(scan, o.config, o.mode).dump(2) + "\n");
  std::cerr << "conjecture-scan: " << scan.instances.size() << " instances, " << scan.findings
            << " findings, min slack " << scan.min_slack << "\n";
  for (const InstanceResult& i : scan.instances)
    if (i.error) return 2;
  return 0;
}

int generate(const Options& o) {
  Rng rng(o.config.seed);
  const int count = o.config.count > 0 ? o.config.count : 10;
  json items = json::array();
  for (int i = 0; i < count; ++i) {
    if (o.kind == "tree") {
      items.push_back(tree_to_json(random_rooted_tree(rng, rng.uniform(2, o.config.max_facets > 0 ? o.config.max_facets : 10))));
    } else {
      ForestParams p;
      if (o.config.max_facets > 0) p.max_facets = o.config.max_facets;
      p.connected = o.kind != "forest";
      p.intersection_property = o.kind == "ip";
      items.push_back(complex_to_json(random_simplicial_forest(rng, p)));
    }
  }
  json r = header(o, "generate");
  r["kind"] = o.kind;
  r["items"] = items;
  emit(o, r.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"facetreg: regularity of facet ideals, path ideals and their powers"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--t", o.config.t, "path length t");
    sub->add_option("--s", o.config.s, "largest power s");
    sub->add_option("--char", o.characteristic, "field characteristic (0 or a prime)");
    sub->add_option("--seed", o.config.seed, "random seed");
    sub->add_option("--jobs", o.config.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-facets", o.config.max_facets, "largest facet count in generated complexes");
    sub->add_option("--max-gens", o.config.max_gens, "cap on generators of a power");
    sub->add_option("--max-lattice", o.max_lattice, "cap on lcm-lattice size");
    sub->add_option("--count", o.config.count, "number of random instances");
    sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_flag("--timings", o.config.timings, "include wall-clock times (reports stop being reproducible)");
  };

  auto* ac = app.add_subcommand("analyze-complex", "analyze a simplicial complex file");
  ac->add_option("input", o.input, "complex JSON file")->required();
  common(ac);
  auto* at = app.add_subcommand("analyze-tree", "analyze a rooted tree file for a path length t");
  at->add_option("input", o.input, "tree JSON file")->required();
  common(at);
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("suite", o.suite, "suite name")->required();
  common(vf);
  auto* cs = app.add_subcommand("conjecture-scan", "slack tables for reg(I^s) <= (d+1)(s-1) + reg(I)");
  cs->add_option("--mode", o.mode, "mixed or ip")->check(CLI::IsMember({"mixed", "ip"}));
  cs->add_option("--input", o.input, "scan a single complex file instead");
  common(cs);
  auto* gen = app.add_subcommand("generate", "write a seeded random corpus");
  gen->add_option("--kind", o.kind, "complex, forest, ip or tree")->check(CLI::IsMember({"complex", "forest", "ip", "tree"}));
  common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    o.config.field = o.characteristic == 0 ? FieldSpec::rational() : FieldSpec::prime(o.characteristic);
    o.config.limits.max_lattice = o.max_lattice;
    if (*ac) return analyze_complex(o);
    if (*at) return analyze_tree(o);
    if (*vf) return verify(o);
    if (*cs) return conjecture_scan(o);
    return generate(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
