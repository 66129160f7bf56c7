#include "facetreg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "facetreg/error.hpp"
#include "facetreg/generators.hpp"
#include "facetreg/io.hpp"
#include "facetreg/powers.hpp"
#include "facetreg/rooted_tree.hpp"
#include "facetreg/simplicial.hpp"

namespace facetreg {

using nlohmann::json;

namespace {

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::string describe(const SimplicialComplex& c) {
  std::string out;
  for (const Facet& f : c.facets()) out += (out.empty() ? "" : " ") + to_string(f);
  return out;
}

std::string describe(const RootedTree& t, int len) { return canonical_code(t) + " t=" + std::to_string(len); }

InstanceResult verdict(int id, std::string descriptor, bool pass, std::string detail = {}) {
  InstanceResult r;
  r.id = id;
  r.descriptor = std::move(descriptor);
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

InstanceResult from_report(int id, std::string descriptor, const VerificationReport& rep) {
  InstanceResult r = verdict(id, std::move(descriptor), rep.passed());
  if (const ClaimOutcome* f = rep.first_failure()) r.detail = f->id + ": " + f->witness;
  json claims = json::array();
  for (const ClaimOutcome& c : rep.claims) claims.push_back(json{{"claim", c.id}, {"pass", c.pass}, {"witness", c.witness}});
  r.data["claims"] = claims;
  return r;
}

// 0 general, 1 pure, 2 intersection property
SimplicialComplex random_forest_mixed(Rng& rng, int max_facets, int max_dim, bool connected) {
  ForestParams p;
  p.max_facets = max_facets;
  p.max_dim = max_dim;
  p.connected = connected;
  int mode = rng.uniform(0, 2);
  p.pure = mode == 1;
  p.intersection_property = mode == 2;
  return random_simplicial_forest(rng, p);
}

int oracle_quotient_reg(const MonomialIdeal& I, const SuiteConfig& cfg) {
  return quotient_regularity(I, cfg.field, cfg.limits);
}

Monomial letters(const std::string& word) {
  std::vector<int> vars;
  for (char ch : word) vars.push_back(ch - 'a');
  return Monomial::from_support(6, vars);
}

// ---------------------------------------------------------------- suites

SuiteResult fixtures(const SuiteConfig&) {
  SuiteResult res;
  const FieldSpec q = FieldSpec::rational();
  const MonomialIdeal terai = terai_ideal();
  const MonomialIdeal sturm(6, sturmfels_generators());
  std::vector<std::function<InstanceResult(int)>> checks = {
      [&](int id) {
        return verdict(id, "Terai I linear resolution (char 0)", has_linear_resolution(terai, q));
      },
      [&](int id) {
        return verdict(id, "Terai I^2 not linear (char 0)", !has_linear_resolution(ideal_power(terai, 2), q));
      },
      [&](int id) {
        return verdict(id, "Sturmfels I linear quotients in the given order",
                       has_linear_quotients(sturmfels_generators()));
      },
      [&](int id) {
        return verdict(id, "Sturmfels I^2 not linear (char 0)", !has_linear_resolution(ideal_power(sturm, 2), q));
      },
  };
  res.instances = run_instances(static_cast<int>(checks.size()), 1, [&](int i) { return checks[static_cast<std::size_t>(i)](i); });
  return res;
}

SuiteResult theorem_a(const SuiteConfig& cfg) {
  const int count = pick(cfg.count, 200);
  const int s_max = pick(cfg.s, 2);
  Rng rng(cfg.seed);
  std::vector<SimplicialComplex> corpus;
  for (int i = 0; i < count; ++i) corpus.push_back(random_forest_mixed(rng, pick(cfg.max_facets, 6), 3, false));
  SuiteResult res;
  res.instances = run_instances(count, cfg.jobs, [&](int i) {
    const SimplicialComplex& c = corpus[static_cast<std::size_t>(i)];
    InstanceResult r = from_report(i, describe(c), verify_theorem_A(c, s_max, cfg.field, cfg.limits, cfg.max_gens));
    r.data["pure"] = c.is_pure();
    return r;
  });
  return res;
}

SuiteResult linear_quotients(const SuiteConfig& cfg) {
  const int s_max = pick(cfg.s, 3);
  std::vector<SimplicialComplex> corpus = intersection_property_trees(3, pick(cfg.max_facets, 6));
  SuiteResult res;
  res.instances = run_instances(static_cast<int>(corpus.size()), cfg.jobs, [&](int i) {
    const SimplicialComplex& c = corpus[static_cast<std::size_t>(i)];
    InstanceResult r = verdict(i, describe(c), true);
    json per_s = json::array();
    for (int s = 1; s <= s_max; ++s) {
      VerificationReport rep = verify_linear_quotients_power(c, s, cfg.max_gens);
      per_s.push_back(json{{"s", s}, {"pass", rep.passed()}, {"witness", rep.claims.back().witness}});
      if (!rep.passed() && r.pass) {
        r.pass = false;
        r.detail = "s=" + std::to_string(s) + " " + rep.first_failure()->id + ": " + rep.first_failure()->witness;
      }
    }
    r.data["powers"] = per_s;
    return r;
  });
  return res;
}

SuiteResult lemma_colon(const SuiteConfig& cfg) {
  const int count = pick(cfg.count, 100);
  const int s_max = pick(cfg.s, 2);
  Rng rng(cfg.seed);
  std::vector<SimplicialComplex> corpus;
  for (int i = 0; i < count; ++i) corpus.push_back(random_forest_mixed(rng, pick(cfg.max_facets, 5), 3, false));
  SuiteResult res;
  res.instances = run_instances(count, cfg.jobs, [&](int i) {
    const SimplicialComplex& c = corpus[static_cast<std::size_t>(i)];
    const std::vector<int> order = *good_leaf_order(c);
    InstanceResult r = verdict(i, describe(c), true);
    for (int s = 1; s <= s_max; ++s) {
      VerificationReport rep = verify_colon_identities(c, order, s, cfg.max_gens);
      r.data["s" + std::to_string(s)] = static_cast<int>(rep.claims.size());
      if (!rep.passed() && r.pass) {
        r.pass = false;
        r.detail = "s=" + std::to_string(s) + " identity " + rep.first_failure()->id + ": " + rep.first_failure()->witness;
      }
    }
    return r;
  });
  return res;
}

SuiteResult perfect_formula(const SuiteConfig& cfg) {
  struct Case {
    RootedTree tree;
    int t;
    std::optional<long long> closed;  // k-nary corollary value
  };
  std::vector<Case> cases;
  for (int h = 1; h <= 3; ++h)
    for (const RootedTree& p : perfect_trees(h, 3))
      for (int t = (h + 2) / 2; t <= h + 1; ++t) cases.push_back({p, t, std::nullopt});
  for (auto [k, h] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    long long kh = 1;
    for (int i = 0; i < h; ++i) kh *= k;
    cases.push_back({k_nary_tree(k, h), h + 1, (kh - 1) / (k - 1)});
    cases.push_back({k_nary_tree(k, h), h, (kh - k) / (k - 1)});
  }
  SuiteResult res;
  res.instances = run_instances(static_cast<int>(cases.size()), cfg.jobs, [&](int i) {
    const Case& cs = cases[static_cast<std::size_t>(i)];
    const int formula = reg_formula_perfect(cs.tree, cs.t);
    const int oracle = quotient_regularity_reduced(t_path_ideal(cs.tree, cs.t), cfg.field, cfg.limits);
    bool ok = formula == oracle;
    std::string label = describe(cs.tree, cs.t);
    if (cs.closed) {
      ok = ok && *cs.closed == formula;
      label = "k-nary " + label;
    }
    InstanceResult r = verdict(i, label, ok, "formula=" + std::to_string(formula) + " oracle=" + std::to_string(oracle));
    r.data = {{"formula", formula}, {"oracle", oracle}, {"oracle_kind", "twin-reduced"}};
    if (cs.closed) r.data["corollary"] = *cs.closed;
    return r;
  });
  return res;
}

SuiteResult broom_formula(const SuiteConfig& cfg) {
  std::vector<std::pair<RootedTree, int>> cases;
  for (int h = 1; h <= 5; ++h)
    for (const RootedTree& b : brooms(h, 3))
      for (int t = 2; t <= h + 1; ++t) cases.emplace_back(b, t);
  SuiteResult res;
  res.instances = run_instances(static_cast<int>(cases.size()), cfg.jobs, [&](int i) {
    const auto& [b, t] = cases[static_cast<std::size_t>(i)];
    const int formula = reg_broom(b, t);
    const int oracle = oracle_quotient_reg(t_path_ideal(b, t), cfg);
    BroomOrder order = broom_facet_order(b, t);
    std::vector<int> ids(static_cast<std::size_t>(order.complex.facet_count()));
    std::iota(ids.begin(), ids.end(), 0);
    const bool good_order = is_good_leaf_order(order.complex, ids);
    const bool ideal_ok = facet_ideal(order.complex) == t_path_ideal(b, t);
    TreeStats st = tree_stats(b);
    std::string bristles;
    for (int lv = 1; lv <= b.height(); ++lv)
      bristles += (lv > 1 ? "," : "") + std::to_string(st.leaves_per_level[static_cast<std::size_t>(lv)] - (lv == b.height() ? 1 : 0));
    InstanceResult r = verdict(i, "broom h=" + std::to_string(b.height()) + " bristles=(" + bristles + ") t=" + std::to_string(t),
                               formula == oracle && good_order && ideal_ok,
                               "formula=" + std::to_string(formula) + " oracle=" + std::to_string(oracle) +
                                   (good_order ? "" : " order not a good leaf order") +
                                   (ideal_ok ? "" : " facet ideal differs from the path ideal"));
    r.data = {{"formula", formula}, {"oracle", oracle}, {"good_leaf_order", good_order}};
    return r;
  });
  return res;
}

SuiteResult recursion_oracle(const SuiteConfig& cfg) {
  std::vector<std::pair<RootedTree, int>> cases;
  std::vector<int> lengths = cfg.t > 0 ? std::vector<int>{cfg.t} : std::vector<int>{2, 3, 4};
  for (int n = 1; n <= 10; ++n)
    for (const RootedTree& t : all_rooted_trees(n))
      for (int len : lengths) cases.emplace_back(t, len);
  Rng rng(cfg.seed);
  const int extra = pick(cfg.count, 40);
  for (int i = 0; i < extra; ++i) {
    RootedTree t = random_rooted_tree(rng, rng.uniform(11, 13));
    cases.emplace_back(t, lengths[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(lengths.size()) - 1))]);
  }
  SuiteResult res;
  res.instances = run_instances(static_cast<int>(cases.size()), cfg.jobs, [&](int i) {
    const auto& [t, len] = cases[static_cast<std::size_t>(i)];
    const int rec = reg_recursive(t, len);
    const int oracle = oracle_quotient_reg(t_path_ideal(t, len), cfg);
    InstanceResult r = verdict(i, describe(t, len), rec == oracle,
                               "recursion=" + std::to_string(rec) + " oracle=" + std::to_string(oracle));
    r.data = {{"recursion", rec}, {"oracle", oracle}, {"vertices", t.size()}};
    return r;
  });
  return res;
}

SuiteResult power_formulas(const SuiteConfig& cfg) {
  struct Case {
    RootedTree tree;
    int t, s;
    bool broom;
  };
  std::vector<Case> cases;
  const int s_top = pick(cfg.s, 0);
  for (int h = 1; h <= 3; ++h)
    for (const RootedTree& b : brooms(h, 2))
      for (int t = 2; t <= h + 1; ++t)
        for (int s = 2; s <= std::max(2, s_top); ++s) cases.push_back({b, t, s, true});
  for (int h = 1; h <= 2; ++h)
    for (const RootedTree& p : perfect_trees(h, 2))
      for (int s = 2; s <= std::max(3, s_top); ++s) cases.push_back({p, h + 1, s, false});
  SuiteResult res;
  res.instances = run_instances(static_cast<int>(cases.size()), cfg.jobs, [&](int i) {
    const Case& cs = cases[static_cast<std::size_t>(i)];
    const MonomialIdeal I = t_path_ideal(cs.tree, cs.t);
    const int reg1 = oracle_quotient_reg(I, cfg);
    const int regs = oracle_quotient_reg(ideal_power(I, cs.s, cfg.max_gens), cfg);
    const int predicted = cs.t * (cs.s - 1) + reg1;
    InstanceResult r;
    if (cs.broom) {
      const int closed = power_reg_broom(cs.tree, cs.t, cs.s);
      r = verdict(i, "broom " + describe(cs.tree, cs.t) + " s=" + std::to_string(cs.s), predicted == regs,
                  "t(s-1)+reg=" + std::to_string(predicted) + " oracle=" + std::to_string(regs) +
                      " closed form=" + std::to_string(closed));
      r.data = {{"predicted", predicted}, {"oracle", regs}, {"closed_form", closed}};
    } else {
      const int closed = power_reg_perfect_top(cs.tree, cs.s);
      r = verdict(i, "perfect " + describe(cs.tree, cs.t) + " s=" + std::to_string(cs.s),
                  predicted == regs && closed == regs,
                  "t(s-1)+reg=" + std::to_string(predicted) + " closed form=" + std::to_string(closed) +
                      " oracle=" + std::to_string(regs));
      r.data = {{"predicted", predicted}, {"oracle", regs}, {"closed_form", closed}};
    }
    return r;
  });
  return res;
}

SuiteResult bounds(const SuiteConfig& cfg) {
  struct Case {
    int kind;  // 0 tree bounds, 1 power bound on a forest, 2 power bound on a broom path complex
    RootedTree tree;
    SimplicialComplex complex;
    int t = 0;
  };
  std::vector<Case> cases;
  Rng rng(cfg.seed);
  const int count = pick(cfg.count, 100);
  while (static_cast<int>(cases.size()) < count) {
    RootedTree t = random_rooted_tree(rng, rng.uniform(3, 12));
    const int h = t.height();
    if (h < 1) continue;
    cases.push_back({0, t, {}, rng.uniform((h + 2) / 2, h + 1)});
  }
  for (int i = 0; i < 30; ++i) {
    ForestParams p;
    p.max_facets = 5;
    cases.push_back({1, {}, random_simplicial_forest(rng, p), 0});
  }
  for (int h = 1; h <= 3; ++h)
    for (const RootedTree& b : brooms(h, 1))
      for (int t = 2; t <= h + 1; ++t) cases.push_back({2, b, broom_facet_order(b, t).complex, t});

  SuiteResult res;
  res.instances = run_instances(static_cast<int>(cases.size()), cfg.jobs, [&](int i) {
    const Case& cs = cases[static_cast<std::size_t>(i)];
    if (cs.kind == 0) {
      const int oracle = oracle_quotient_reg(t_path_ideal(cs.tree, cs.t), cfg);
      const int c_bound = reg_upper_bound_general(cs.tree, cs.t);
      const int a_bound = alpha_bound(cs.tree, cs.t);
      InstanceResult r = verdict(i, describe(cs.tree, cs.t), c_bound >= oracle && a_bound >= oracle,
                                 "general bound=" + std::to_string(c_bound) + " alpha bound=" +
                                     std::to_string(a_bound) + " oracle=" + std::to_string(oracle));
      r.data = {{"general_bound", c_bound}, {"alpha_bound", a_bound}, {"oracle", oracle}};
      return r;
    }
    // the power bound at s = 1 against reg(R/I^2)
    std::vector<int> order(static_cast<std::size_t>(cs.complex.facet_count()));
    if (cs.kind == 2) {
      std::iota(order.begin(), order.end(), 0);
    } else {
      order = *good_leaf_order(cs.complex);
    }
    const int bound = power_reg_upper_bound(cs.complex, order, 1, cfg.field, cfg.limits, cfg.max_gens);
    const int oracle = oracle_quotient_reg(ideal_power(facet_ideal(cs.complex), 2, cfg.max_gens), cfg);
    std::string label = cs.kind == 2 ? "power bound, broom " + describe(cs.tree, cs.t) : "power bound, " + describe(cs.complex);
    InstanceResult r = verdict(i, label, bound >= oracle,
                               "bound=" + std::to_string(bound) + " oracle reg(R/I^2)=" + std::to_string(oracle));
    r.data = {{"bound", bound}, {"oracle", oracle}};
    if (cs.kind == 2) r.data["power_formula"] = cs.t + oracle_quotient_reg(t_path_ideal(cs.tree, cs.t), cfg);
    return r;
  });
  return res;
}

SuiteResult linearity_classification(const SuiteConfig& cfg) {
  const int count = pick(cfg.count, 60);
  Rng rng(cfg.seed);
  std::vector<std::pair<RootedTree, int>> cases;
  while (static_cast<int>(cases.size()) < count) {
    RootedTree t = random_rooted_tree(rng, rng.uniform(2, 9));
    if (t.height() < 1) continue;
    cases.emplace_back(t, rng.uniform(2, t.height() + 1));
  }
  SuiteResult res;
  res.instances = run_instances(count, cfg.jobs, [&](int i) {
    const auto& [t, len] = cases[static_cast<std::size_t>(i)];
    const bool predicted = classify_path_power_linearity(t, len);
    const MonomialIdeal I = t_path_ideal(t, len);
    const bool lin1 = has_linear_resolution(I, cfg.field, cfg.limits);
    const bool lin2 = has_linear_resolution(ideal_power(I, 2, cfg.max_gens), cfg.field, cfg.limits);
    InstanceResult r = verdict(i, describe(t, len), predicted == lin1 && predicted == lin2,
                               std::string("clean broom test=") + (predicted ? "1" : "0") + " I linear=" +
                                   (lin1 ? "1" : "0") + " I^2 linear=" + (lin2 ? "1" : "0"));
    r.data = {{"predicted", predicted}, {"linear", lin1}, {"linear_square", lin2}};
    return r;
  });
  return res;
}

SuiteResult oracle_consistency(const SuiteConfig& cfg) {
  const int count = pick(cfg.count, 80);
  Rng rng(cfg.seed);
  std::vector<SimplicialComplex> corpus;
  for (int i = 0; i < count; ++i) corpus.push_back(random_forest_mixed(rng, pick(cfg.max_facets, 6), 3, false));
  SuiteResult res;
  res.instances = run_instances(count, cfg.jobs, [&](int i) {
    const SimplicialComplex& c = corpus[static_cast<std::size_t>(i)];
    std::vector<MonomialIdeal> ideals{facet_ideal(c)};
    if (c.facet_count() <= 4) ideals.push_back(ideal_power(ideals[0], 2, cfg.max_gens));
    std::string problem;
    for (std::size_t k = 0; k < ideals.size() && problem.empty(); ++k) {
      const MonomialIdeal& I = ideals[k];
      const std::string tag = k == 0 ? "I: " : "I^2: ";
      BettiComputation q = graded_betti_detailed(I, FieldSpec::rational(), cfg.limits, true);
      std::map<int, std::int64_t> by_degree;
      for (const Monomial& g : I.generators()) ++by_degree[g.degree()];
      std::map<int, std::int64_t> row0;
      for (const auto& [key, v] : q.table.entries())
        if (key.first == 0) row0[key.second] = v;
      if (row0 != by_degree) problem = tag + "beta_0 row differs from the generator degrees";
      for (const StrandRecord& s : q.strands)
        if (problem.empty() && !s.euler_holds()) problem = tag + "Euler check fails at " + to_string(s.multidegree);
      if (problem.empty() && graded_betti(I, FieldSpec::prime(32003), cfg.limits) != q.table)
        problem = tag + "char 0 and char 32003 tables differ";
    }
    return verdict(i, describe(c), problem.empty(), problem);
  });
  return res;
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&);
const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"fixtures", fixtures},
      {"theoremA", theorem_a},
      {"linearQuotients", linear_quotients},
      {"lemmaColon", lemma_colon},
      {"perfectFormula", perfect_formula},
      {"broomFormula", broom_formula},
      {"recursionOracle", recursion_oracle},
      {"powerFormulas", power_formulas},
      {"bounds", bounds},
      {"linearityClassification", linearity_classification},
      {"oracleConsistency", oracle_consistency},
  };
  return r;
}

}  // namespace

MonomialIdeal terai_ideal() {
  std::vector<Monomial> g;
  for (const char* w : {"abd", "abf", "ace", "adc", "aef", "bde", "bcf", "bce", "cdf", "def"}) g.push_back(letters(w));
  return MonomialIdeal(6, g);
}

std::vector<Monomial> sturmfels_generators() {
  std::vector<Monomial> g;
  for (const char* w : {"def", "cef", "cdf", "cde", "bef", "bcd", "acf", "ade"}) g.push_back(letters(w));
  return g;
}

int SuiteResult::failures() const {
  return static_cast<int>(std::count_if(instances.begin(), instances.end(),
                                        [](const InstanceResult& r) { return !r.pass && !r.error; }));
}

int SuiteResult::errors() const {
  return static_cast<int>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.error; }));
}

int SuiteResult::exit_code() const {
  if (errors() > 0) return 2;
  return failures() > 0 ? 1 : 0;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

bool is_suite(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      auto start = std::chrono::steady_clock::now();
      SuiteResult r = fn(config);
      r.name = name;
      r.seconds = since(start);
      return r;
    }
  throw PreconditionError("unknown suite " + name);
}

std::vector<InstanceResult> run_instances(int count, int jobs, const std::function<InstanceResult(int)>& task) {
  std::vector<InstanceResult> out(static_cast<std::size_t>(std::max(count, 0)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      auto start = std::chrono::steady_clock::now();
      InstanceResult r;
      try {
        r = task(i);
      } catch (const ResourceError& e) {
        r = verdict(i, "", false, std::string("resource: ") + e.what());
        r.error = true;
      } catch (const ParseError& e) {
        r = verdict(i, "", false, std::string("input: ") + e.what());
        r.error = true;
      } catch (const std::exception& e) {
        r = verdict(i, "", false, std::string("exception: ") + e.what());
      }
      r.id = i;
      r.seconds = since(start);
      out[static_cast<std::size_t>(i)] = std::move(r);
    }
  };
  const int threads = std::max(1, std::min(jobs, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return out;
}

json config_json(const SuiteConfig& config) {
  return json{{"seed", config.seed},
              {"characteristic", config.field.characteristic},
              {"caps",
               {{"max_gens", config.max_gens},
                {"max_lattice", config.limits.max_lattice},
                {"max_strand_faces", config.limits.max_strand_faces},
                {"max_facets", config.max_facets}}},
              {"s", config.s},
              {"t", config.t},
              {"count", config.count}};
}

namespace {

json instance_json(const InstanceResult& r, bool timings) {
  json j = {{"id", r.id},           {"instance", r.descriptor}, {"pass", r.pass},
            {"error", r.error},     {"detail", r.detail},       {"data", r.data}};
  if (timings) j["seconds"] = r.seconds;
  return j;
}

std::string truncate(const std::string& s, std::size_t n = 100) { return s.size() <= n ? s : s.substr(0, n) + "..."; }

std::string tsv_header(const std::string& what, const SuiteConfig& config) {
  std::ostringstream out;
  out << "# facetreg " << FACETREG_VERSION << " " << what << " seed=" << config.seed
      << " char=" << config.field.characteristic << " max_gens=" << config.max_gens
      << " max_lattice=" << config.limits.max_lattice << "\n";
  return out.str();
}

}  // namespace

json suite_json(const SuiteResult& r, const SuiteConfig& config) {
  json inst = json::array();
  for (const InstanceResult& i : r.instances) inst.push_back(instance_json(i, config.timings));
  json out = {{"tool", "facetreg"},
              {"version", FACETREG_VERSION},
              {"suite", r.name},
              {"config", config_json(config)},
              {"summary",
               {{"instances", r.instances.size()}, {"failures", r.failures()}, {"errors", r.errors()}, {"pass", r.passed()}}},
              {"instances", inst}};
  if (config.timings) out["seconds"] = r.seconds;
  return out;
}

std::string suite_tsv(const SuiteResult& r, const SuiteConfig& config) {
  std::ostringstream out;
  out << tsv_header("verify " + r.name, config);
  out << "id\tpass\tinstance\tdetail\n";
  for (const InstanceResult& i : r.instances)
    out << i.id << "\t" << (i.error ? "ERROR" : i.pass ? "PASS" : "FAIL") << "\t" << truncate(i.descriptor) << "\t"
        << truncate(i.detail) << "\n";
  out << "# instances=" << r.instances.size() << " failures=" << r.failures() << " errors=" << r.errors() << "\n";
  return out.str();
}

ConjectureScan run_conjecture_scan(const SuiteConfig& cfg, const std::string& mode) {
  if (mode != "mixed" && mode != "ip") throw PreconditionError("scan mode must be mixed or ip");
  auto start = std::chrono::steady_clock::now();
  const int count = pick(cfg.count, 300);
  const int s_max = pick(cfg.s, 3);
  Rng rng(cfg.seed);
  std::vector<SimplicialComplex> corpus;
  for (int i = 0; i < count; ++i) {
    if (mode == "ip") {
      ForestParams p;
      p.max_facets = pick(cfg.max_facets, 6);
      p.intersection_property = true;
      p.connected = true;
      corpus.push_back(random_simplicial_forest(rng, p));
    } else {
      corpus.push_back(random_forest_mixed(rng, pick(cfg.max_facets, 6), 3, true));
    }
  }
  ConjectureScan scan;
  scan.instances = run_instances(count, cfg.jobs, [&](int i) {
    const SimplicialComplex& c = corpus[static_cast<std::size_t>(i)];
    ConjectureReport rep = conjecture_D_check(c, s_max, cfg.field, cfg.limits, cfg.max_gens);
    InstanceResult r = verdict(i, describe(c), true);
    json rows = json::array();
    std::string slacks;
    for (const SlackRow& row : rep.rows) {
      rows.push_back(json{{"s", row.s}, {"reg", row.reg_power}, {"bound", row.bound}, {"slack", row.slack()}});
      slacks += (slacks.empty() ? "" : ",") + std::to_string(row.slack());
    }
    r.data = {{"dim", rep.dimension}, {"rows", rows}, {"finding", rep.finding()}, {"min_slack", rep.min_slack()}};
    r.detail = (rep.finding() ? "FINDING slack=" : "slack=") + slacks;
    return r;
  });
  scan.min_slack = std::numeric_limits<int>::max();
  for (const InstanceResult& r : scan.instances) {
    if (r.error) continue;
    if (r.data.value("finding", false)) ++scan.findings;
    scan.min_slack = std::min(scan.min_slack, r.data.value("min_slack", 0));
  }
  scan.seconds = since(start);
  return scan;
}

json conjecture_json(const ConjectureScan& scan, const SuiteConfig& config, const std::string& mode) {
  json inst = json::array();
  for (const InstanceResult& i : scan.instances) inst.push_back(instance_json(i, config.timings));
  int errors = static_cast<int>(std::count_if(scan.instances.begin(), scan.instances.end(),
                                              [](const InstanceResult& r) { return r.error; }));
  json out = {{"tool", "facetreg"},
              {"version", FACETREG_VERSION},
              {"command", "conjecture-scan"},
              {"mode", mode},
              {"config", config_json(config)},
              {"summary",
               {{"instances", scan.instances.size()},
                {"findings", scan.findings},
                {"min_slack", scan.min_slack},
                {"errors", errors}}},
              {"instances", inst}};
  if (config.timings) out["seconds"] = scan.seconds;
  return out;
}

std::string conjecture_tsv(const ConjectureScan& scan, const SuiteConfig& config, const std::string& mode) {
  std::ostringstream out;
  out << tsv_header("conjecture-scan mode=" + mode, config);
  out << "id\tdim\ts\treg\tbound\tslack\tflag\tinstance\n";
  for (const InstanceResult& i : scan.instances) {
    if (i.error) {
      out << i.id << "\t-\t-\t-\t-\t-\tERROR\t" << truncate(i.detail) << "\n";
      continue;
    }
    for (const json& row : i.data["rows"])
      out << i.id << "\t" << i.data["dim"].get<int>() << "\t" << row["s"].get<int>() << "\t" << row["reg"].get<int>()
          << "\t" << row["bound"].get<int>() << "\t" << row["slack"].get<int>() << "\t"
          << (row["slack"].get<int>() < 0 ? "FINDING" : "ok") << "\t" << truncate(i.descriptor) << "\n";
  }
  out << "# instances=" << scan.instances.size() << " findings=" << scan.findings << " min_slack=" << scan.min_slack
      << "\n";
  return out.str();
}

}  // namespace facetreg
