#include "facetreg/powers.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "facetreg/error.hpp"

namespace facetreg {

namespace {

int ambient(const SimplicialComplex& c) { return std::max(c.vertex_count(), 1); }

std::vector<Monomial> ordered_monomials(const SimplicialComplex& c, const std::vector<int>& order) {
  std::vector<Monomial> m;
  for (int id : order) m.push_back(facet_monomial(ambient(c), c.facet(id)));
  return m;
}

void check_order(const SimplicialComplex& c, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[static_cast<std::size_t>(i)] != i || static_cast<int>(sorted.size()) != c.facet_count())
      throw PreconditionError("facet order is not a permutation of the facets");
}

std::string vec_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// All compositions of s into r parts, lex descending.
template <class F>
void for_each_composition(int r, int s, F&& f) {
  std::vector<int> a(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == r - 1) {
      a[static_cast<std::size_t>(pos)] = left;
      f(a);
      return;
    }
    for (int v = left; v >= 0; --v) {
      a[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (r > 0) rec(rec, 0, s);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > (std::size_t{1} << 40)) return out;
  }
  return out;
}

Monomial monomial_power_product(const std::vector<Monomial>& m, const std::vector<int>& a) {
  Monomial out = Monomial::one(m.front().ambient_size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (a[i]) out = out * power(m[i], a[i]);
  return out;
}

std::string gens_string(const MonomialIdeal& I, std::size_t limit = 12) {
  std::string out;
  for (std::size_t i = 0; i < I.size() && i < limit; ++i) out += (i ? "," : "") + to_string(I.generators()[i]);
  if (I.size() > limit) out += ",...";
  return "(" + out + ")";
}

std::vector<std::vector<int>> components(const SimplicialComplex& c) {
  const int r = c.facet_count();
  std::vector<int> comp(static_cast<std::size_t>(r), -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < r; ++i) {
    if (comp[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> stack{i}, members;
    comp[static_cast<std::size_t>(i)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      members.push_back(g);
      for (int h = 0; h < r; ++h)
        if (comp[static_cast<std::size_t>(h)] < 0 && intersection_size(c.facet(g), c.facet(h)) > 0) {
          comp[static_cast<std::size_t>(h)] = comp[static_cast<std::size_t>(i)];
          stack.push_back(h);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::vector<PowerGenerator> power_generators(const SimplicialComplex& c, const std::vector<int>& order, int s,
                                             std::size_t cap) {
  if (s < 1) throw PreconditionError("power must be positive");
  if (c.empty()) throw PreconditionError("complex has no facets");
  check_order(c, order);
  const std::size_t r = order.size();
  if (binomial(r + static_cast<std::size_t>(s) - 1, r - 1) > cap)
    throw ResourceError("power generator count exceeds cap " + std::to_string(cap));
  const std::vector<Monomial> m = ordered_monomials(c, order);

  std::vector<PowerGenerator> all;
  std::map<std::vector<int>, std::size_t> by_value;  // exponent vector of the value -> index in all
  for_each_composition(static_cast<int>(r), s, [&](const std::vector<int>& a) {
    Monomial v = monomial_power_product(m, a);
    auto [it, fresh] = by_value.emplace(v.exponents(), all.size());
    if (fresh) {
      all.push_back(PowerGenerator{v, a, 1});
    } else {
      PowerGenerator& g = all[it->second];
      ++g.factorizations;
      if (a > g.exponents) g.exponents = a;
    }
  });
  // drop values divisible by a different value
  std::vector<PowerGenerator> out;
  for (const PowerGenerator& g : all) {
    bool minimal = true;
    for (const PowerGenerator& h : all)
      if (h.value != g.value && h.value.degree() < g.value.degree() && h.value.divides(g.value)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(g);
  }
  std::sort(out.begin(), out.end(),
            [](const PowerGenerator& a, const PowerGenerator& b) { return a.exponents > b.exponents; });
  return out;
}

std::vector<PowerGenerator> power_generators_canonical(const SimplicialComplex& c, const std::vector<int>& order,
                                                       int s, std::size_t cap) {
  std::vector<PowerGenerator> gens = power_generators(c, order, s, cap);
  for (const PowerGenerator& g : gens)
    if (g.factorizations != 1)
      throw InvariantViolation("generator " + to_string(g.value) + " of the power " + std::to_string(s) + " has " +
                               std::to_string(g.factorizations) + " exponent vectors, e.g. " +
                               vec_string(g.exponents));
  return gens;
}

void VerificationReport::add(std::string id, bool pass, std::string witness) {
  claims.push_back(ClaimOutcome{std::move(id), pass, std::move(witness)});
}

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimOutcome& o) { return o.pass; });
}

const ClaimOutcome* VerificationReport::first_failure() const {
  for (const ClaimOutcome& o : claims)
    if (!o.pass) return &o;
  return nullptr;
}

VerificationReport verify_linear_quotients_power(const SimplicialComplex& c, int s, std::size_t cap) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.instance = "s=" + std::to_string(s);
  IntersectionReport ip = intersection_property(c);
  if (!ip.holds) throw PreconditionError(std::string("intersection property fails: ") + to_string(ip.reason));
  const std::vector<int> order = adjacent_good_leaf_order(c);
  const std::vector<PowerGenerator> gens = power_generators_canonical(c, order, s, cap);
  const int n = ambient(c);

  // prefix colons
  std::vector<Monomial> values;
  for (const PowerGenerator& g : gens) values.push_back(g.value);
  bool prefix_ok = true;
  std::string prefix_witness;
  for (std::size_t k = 1; k < values.size() && prefix_ok; ++k) {
    MonomialIdeal colon = colon_by_monomial(
        MonomialIdeal(n, std::vector<Monomial>(values.begin(), values.begin() + static_cast<long>(k))), values[k]);
    if (!colon.is_generated_by_variables()) {
      prefix_ok = false;
      prefix_witness = "colon before " + to_string(values[k]) + " is " + gens_string(colon);
    }
  }
  rep.add("prefix-colons", prefix_ok, prefix_witness);

  // witness recipe
  std::map<std::vector<int>, std::size_t> position;
  for (std::size_t i = 0; i < gens.size(); ++i) position[gens[i].exponents] = i;
  const std::size_t r = order.size();
  auto F = [&](std::size_t i) -> const Facet& { return c.facet(order[i]); };
  bool recipe_ok = true;
  std::string recipe_witness;
  std::size_t pairs = 0;
  for (std::size_t mi = 0; mi < gens.size() && recipe_ok; ++mi)
    for (std::size_t ni = mi + 1; ni < gens.size() && recipe_ok; ++ni) {
      ++pairs;
      const std::vector<int>& b = gens[mi].exponents;
      const std::vector<int>& a = gens[ni].exponents;
      std::size_t p = r, q = r;
      for (std::size_t t = 0; t < r; ++t) {
        if (p == r && b[t] > a[t]) p = t;
        if (q == r && b[t] < a[t]) q = t;
      }
      auto fail = [&](const std::string& why) {
        recipe_ok = false;
        recipe_witness = "M=" + vec_string(b) + " N=" + vec_string(a) + ": " + why;
      };
      if (!(p < q && q < r)) {
        fail("p < q does not hold");
        break;
      }
      std::optional<std::size_t> k;
      int x = -1;
      for (std::size_t cand = p; cand < q && !k; ++cand) {
        if (intersection_size(F(cand), F(q)) != static_cast<int>(F(q).size()) - 1) continue;
        for (int v : intersect(F(p), F(cand)))
          if (!std::binary_search(F(q).begin(), F(q).end(), v)) {
            k = cand;
            x = v;
            break;
          }
      }
      if (!k) {
        fail("no k in [p, q) with the required facet intersections");
        break;
      }
      std::vector<int> cvec = a;
      ++cvec[*k];
      --cvec[q];
      auto it = position.find(cvec);
      if (it == position.end() || it->second >= ni) {
        fail("P=" + vec_string(cvec) + " is not an earlier generator");
        break;
      }
      const Monomial& P = gens[it->second].value;
      const Monomial& M = gens[mi].value;
      const Monomial& N = gens[ni].value;
      const Monomial var = Monomial::variable(n, x);
      if (quotient(P, gcd(P, N)) != var) {
        fail("(P):N is " + to_string(quotient(P, gcd(P, N))) + ", not x" + std::to_string(x + 1));
        break;
      }
      if (!var.divides(quotient(M, gcd(M, N)))) {
        fail("(M):N = (" + to_string(quotient(M, gcd(M, N))) + ") not inside (x" + std::to_string(x + 1) + ")");
        break;
      }
    }
  rep.add("witness-recipe", recipe_ok, recipe_ok ? std::to_string(pairs) + " pairs" : recipe_witness);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

bool TheoremAItems::all_lq() const {
  return std::all_of(linear_quotients.begin(), linear_quotients.end(), [](bool b) { return b; });
}
bool TheoremAItems::some_lq() const {
  return std::any_of(linear_quotients.begin(), linear_quotients.end(), [](bool b) { return b; });
}
bool TheoremAItems::some_linear_power() const {
  return std::any_of(linear_power.begin(), linear_power.end(), [](bool b) { return b; });
}
bool TheoremAItems::some_linear_syzygies() const {
  return std::any_of(linear_syzygies.begin(), linear_syzygies.end(), [](bool b) { return b; });
}

TheoremAItems theorem_A_items(const SimplicialComplex& c, int s_max, FieldSpec field, const OracleLimits& limits,
                              std::size_t cap) {
  if (s_max < 1) throw PreconditionError("s_max must be positive");
  if (!is_forest(c)) throw PreconditionError("complex is not a forest");
  TheoremAItems items;
  items.pure = c.is_pure();
  items.intersection = intersection_property(c).holds;
  const MonomialIdeal I = facet_ideal(c);
  items.linear = has_linear_resolution(I, field, limits);
  std::vector<int> order = items.intersection ? adjacent_good_leaf_order(c) : *good_leaf_order(c);
  for (int s = 1; s <= s_max; ++s) {
    bool lq = false;
    if (items.pure) {
      std::vector<Monomial> values;
      for (const PowerGenerator& g : power_generators(c, order, s, cap)) values.push_back(g.value);
      lq = has_linear_quotients(values);
    }
    items.linear_quotients.push_back(lq);
    MonomialIdeal P = ideal_power(I, s, cap);
    auto d = is_equigenerated(P);
    if (d) {
      BettiTable table = graded_betti(P, field, limits);
      items.linear_power.push_back(table_is_linear(table, *d));
      items.linear_syzygies.push_back(table_has_linear_first_syzygies(table, *d));
    } else {
      items.linear_power.push_back(false);
      items.linear_syzygies.push_back(false);
    }
  }
  return items;
}

VerificationReport verify_theorem_A(const SimplicialComplex& c, int s_max, FieldSpec field,
                                    const OracleLimits& limits, std::size_t cap) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.characteristic = field.characteristic;
  rep.instance = "facets=" + std::to_string(c.facet_count()) + " s_max=" + std::to_string(s_max);
  TheoremAItems it = theorem_A_items(c, s_max, field, limits, cap);
  const bool truth = it.intersection;
  auto b = [](bool v) { return v ? std::string("1") : std::string("0"); };
  std::string items = "ip=" + b(it.intersection) + " linear=" + b(it.linear);
  for (int s = 1; s <= s_max; ++s) {
    std::size_t k = static_cast<std::size_t>(s - 1);
    items += " s=" + std::to_string(s) + ":lq=" + b(it.linear_quotients[k]) + ",lin=" + b(it.linear_power[k]) +
             ",syz=" + b(it.linear_syzygies[k]);
  }
  rep.add("ip<=>linear", it.linear == truth, items);
  for (int s = 1; s <= s_max; ++s) {
    std::size_t k = static_cast<std::size_t>(s - 1);
    const std::string tag = " at s=" + std::to_string(s);
    rep.add("ip<=>linear power" + tag, it.linear_power[k] == truth, items);
    rep.add("ip<=>linear first syzygies" + tag, it.linear_syzygies[k] == truth, items);
    if (it.pure) rep.add("ip<=>linear quotients" + tag, it.linear_quotients[k] == truth, items);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

MonomialIdeal order_prefix_ideal(const SimplicialComplex& c, const std::vector<int>& order, int i) {
  if (i < 0 || i > static_cast<int>(order.size())) throw PreconditionError("prefix index out of range");
  std::vector<Monomial> m = ordered_monomials(c, order);
  return MonomialIdeal(ambient(c), std::vector<Monomial>(m.begin(), m.begin() + i));
}

MonomialIdeal order_suffix_ideal(const SimplicialComplex& c, const std::vector<int>& order, int i) {
  if (i < 0 || i > static_cast<int>(order.size())) throw PreconditionError("suffix index out of range");
  std::vector<Monomial> m = ordered_monomials(c, order);
  return MonomialIdeal(ambient(c), std::vector<Monomial>(m.begin() + i, m.end()));
}

VerificationReport verify_colon_identities(const SimplicialComplex& c, const std::vector<int>& order, int s,
                                           std::size_t cap) {
  auto start = std::chrono::steady_clock::now();
  if (s < 1) throw PreconditionError("power must be positive");
  if (!is_good_leaf_order(c, order)) throw PreconditionError("not a good leaf order");
  VerificationReport rep;
  rep.instance = "facets=" + std::to_string(c.facet_count()) + " s=" + std::to_string(s);
  const int r = c.facet_count();
  const std::vector<Monomial> m = ordered_monomials(c, order);
  const MonomialIdeal I = facet_ideal(c);
  auto compare = [&](const std::string& id, const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    bool ok = lhs == rhs;
    rep.add(id, ok, ok ? std::string() : "lhs " + gens_string(lhs) + " rhs " + gens_string(rhs));
  };
  auto pw = [&](const MonomialIdeal& J, int e) { return J.is_zero() ? J : ideal_power(J, e, cap); };

  compare("I^{s+1}:m_r=I^s", colon_by_monomial(ideal_power(I, s + 1, cap), m[static_cast<std::size_t>(r - 1)]),
          ideal_power(I, s, cap));
  for (int i = 1; i <= r - 1; ++i) {
    const Monomial& mi = m[static_cast<std::size_t>(i - 1)];
    const MonomialIdeal Di = order_prefix_ideal(c, order, i);
    const MonomialIdeal Ji = order_suffix_ideal(c, order, i);
    const MonomialIdeal lhs_base = ideal_sum(pw(Di, s + 1), Ji);
    compare("prefix power colon i=" + std::to_string(i), colon_by_monomial(lhs_base, mi),
            ideal_sum(pw(Di, s), colon_by_monomial(Ji, mi)));
    const MonomialIdeal with_mi = ideal_sum(lhs_base, MonomialIdeal::principal(mi));
    if (i == 1) {
      compare("D_1^{s+1}+J_1+(m_1)=I", with_mi, I);
    } else {
      compare("prefix step i=" + std::to_string(i), with_mi,
              ideal_sum(pw(order_prefix_ideal(c, order, i - 1), s + 1), order_suffix_ideal(c, order, i - 1)));
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

int power_reg_upper_bound(const SimplicialComplex& c, const std::vector<int>& order, int s, FieldSpec field,
                          const OracleLimits& limits, std::size_t cap) {
  if (s < 1) throw PreconditionError("power must be positive");
  if (!is_good_leaf_order(c, order)) throw PreconditionError("not a good leaf order");
  const int r = c.facet_count();
  const std::vector<Monomial> m = ordered_monomials(c, order);
  const MonomialIdeal I = facet_ideal(c);
  int bound = m[static_cast<std::size_t>(r - 1)].degree() + quotient_regularity(ideal_power(I, s, cap), field, limits);
  for (int i = 1; i <= r - 1; ++i) {
    const Monomial& mi = m[static_cast<std::size_t>(i - 1)];
    MonomialIdeal term = ideal_sum(ideal_power(order_prefix_ideal(c, order, i), s, cap),
                                   colon_by_monomial(order_suffix_ideal(c, order, i), mi));
    bound = std::max(bound, mi.degree() + quotient_regularity(term, field, limits));
  }
  return std::max(bound, quotient_regularity(I, field, limits));
}

bool ConjectureReport::finding() const { return min_slack() < 0; }

int ConjectureReport::min_slack() const {
  int best = std::numeric_limits<int>::max();
  for (const SlackRow& row : rows) best = std::min(best, row.slack());
  for (int v : component_min_slack) best = std::min(best, v);
  return best;
}

namespace {

std::vector<SlackRow> slack_rows(const SimplicialComplex& c, int s_max, FieldSpec field, const OracleLimits& limits,
                                 std::size_t cap) {
  const MonomialIdeal I = facet_ideal(c);
  const int d = c.dimension();
  const int reg1 = *regularity(I, field, limits);
  std::vector<SlackRow> rows;
  for (int s = 1; s <= s_max; ++s) {
    SlackRow row;
    row.s = s;
    row.reg_power = s == 1 ? reg1 : *regularity(ideal_power(I, s, cap), field, limits);
    row.bound = (d + 1) * (s - 1) + reg1;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

ConjectureReport conjecture_D_check(const SimplicialComplex& c, int s_max, FieldSpec field,
                                    const OracleLimits& limits, std::size_t cap) {
  if (s_max < 1) throw PreconditionError("s_max must be positive");
  if (!is_forest(c)) throw PreconditionError("complex is not a forest");
  ConjectureReport rep;
  rep.dimension = c.dimension();
  rep.rows = slack_rows(c, s_max, field, limits, cap);
  std::vector<std::vector<int>> comps = components(c);
  rep.connected = comps.size() == 1;
  if (!rep.connected)
    for (const std::vector<int>& ids : comps) {
      int best = std::numeric_limits<int>::max();
      for (const SlackRow& row : slack_rows(c.subcomplex(ids), s_max, field, limits, cap))
        best = std::min(best, row.slack());
      rep.component_min_slack.push_back(best);
    }
  return rep;
}

}  // namespace facetreg
