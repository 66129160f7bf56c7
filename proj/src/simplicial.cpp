#include "facetreg/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "facetreg/error.hpp"

namespace facetreg {

SimplicialComplex::SimplicialComplex(int n, std::vector<Facet> facets) : n_(n), facets_(std::move(facets)) {
  if (n < 0) throw StructuralError("negative vertex count");
  for (Facet& f : facets_) {
    if (f.empty()) throw StructuralError("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw StructuralError("repeated vertex in facet " + to_string(f));
    if (f.front() < 0 || f.back() >= n)
      throw StructuralError("vertex out of range in facet " + to_string(f));
  }
  for (std::size_t i = 0; i < facets_.size(); ++i)
    for (std::size_t j = 0; j < facets_.size(); ++j)
      if (i != j && is_subset(facets_[i], facets_[j]))
        throw StructuralError("facet " + to_string(facets_[i]) + " is contained in " + to_string(facets_[j]));
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) throw PreconditionError("dimension of the empty complex");
  std::size_t best = 0;
  for (const Facet& f : facets_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) throw PreconditionError("purity of the empty complex");
  for (const Facet& f : facets_)
    if (f.size() != facets_.front().size()) return false;
  return true;
}

std::vector<int> SimplicialComplex::covered_vertices() const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (const Facet& f : facets_)
    for (int v : f) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

SimplicialComplex SimplicialComplex::subcomplex(const std::vector<int>& facet_ids) const {
  std::vector<Facet> fs;
  fs.reserve(facet_ids.size());
  for (int id : facet_ids) fs.push_back(facet(id));
  return SimplicialComplex(n_, std::move(fs));
}

int SimplicialComplex::index_of(const Facet& f) const {
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (facets_[i] == f) return static_cast<int>(i);
  return -1;
}

Facet intersect(const Facet& a, const Facet& b) {
  Facet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int intersection_size(const Facet& a, const Facet& b) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool is_subset(const Facet& a, const Facet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::string to_string(const Facet& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i] + 1;
  os << '}';
  return os.str();
}

Monomial facet_monomial(int n, const Facet& f) { return Monomial::from_support(n, f); }

MonomialIdeal facet_ideal(const SimplicialComplex& c) {
  std::vector<Monomial> gens;
  for (const Facet& f : c.facets()) gens.push_back(facet_monomial(c.vertex_count(), f));
  return MonomialIdeal(std::max(c.vertex_count(), 1), std::move(gens));
}

namespace {

bool good_leaf_among(const SimplicialComplex& c, const std::vector<int>& ids, int f) {
  std::vector<Facet> cuts;
  for (int g : ids)
    if (g != f) cuts.push_back(intersect(c.facet(f), c.facet(g)));
  std::sort(cuts.begin(), cuts.end(), [](const Facet& a, const Facet& b) { return a.size() < b.size(); });
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (!is_subset(cuts[i - 1], cuts[i])) return false;
  return true;
}

std::vector<int> all_ids(const SimplicialComplex& c) {
  std::vector<int> ids(static_cast<std::size_t>(c.facet_count()));
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

void check_facet(const SimplicialComplex& c, int f) {
  if (f < 0 || f >= c.facet_count()) throw StructuralError("facet index out of range");
}

std::vector<std::vector<int>> adjacency(const SimplicialComplex& c) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(c.facet_count()));
  for (int i = 0; i < c.facet_count(); ++i)
    for (int j = 0; j < c.facet_count(); ++j)
      if (i != j && codim_one_adjacent(c.facet(i), c.facet(j))) adj[static_cast<std::size_t>(i)].push_back(j);
  return adj;
}

void require_chain_hypotheses(const SimplicialComplex& c) {
  if (c.empty()) throw PreconditionError("empty complex");
  if (!c.is_pure()) throw PreconditionError("distance needs a pure complex");
  if (!is_forest(c)) throw PreconditionError("distance needs a forest");
  if (!is_connected_codim_one(c)) throw PreconditionError("distance needs codimension one connectivity");
}

}  // namespace

bool is_good_leaf(const SimplicialComplex& c, int facet) {
  check_facet(c, facet);
  return good_leaf_among(c, all_ids(c), facet);
}

std::optional<std::vector<int>> good_leaf_order(const SimplicialComplex& c) {
  std::vector<int> remaining = all_ids(c);
  std::vector<int> reversed;
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](int f) { return good_leaf_among(c, remaining, f); });
    if (it == remaining.end()) return std::nullopt;
    reversed.push_back(*it);
    remaining.erase(it);
  }
  return std::vector<int>(reversed.rbegin(), reversed.rend());
}

bool is_forest(const SimplicialComplex& c) { return good_leaf_order(c).has_value(); }

bool is_good_leaf_order(const SimplicialComplex& c, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != all_ids(c)) return false;
  std::vector<int> prefix;
  for (int f : order) {
    prefix.push_back(f);
    if (!good_leaf_among(c, prefix, f)) return false;
  }
  return true;
}

bool has_good_leaf_order_exhaustive(const SimplicialComplex& c) {
  if (c.facet_count() > 9) throw ResourceError("exhaustive good leaf search limited to 9 facets");
  std::vector<int> perm = all_ids(c);
  do {
    if (is_good_leaf_order(c, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_connected(const SimplicialComplex& c) {
  const int r = c.facet_count();
  if (r <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(r), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < r; ++v)
      if (!seen[static_cast<std::size_t>(v)] && intersection_size(c.facet(u), c.facet(v)) > 0) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

bool codim_one_adjacent(const Facet& g, const Facet& h) {
  return intersection_size(g, h) + 1 == static_cast<int>(h.size());
}

bool is_connected_codim_one(const SimplicialComplex& c) {
  if (c.empty()) throw PreconditionError("empty complex");
  if (!c.is_pure()) throw PreconditionError("codimension one connectivity is tested on pure complexes only");
  auto adj = adjacency(c);
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

std::vector<std::vector<int>> irredundant_proper_chains(const SimplicialComplex& c, int g, int h,
                                                        std::size_t limit) {
  check_facet(c, g);
  check_facet(c, h);
  if (g == h) return {{g}};
  auto adj = adjacency(c);
  const int r = c.facet_count();
  std::vector<std::vector<char>> is_adj(static_cast<std::size_t>(r), std::vector<char>(static_cast<std::size_t>(r), 0));
  for (int u = 0; u < r; ++u)
    for (int v : adj[static_cast<std::size_t>(u)]) is_adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;

  std::vector<std::vector<int>> found;
  std::vector<int> path{g};
  std::vector<char> on_path(static_cast<std::size_t>(r), 0);
  on_path[static_cast<std::size_t>(g)] = 1;
  std::size_t steps = 0;
  // Irredundant means no chord: only consecutive members are adjacent.
  auto dfs = [&](auto&& self) -> void {
    if (found.size() >= limit) return;
    if (++steps > 5'000'000) throw ResourceError("chain enumeration exceeded its step budget");
    int last = path.back();
    for (int u : adj[static_cast<std::size_t>(last)]) {
      if (on_path[static_cast<std::size_t>(u)]) continue;
      bool chord = false;
      for (std::size_t k = 0; k + 1 < path.size() && !chord; ++k)
        chord = is_adj[static_cast<std::size_t>(path[k])][static_cast<std::size_t>(u)] != 0;
      if (chord) continue;
      path.push_back(u);
      if (u == h) {
        found.push_back(path);
      } else {
        on_path[static_cast<std::size_t>(u)] = 1;
        self(self);
        on_path[static_cast<std::size_t>(u)] = 0;
      }
      path.pop_back();
      if (found.size() >= limit) return;
    }
  };
  dfs(dfs);
  return found;
}

std::vector<int> irredundant_proper_chain(const SimplicialComplex& c, int g, int h) {
  require_chain_hypotheses(c);
  auto chains = irredundant_proper_chains(c, g, h, 2);
  if (chains.empty()) throw InvariantViolation("no proper chain between connected facets");
  if (chains.size() > 1)
    throw InvariantViolation("two irredundant proper chains between " + to_string(c.facet(g)) + " and " +
                             to_string(c.facet(h)));
  return chains.front();
}

int distance(const SimplicialComplex& c, int g, int h) {
  return static_cast<int>(irredundant_proper_chain(c, g, h).size()) - 1;
}

const char* to_string(IntersectionReason r) {
  switch (r) {
    case IntersectionReason::Holds: return "HOLDS";
    case IntersectionReason::NotPure: return "NOT_PURE";
    case IntersectionReason::NotForest: return "NOT_FOREST";
    case IntersectionReason::NotCodim1: return "NOT_CODIM1";
    case IntersectionReason::PairFail: return "PAIR_FAIL";
  }
  return "?";
}

IntersectionReport intersection_property(const SimplicialComplex& c) {
  if (c.empty()) throw PreconditionError("intersection property of the empty complex");
  IntersectionReport rep;
  if (!c.is_pure()) {
    rep.reason = IntersectionReason::NotPure;
    return rep;
  }
  if (!is_forest(c)) {
    rep.reason = IntersectionReason::NotForest;
    return rep;
  }
  if (!is_connected_codim_one(c)) {
    rep.reason = IntersectionReason::NotCodim1;
    return rep;
  }
  const int d = c.dimension();
  for (int g = 0; g < c.facet_count(); ++g)
    for (int h = g + 1; h < c.facet_count(); ++h) {
      int dim_cap = intersection_size(c.facet(g), c.facet(h)) - 1;
      if (dim_cap != d - distance(c, g, h)) {
        rep.reason = IntersectionReason::PairFail;
        rep.g = g;
        rep.h = h;
        return rep;
      }
    }
  rep.holds = true;
  return rep;
}

std::vector<int> adjacent_good_leaf_order(const SimplicialComplex& c) {
  if (!intersection_property(c).holds) throw PreconditionError("adjacent good leaf order needs the intersection property");
  std::vector<int> remaining = all_ids(c);
  auto first = std::find_if(remaining.begin(), remaining.end(),
                            [&](int f) { return good_leaf_among(c, remaining, f); });
  if (first == remaining.end()) throw InvariantViolation("forest without a good leaf");
  int current = *first;
  remaining.erase(first);
  std::vector<int> reversed{current};

  auto has_free_vertex = [&](int f) {
    for (int v : c.facet(f)) {
      bool shared = false;
      for (int g : remaining)
        if (g != f && std::binary_search(c.facet(g).begin(), c.facet(g).end(), v)) {
          shared = true;
          break;
        }
      if (!shared) return true;
    }
    return false;
  };

  while (!remaining.empty()) {
    int next = -1;
    for (int f : remaining)
      if (codim_one_adjacent(c.facet(current), c.facet(f)) && has_free_vertex(f)) {
        next = f;
        break;
      }
    if (next < 0) throw InvariantViolation("no adjacent facet with a free vertex after " + to_string(c.facet(current)));
    if (!good_leaf_among(c, remaining, next))
      throw InvariantViolation("chosen facet " + to_string(c.facet(next)) + " is not a good leaf of the remainder");
    reversed.push_back(next);
    remaining.erase(std::find(remaining.begin(), remaining.end(), next));
    current = next;
  }
  std::vector<int> order(reversed.rbegin(), reversed.rend());
  if (!is_good_leaf_order(c, order) || !consecutive_distance_one(c, order))
    throw InvariantViolation("constructed order fails its own verification");
  return order;
}

bool consecutive_distance_one(const SimplicialComplex& c, const std::vector<int>& order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!codim_one_adjacent(c.facet(order[i]), c.facet(order[i + 1]))) return false;
  return true;
}

OrderingCheck ordering_consequences_check(const SimplicialComplex& c, const std::vector<int>& order) {
  OrderingCheck out;
  const std::size_t r = order.size();
  auto F = [&](std::size_t i) -> const Facet& { return c.facet(order[i]); };
  auto pos = [](std::size_t i) { return std::to_string(i + 1); };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      // (a) a vertex of F_j missing from F_i never returns after position i
      if (out.a_holds)
        for (int x : F(j)) {
          if (std::binary_search(F(i).begin(), F(i).end(), x)) continue;
          for (std::size_t k = i; k < r; ++k)
            if (std::binary_search(F(k).begin(), F(k).end(), x)) {
              out.a_holds = false;
              if (out.witness.empty())
                out.witness = "(a) vertex " + std::to_string(x + 1) + " of F" + pos(j) + " reappears in F" + pos(k);
              break;
            }
          if (!out.a_holds) break;
        }
      // (b) some k in [j, i-1] with |F_k cap F_i| = |F_i| - 1 and F_j cap F_k not inside F_i
      if (out.b_holds) {
        bool found = false;
        for (std::size_t k = j; k < i && !found; ++k)
          found = codim_one_adjacent(F(k), F(i)) && !is_subset(intersect(F(j), F(k)), F(i));
        if (!found) {
          out.b_holds = false;
          if (out.witness.empty()) out.witness = "(b) no k for j=" + pos(j) + ", i=" + pos(i);
        }
      }
    }
  return out;
}

}  // namespace facetreg
