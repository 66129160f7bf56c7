#include "facetreg/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "facetreg/error.hpp"

namespace facetreg {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw PreconditionError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

bool Rng::chance(int numerator, int denominator) { return uniform(0, denominator - 1) < numerator; }

std::vector<RootedTree> all_rooted_trees(int n) {
  if (n < 1) return {};
  std::set<std::string> level{"()"};
  for (int size = 1; size < n; ++size) {
    std::set<std::string> next;
    for (const std::string& code : level) {
      RootedTree t = tree_from_code(code);
      for (int v = 0; v < t.size(); ++v) {
        std::vector<int> parent = t.parents();
        parent.push_back(v);
        next.insert(canonical_code(RootedTree(std::move(parent))));
      }
    }
    level = std::move(next);
  }
  std::vector<RootedTree> out;
  for (const std::string& code : level) out.push_back(tree_from_code(code));
  return out;
}

std::vector<RootedTree> perfect_trees(int height, int max_branching) {
  if (height < 0 || max_branching < 1) throw PreconditionError("bad perfect tree parameters");
  std::vector<std::string> codes{"()"};
  for (int h = 1; h <= height; ++h) {
    std::set<std::string> next;
    const int m = static_cast<int>(codes.size());
    // multisets of size 1..max_branching as nondecreasing index tuples
    for (int k = 1; k <= max_branching; ++k) {
      std::vector<int> idx(static_cast<std::size_t>(k), 0);
      for (;;) {
        std::vector<std::string> parts;
        for (int i : idx) parts.push_back(codes[static_cast<std::size_t>(i)]);
        std::sort(parts.begin(), parts.end());
        std::string code = "(";
        for (const std::string& p : parts) code += p;
        next.insert(code + ")");
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) --pos;
        if (pos < 0) break;
        int v = ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = v;
      }
    }
    codes.assign(next.begin(), next.end());
  }
  std::vector<RootedTree> out;
  for (const std::string& c : codes) out.push_back(tree_from_code(c));
  return out;
}

RootedTree k_nary_tree(int k, int height) {
  if (k < 1 || height < 0) throw PreconditionError("bad k-nary parameters");
  std::vector<int> parent{-1}, level{0};
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (level[v] < height)
      for (int c = 0; c < k; ++c) {
        parent.push_back(static_cast<int>(v));
        level.push_back(level[v] + 1);
      }
  return RootedTree(std::move(parent));
}

RootedTree path_tree(int vertices) {
  if (vertices < 1) throw PreconditionError("path needs a vertex");
  std::vector<int> parent(static_cast<std::size_t>(vertices));
  for (int v = 0; v < vertices; ++v) parent[static_cast<std::size_t>(v)] = v - 1;
  return RootedTree(std::move(parent));
}

RootedTree make_broom(const std::vector<int>& bristles) {
  const int h = static_cast<int>(bristles.size());
  std::vector<int> parent(static_cast<std::size_t>(h + 1));
  for (int i = 0; i <= h; ++i) parent[static_cast<std::size_t>(i)] = i - 1;
  for (int lv = 1; lv <= h; ++lv) {
    int count = bristles[static_cast<std::size_t>(lv - 1)];
    if (count < 0) throw PreconditionError("negative bristle count");
    for (int b = 0; b < count; ++b) parent.push_back(lv - 1);
  }
  return RootedTree(std::move(parent));
}

std::vector<RootedTree> brooms(int height, int max_bristles) {
  std::vector<RootedTree> out;
  std::vector<int> b(static_cast<std::size_t>(height), 0);
  for (;;) {
    out.push_back(make_broom(b));
    int pos = 0;
    while (pos < height && b[static_cast<std::size_t>(pos)] == max_bristles) b[static_cast<std::size_t>(pos++)] = 0;
    if (pos == height) break;
    ++b[static_cast<std::size_t>(pos)];
  }
  return out;
}

RootedTree random_rooted_tree(Rng& rng, int vertices) {
  if (vertices < 1) throw PreconditionError("tree needs a vertex");
  std::vector<int> parent{-1};
  for (int v = 1; v < vertices; ++v) parent.push_back(rng.uniform(0, v - 1));
  return RootedTree(std::move(parent));
}

namespace {

bool attaches_as_good_leaf(const std::vector<Facet>& facets, const Facet& f) {
  std::vector<Facet> cuts;
  for (const Facet& g : facets) cuts.push_back(intersect(f, g));
  std::sort(cuts.begin(), cuts.end(), [](const Facet& a, const Facet& b) { return a.size() < b.size(); });
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (!is_subset(cuts[i - 1], cuts[i])) return false;
  return true;
}

SimplicialComplex grow_ip(Rng& rng, const ForestParams& p, int target) {
  // points satisfy the property but are never connected
  const int d = rng.uniform(p.connected ? std::min(1, p.max_dim) : 0, p.max_dim);
  std::vector<Facet> facets{Facet(static_cast<std::size_t>(d + 1))};
  std::iota(facets[0].begin(), facets[0].end(), 0);
  int n = d + 1;
  while (static_cast<int>(facets.size()) < target) {
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
      Facet s = rng.pick(facets);
      s.erase(s.begin() + rng.uniform(0, d));
      Facet f = s;
      f.push_back(n);
      std::sort(f.begin(), f.end());
      if (!attaches_as_good_leaf(facets, f)) continue;
      std::vector<Facet> trial = facets;
      trial.push_back(f);
      if (!intersection_property(SimplicialComplex(n + 1, trial)).holds) continue;
      facets = std::move(trial);
      ++n;
      placed = true;
    }
    if (!placed) break;
  }
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex grow_general(Rng& rng, const ForestParams& p, int target) {
  const int pure_size = rng.uniform(1, p.max_dim + 1);
  auto facet_size = [&] { return p.pure ? pure_size : rng.uniform(1, p.max_dim + 1); };
  std::vector<Facet> facets;
  int n = 0;
  auto fresh = [&](Facet base, int size) {
    while (static_cast<int>(base.size()) < size) base.push_back(n++);
    std::sort(base.begin(), base.end());
    return base;
  };
  facets.push_back(fresh({}, facet_size()));
  while (static_cast<int>(facets.size()) < target) {
    if (!p.connected && rng.chance(1, 7)) {
      facets.push_back(fresh({}, facet_size()));
      continue;
    }
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      const Facet& g = rng.pick(facets);
      const int size = facet_size();
      Facet s;
      for (int v : g)
        if (rng.chance(1, 2)) s.push_back(v);
      while (static_cast<int>(s.size()) >= size) s.erase(s.begin() + rng.uniform(0, static_cast<int>(s.size()) - 1));
      if (s == g || (p.connected && s.empty())) continue;
      Facet f = s;
      int extra = n;
      for (int k = static_cast<int>(s.size()); k < size; ++k) f.push_back(extra++);
      std::sort(f.begin(), f.end());
      if (!attaches_as_good_leaf(facets, f)) continue;
      n = extra;
      facets.push_back(std::move(f));
      placed = true;
    }
    if (!placed) break;
  }
  return SimplicialComplex(n, std::move(facets));
}

}  // namespace

SimplicialComplex random_simplicial_forest(Rng& rng, const ForestParams& params) {
  if (params.min_facets < 1 || params.max_facets < params.min_facets || params.max_dim < 0)
    throw PreconditionError("bad forest parameters");
  const int target = rng.uniform(params.min_facets, params.max_facets);
  SimplicialComplex c = params.intersection_property ? grow_ip(rng, params, target) : grow_general(rng, params, target);
  if (!is_forest(c)) throw InvariantViolation("generator produced a complex that is not a forest");
  return c;
}

std::string complex_canonical_form(const SimplicialComplex& c) {
  const int r = c.facet_count();
  if (r > 8) throw ResourceError("canonical form limited to 8 facets");
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<unsigned> best;
  bool first = true;
  do {
    // vertex types: incidence bitmask over the permuted facets
    std::vector<unsigned> types;
    for (int v : c.covered_vertices()) {
      unsigned mask = 0;
      for (int i = 0; i < r; ++i) {
        const Facet& f = c.facet(perm[static_cast<std::size_t>(i)]);
        if (std::binary_search(f.begin(), f.end(), v)) mask |= 1u << i;
      }
      types.push_back(mask);
    }
    std::sort(types.begin(), types.end());
    if (first || types < best) best = std::move(types);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string out = std::to_string(r) + ":";
  for (unsigned m : best) out += std::to_string(m) + ",";
  return out;
}

std::vector<SimplicialComplex> intersection_property_trees(int max_dim, int max_facets) {
  std::vector<SimplicialComplex> out;
  for (int d = 0; d <= max_dim; ++d) {
    Facet base(static_cast<std::size_t>(d + 1));
    std::iota(base.begin(), base.end(), 0);
    std::vector<SimplicialComplex> level{SimplicialComplex(d + 1, {base})};
    for (int r = 1; r <= max_facets && !level.empty(); ++r) {
      out.insert(out.end(), level.begin(), level.end());
      if (r == max_facets) break;
      std::map<std::string, SimplicialComplex> next;
      for (const SimplicialComplex& c : level) {
        const int n = c.vertex_count();
        for (const Facet& g : c.facets())
          for (std::size_t drop = 0; drop < g.size(); ++drop) {
            Facet s = g;
            s.erase(s.begin() + static_cast<long>(drop));
            for (int v = 0; v <= n; ++v) {
              if (std::binary_search(g.begin(), g.end(), v)) continue;
              Facet f = s;
              f.push_back(v);
              std::sort(f.begin(), f.end());
              if (c.index_of(f) >= 0 || !attaches_as_good_leaf(c.facets(), f)) continue;
              std::vector<Facet> fs = c.facets();
              fs.push_back(f);
              SimplicialComplex grown(std::max(n, v + 1), std::move(fs));
              if (!intersection_property(grown).holds) continue;
              next.emplace(complex_canonical_form(grown), std::move(grown));
            }
          }
      }
      level.clear();
      for (auto& kv : next) level.push_back(std::move(kv.second));
    }
  }
  return out;
}

}  // namespace facetreg
