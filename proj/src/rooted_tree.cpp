#include "facetreg/rooted_tree.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "facetreg/error.hpp"

namespace facetreg {

RootedTree::RootedTree(std::vector<int> parent, std::vector<int> labels)
    : parent_(std::move(parent)), labels_(std::move(labels)) {
  const int n = size();
  if (labels_.empty()) {
    labels_.resize(parent_.size());
    for (int v = 0; v < n; ++v) labels_[static_cast<std::size_t>(v)] = v;
  }
  if (static_cast<int>(labels_.size()) != n) throw StructuralError("label count differs from vertex count");
  if (n == 0) return;
  children_.assign(parent_.size(), {});
  for (int v = 0; v < n; ++v) {
    int p = parent_[static_cast<std::size_t>(v)];
    if (p == -1) {
      if (root_ != -1) throw StructuralError("more than one root");
      root_ = v;
    } else if (p < 0 || p >= n || p == v) {
      throw StructuralError("parent of vertex " + std::to_string(v) + " out of range");
    } else {
      children_[static_cast<std::size_t>(p)].push_back(v);
    }
  }
  if (root_ == -1) throw StructuralError("no root");
  level_.assign(parent_.size(), -1);
  std::vector<int> queue{root_};
  level_[static_cast<std::size_t>(root_)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    height_ = std::max(height_, level(u));
    for (int c : children(u)) {
      level_[static_cast<std::size_t>(c)] = level(u) + 1;
      queue.push_back(c);
    }
  }
  if (static_cast<int>(queue.size()) != n) throw StructuralError("parent structure has a cycle");
}

int RootedTree::label_bound() const {
  int m = -1;
  for (int l : labels_) m = std::max(m, l);
  return m + 1;
}

TreeStats tree_stats(const RootedTree& t) {
  TreeStats s;
  s.height = t.height();
  const int n = t.size();
  s.level.resize(static_cast<std::size_t>(n));
  s.outdegree.resize(static_cast<std::size_t>(n));
  s.leaves_per_level.assign(static_cast<std::size_t>(std::max(s.height + 1, 0)), 0);
  s.outdegree_per_level.assign(static_cast<std::size_t>(std::max(s.height + 1, 0)), 0);
  for (int v = 0; v < n; ++v) {
    int lv = t.level(v);
    int deg = static_cast<int>(t.children(v).size());
    s.level[static_cast<std::size_t>(v)] = lv;
    s.outdegree[static_cast<std::size_t>(v)] = deg;
    s.outdegree_per_level[static_cast<std::size_t>(lv)] += deg;
    if (deg == 0) {
      s.leaves.push_back(v);
      ++s.leaves_per_level[static_cast<std::size_t>(lv)];
      if (lv == s.height) ++s.top_level_count;
    }
  }
  return s;
}

TreeClass classify(const RootedTree& t) {
  TreeClass c;
  if (t.empty()) return c;
  const int h = t.height();
  c.perfect = true;
  for (int v = 0; v < t.size(); ++v)
    if (t.is_leaf(v) && t.level(v) != h) c.perfect = false;

  if (h >= 1) {
    int k = static_cast<int>(t.children(t.root()).size());
    bool ok = true;
    for (int v = 0; v < t.size() && ok; ++v)
      if (t.level(v) <= h - 1 && static_cast<int>(t.children(v).size()) != k) ok = false;
    if (ok) c.k_nary = k;
  }

  std::vector<int> inner(static_cast<std::size_t>(h + 1), -1);
  bool broom = true;
  for (int v = 0; v < t.size() && broom; ++v) {
    if (t.is_leaf(v)) continue;
    int lv = t.level(v);
    if (inner[static_cast<std::size_t>(lv)] != -1) broom = false;
    inner[static_cast<std::size_t>(lv)] = v;
  }
  for (int i = 0; i < h && broom; ++i)
    if (inner[static_cast<std::size_t>(i)] == -1) broom = false;
  if (broom) {
    c.broom = true;
    for (int i = 0; i < h; ++i) c.handle.push_back(inner[static_cast<std::size_t>(i)]);
    if (h == 0) {
      c.handle.push_back(t.root());
    } else {
      const auto& last = t.children(inner[static_cast<std::size_t>(h - 1)]);
      c.handle.push_back(*std::min_element(last.begin(), last.end()));
    }
  }
  return c;
}

RootedForest induced_subforest(const RootedTree& t, const std::vector<int>& keep) {
  const int n = t.size();
  std::vector<char> kept(static_cast<std::size_t>(n), 0);
  for (int v : keep) {
    if (v < 0 || v >= n) throw StructuralError("vertex out of range");
    kept[static_cast<std::size_t>(v)] = 1;
  }
  RootedForest out;
  // Roots in increasing id; each component collected in BFS order.
  for (int r = 0; r < n; ++r) {
    if (!kept[static_cast<std::size_t>(r)]) continue;
    int p = t.parent(r);
    if (p != -1 && kept[static_cast<std::size_t>(p)]) continue;
    std::vector<int> order{r};
    for (std::size_t head = 0; head < order.size(); ++head)
      for (int c : t.children(order[head]))
        if (kept[static_cast<std::size_t>(c)]) order.push_back(c);
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) local[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<int> parent(order.size()), labels(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      parent[i] = i == 0 ? -1 : local[static_cast<std::size_t>(t.parent(v))];
      labels[i] = t.label(v);
    }
    out.emplace_back(std::move(parent), std::move(labels));
  }
  return out;
}

RootedTree remove_vertices(const RootedTree& t, const std::vector<int>& drop) {
  std::vector<char> gone(static_cast<std::size_t>(t.size()), 0);
  for (int v : drop) gone.at(static_cast<std::size_t>(v)) = 1;
  std::vector<int> keep;
  for (int v = 0; v < t.size(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  RootedForest f = induced_subforest(t, keep);
  if (f.empty()) return {};
  if (f.size() > 1) throw StructuralError("vertex removal disconnects the tree");
  return f.front();
}

RootedTree subtree_at(const RootedTree& t, int v) {
  std::vector<int> keep{v};
  for (std::size_t head = 0; head < keep.size(); ++head)
    for (int c : t.children(keep[head])) keep.push_back(c);
  return induced_subforest(t, keep).front();
}

namespace {

// Vertex sets (local ids, sorted) of the directed paths on len vertices.
std::vector<Facet> path_sets(const RootedTree& t, int len) {
  if (len < 1) throw PreconditionError("path length t must be positive");
  std::vector<Facet> out;
  for (int v = 0; v < t.size(); ++v) {
    if (t.level(v) < len - 1) continue;
    Facet f;
    for (int u = v, k = 0; k < len; ++k, u = t.parent(u)) f.push_back(u);
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  return out;
}

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

void require_perfect_range(int h, int len) {
  if (h < 1) throw PreconditionError("height must be at least 1");
  if (len < (h + 2) / 2 || len > h + 1)
    throw PreconditionError("t = " + std::to_string(len) + " outside [ceil((h+1)/2), h+1] for h = " + std::to_string(h));
}

// Sum of D_i over a <= i <= b with D_{-1} = 1.
long long level_sum(const TreeStats& s, int a, int b) {
  long long total = 0;
  for (int i = a; i <= b; ++i) total += i == -1 ? 1 : s.outdegree_per_level.at(static_cast<std::size_t>(i));
  return total;
}

}  // namespace

MonomialIdeal t_path_ideal(const RootedTree& t, int len, int ambient) {
  if (ambient < std::max(t.label_bound(), 1)) throw StructuralError("ambient ring too small for tree labels");
  std::vector<Monomial> gens;
  for (const Facet& f : path_sets(t, len)) {
    std::vector<int> vars;
    for (int v : f) vars.push_back(t.label(v));
    gens.push_back(Monomial::from_support(ambient, vars));
  }
  return MonomialIdeal(ambient, std::move(gens));
}

MonomialIdeal t_path_ideal(const RootedForest& f, int len, int ambient) {
  MonomialIdeal out = MonomialIdeal::zero(ambient);
  for (const RootedTree& t : f) out = ideal_sum(out, t_path_ideal(t, len, ambient));
  return out;
}

MonomialIdeal t_path_ideal(const RootedTree& t, int len) { return t_path_ideal(t, len, std::max(t.label_bound(), 1)); }

SimplicialComplex path_complex(const RootedTree& t, int len) {
  SimplicialComplex c(t.size(), path_sets(t, len));
  if (!is_forest(c)) throw InvariantViolation("path complex of a rooted tree is not a forest");
  return c;
}

RootedTree clean_form(const RootedTree& t, int len) {
  if (t.empty()) return {};
  std::vector<int> deepest(static_cast<std::size_t>(t.size()));
  for (int v = 0; v < t.size(); ++v) deepest[static_cast<std::size_t>(v)] = t.level(v);
  // deepest level below each vertex, swept bottom-up
  std::vector<int> by_level(static_cast<std::size_t>(t.size()));
  for (int v = 0; v < t.size(); ++v) by_level[static_cast<std::size_t>(v)] = v;
  std::sort(by_level.begin(), by_level.end(), [&](int a, int b) { return t.level(a) > t.level(b); });
  for (int v : by_level)
    if (t.parent(v) != -1)
      deepest[static_cast<std::size_t>(t.parent(v))] =
          std::max(deepest[static_cast<std::size_t>(t.parent(v))], deepest[static_cast<std::size_t>(v)]);
  std::vector<int> keep;
  for (int v = 0; v < t.size(); ++v)
    if (deepest[static_cast<std::size_t>(v)] >= len - 1) keep.push_back(v);
  RootedForest f = induced_subforest(t, keep);
  return f.empty() ? RootedTree{} : f.front();
}

LeafDecomposition leaf_decomposition(const RootedTree& t, int z, int len) {
  if (len < 1) throw PreconditionError("path length t must be positive");
  if (z < 0 || z >= t.size() || !t.is_leaf(z) || t.level(z) != t.height())
    throw PreconditionError("z must be a leaf on the top level");
  if (t.height() < len - 1) throw PreconditionError("height below t - 1");
  LeafDecomposition d;
  d.leaf = z;
  d.path.assign(static_cast<std::size_t>(len), -1);
  for (int k = len - 1, u = z; k >= 0; --k, u = t.parent(u)) d.path[static_cast<std::size_t>(k)] = u;
  int x1 = d.path.front();
  if (t.parent(x1) != -1) d.above = t.parent(x1);

  d.sides.assign(static_cast<std::size_t>(len), {});
  for (int j = 0; j < len; ++j) {
    int xj;
    if (j == 0) {
      if (!d.above) continue;
      xj = *d.above;
    } else {
      xj = d.path[static_cast<std::size_t>(j - 1)];
    }
    int next = d.path[static_cast<std::size_t>(j)];  // x_{j+1}
    for (int c : t.children(xj))
      if (c != next) d.sides[static_cast<std::size_t>(j)].push_back(subtree_at(t, c));
  }

  int cut = d.above ? *d.above : x1;
  std::vector<int> drop{cut};
  for (std::size_t head = 0; head < drop.size(); ++head)
    for (int c : t.children(drop[head])) drop.push_back(c);
  d.remainder = remove_vertices(t, drop);
  return d;
}

namespace {

std::string code_of(const RootedTree& t, int v) {
  std::vector<std::string> parts;
  for (int c : t.children(v)) parts.push_back(code_of(t, c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const std::string& p : parts) s += p;
  s += ')';
  return s;
}

}  // namespace

std::string canonical_code(const RootedTree& t) { return t.empty() ? std::string() : code_of(t, t.root()); }

RootedTree tree_from_code(const std::string& code) {
  if (code.empty()) return {};
  std::vector<int> parent, stack;
  for (char ch : code) {
    if (ch == '(') {
      parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(parent.size()) - 1);
    } else if (ch == ')') {
      if (stack.empty()) throw ParseError("unbalanced tree code");
      stack.pop_back();
    } else {
      throw ParseError("unexpected character in tree code");
    }
  }
  if (!stack.empty() || std::count(parent.begin(), parent.end(), -1) != 1) throw ParseError("malformed tree code");
  return RootedTree(std::move(parent));
}

int reg_formula_perfect(const RootedTree& t, int len) {
  if (t.empty() || !classify(t).perfect) throw PreconditionError("tree is not perfect");
  const int h = t.height();
  require_perfect_range(h, len);
  return static_cast<int>(level_sum(tree_stats(t), h - len, h - 2));
}

int reg_upper_bound_general(const RootedTree& t, int len) {
  if (t.empty()) throw PreconditionError("empty tree");
  const int h = t.height();
  require_perfect_range(h, len);
  RootedTree c = clean_form(t, len);
  TreeStats s = tree_stats(c);
  if (s.height != h) throw InvariantViolation("clean form changed the height");
  long long value = level_sum(s, h - len, h - 2);
  for (int i = len - 1; i <= h - 2; ++i)
    value += static_cast<long long>(h - i - 1) * s.leaves_per_level[static_cast<std::size_t>(i)];
  return static_cast<int>(value);
}

int reg_broom(const RootedTree& t, int len) {
  if (t.empty() || !classify(t).broom) throw PreconditionError("tree is not a broom");
  const int h = t.height();
  if (len < 1 || h < len - 1) throw PreconditionError("broom formula needs 1 <= t <= h + 1");
  return (len - 1) * ceil_div(h - len + 2, len + 1);
}

namespace {

std::mutex cache_mutex;
std::unordered_map<std::string, int> cache;

int rec_tree(const RootedTree& t, int len);

int rec_forest(const RootedForest& f, int len) {
  int total = 0;
  for (const RootedTree& t : f) total += rec_tree(t, len);
  return total;
}

int branch_value(const LeafDecomposition& d, int len) {
  int v = rec_tree(d.remainder, len) + (len - 1);
  for (int j = 0; j < len; ++j) v += rec_forest(d.sides[static_cast<std::size_t>(j)], len - j);
  return v;
}

int rec_tree(const RootedTree& t, int len) {
  if (t.empty() || len <= 1 || t.height() < len - 1) return 0;
  std::string key = canonical_code(t) + '#' + std::to_string(len);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  int z = -1;
  for (int v = 0; v < t.size() && z < 0; ++v)
    if (t.level(v) == t.height()) z = v;
  int without = rec_tree(remove_vertices(t, {z}), len);
  int value = std::max(without, branch_value(leaf_decomposition(t, z, len), len));
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::move(key), value);
  return value;
}

}  // namespace

int reg_recursive(const RootedTree& t, int len) {
  if (len < 1) throw PreconditionError("path length t must be positive");
  return rec_tree(t, len);
}

int reg_recursive(const RootedForest& f, int len) {
  if (len < 1) throw PreconditionError("path length t must be positive");
  return rec_forest(f, len);
}

void clear_recursion_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.clear();
}

std::size_t recursion_cache_size() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.size();
}

int alpha_bound(const RootedTree& t, int len) {
  if (t.empty() || len < 1 || t.height() < len - 1) throw PreconditionError("alpha bound needs height >= t - 1");
  const int h = t.height();
  std::vector<int> top;
  for (int v = 0; v < t.size(); ++v)
    if (t.level(v) == h) top.push_back(v);
  int alpha = 0;
  for (int z : top) alpha = std::max(alpha, branch_value(leaf_decomposition(t, z, len), len));
  return std::max(rec_tree(remove_vertices(t, top), len), alpha);
}

BroomOrder broom_facet_order(const RootedTree& t, int len) {
  TreeClass cls = classify(t);
  if (t.empty() || !cls.broom) throw PreconditionError("tree is not a broom");
  const int h = t.height();
  if (len < 2 || len > h + 1) throw PreconditionError("broom order needs 2 <= t <= h + 1");
  const auto& handle = cls.handle;
  // x_(i,j): handle vertex for j = 0, otherwise the j-th bristle on level i
  std::vector<std::vector<int>> level_vertices(static_cast<std::size_t>(h + 1));
  for (int i = 0; i <= h; ++i) level_vertices[static_cast<std::size_t>(i)].push_back(handle[static_cast<std::size_t>(i)]);
  for (int v = 0; v < t.size(); ++v) {
    int lv = t.level(v);
    if (v != handle[static_cast<std::size_t>(lv)]) level_vertices[static_cast<std::size_t>(lv)].push_back(v);
  }
  BroomOrder out;
  std::vector<Facet> facets;
  for (int i = 0; i <= h - len + 1; ++i) {
    const auto& top = level_vertices[static_cast<std::size_t>(i + len - 1)];
    for (int j = static_cast<int>(top.size()) - 1; j >= 0; --j) {
      Facet f(handle.begin() + i, handle.begin() + i + len - 1);
      f.push_back(top[static_cast<std::size_t>(j)]);
      std::sort(f.begin(), f.end());
      facets.push_back(std::move(f));
      out.index.emplace_back(i, j);
    }
  }
  out.complex = SimplicialComplex(t.size(), std::move(facets));
  std::vector<int> identity(static_cast<std::size_t>(out.complex.facet_count()));
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  if (!is_good_leaf_order(out.complex, identity)) throw InvariantViolation("broom facet order is not a good leaf order");
  return out;
}

bool classify_path_power_linearity(const RootedTree& t, int len) {
  if (t.empty() || len < 1 || t.height() < len - 1) throw PreconditionError("needs height >= t - 1");
  RootedTree c = clean_form(t, len);
  return classify(c).broom && c.height() <= 2 * len - 1;
}

int power_reg_broom(const RootedTree& t, int len, int s) {
  if (s < 1) throw PreconditionError("power must be positive");
  if (t.empty() || len < 2 || len > t.height() + 1) throw PreconditionError("needs 2 <= t <= h + 1");
  return len * (s - 1) + reg_broom(t, len);
}

int power_reg_perfect_top(const RootedTree& t, int s) {
  if (s < 1) throw PreconditionError("power must be positive");
  const int len = t.height() + 1;
  return len * (s - 1) + reg_formula_perfect(t, len);
}

}  // namespace facetreg
