#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facetreg/monomial.hpp"
#include "facetreg/simplicial.hpp"

namespace facetreg {

// Rooted tree on vertices 0..n-1 with parent[root] == -1. Each vertex carries
// a label (its id in the tree it was cut from) so pieces of a tree can still be
// mapped to the variables of the ambient ring. The default object is the
// empty tree.
class RootedTree {
 public:
  RootedTree() = default;
  explicit RootedTree(std::vector<int> parent, std::vector<int> labels = {});

  int size() const { return static_cast<int>(parent_.size()); }
  bool empty() const { return parent_.empty(); }
  int root() const { return root_; }
  const std::vector<int>& parents() const { return parent_; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  int level(int v) const { return level_[static_cast<std::size_t>(v)]; }
  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return labels_; }
  int height() const { return height_; }  // -1 for the empty tree
  bool is_leaf(int v) const { return children(v).empty(); }
  // 1 + the largest label, i.e. the ambient variable count it needs.
  int label_bound() const;

 private:
  std::vector<int> parent_, labels_, level_;
  std::vector<std::vector<int>> children_;
  int root_ = -1;
  int height_ = -1;
};

using RootedForest = std::vector<RootedTree>;

struct TreeStats {
  std::vector<int> level, outdegree;
  int height = -1;
  std::vector<int> leaves;
  std::vector<int> leaves_per_level;        // l_i
  std::vector<long long> outdegree_per_level;  // D_i = sum of deg+ over level i
  int top_level_count = 0;                  // n(Gamma)
};
TreeStats tree_stats(const RootedTree& t);

struct TreeClass {
  bool perfect = false;
  std::optional<int> k_nary;  // absent for the single vertex and non-k-nary trees
  bool broom = false;
  std::vector<int> handle;  // root to a deepest leaf, when broom
};
TreeClass classify(const RootedTree& t);

// Vertices with their induced structure; each component is rooted at its
// shallowest vertex. Labels carry over.
RootedForest induced_subforest(const RootedTree& t, const std::vector<int>& keep);
RootedTree remove_vertices(const RootedTree& t, const std::vector<int>& drop);  // must stay connected
RootedTree subtree_at(const RootedTree& t, int v);

// One generator per directed path on t vertices, on variables indexed by label.
MonomialIdeal t_path_ideal(const RootedTree& t, int len, int ambient);
MonomialIdeal t_path_ideal(const RootedForest& f, int len, int ambient);
MonomialIdeal t_path_ideal(const RootedTree& t, int len);
SimplicialComplex path_complex(const RootedTree& t, int len);

RootedTree clean_form(const RootedTree& t, int len);

struct LeafDecomposition {
  int leaf = -1;
  std::vector<int> path;            // x_1(z) .. x_t(z), vertices of the input tree
  std::optional<int> above;         // x_0(z)
  RootedTree remainder;             // Gamma(z)
  std::vector<RootedForest> sides;  // Delta_j, j = 0..t-1
};
LeafDecomposition leaf_decomposition(const RootedTree& t, int z, int len);

// Canonical shape code; equal codes iff isomorphic rooted trees.
std::string canonical_code(const RootedTree& t);
RootedTree tree_from_code(const std::string& code);

int reg_formula_perfect(const RootedTree& t, int len);
int reg_upper_bound_general(const RootedTree& t, int len);
int reg_broom(const RootedTree& t, int len);
// reg(R/I_t) through leaf decompositions, memoized on shapes.
int reg_recursive(const RootedTree& t, int len);
int reg_recursive(const RootedForest& f, int len);
int alpha_bound(const RootedTree& t, int len);
void clear_recursion_cache();
std::size_t recursion_cache_size();

struct BroomOrder {
  SimplicialComplex complex;            // facets listed in the good leaf order
  std::vector<std::pair<int, int>> index;  // (i, j) of each facet
};
BroomOrder broom_facet_order(const RootedTree& t, int len);

bool classify_path_power_linearity(const RootedTree& t, int len);
int power_reg_broom(const RootedTree& t, int len, int s);
int power_reg_perfect_top(const RootedTree& t, int s);

}  // namespace facetreg
