#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "facetreg/homology.hpp"
#include "facetreg/rooted_tree.hpp"
#include "facetreg/simplicial.hpp"

namespace facetreg {

// {"n": 5, "facets": [[1,2,3],[3,4,5]]}, vertices 1-based. Vertices in no
// facet are dropped and the rest renumbered; labels[v] is the file's vertex
// for internal vertex v.
struct ComplexInput {
  SimplicialComplex complex;
  std::vector<int> labels;
  std::vector<int> isolated;
};

ComplexInput parse_complex_json(const std::string& text);
ComplexInput load_complex_file(const std::string& path);
nlohmann::json complex_to_json(const SimplicialComplex& c);

// {"n": 4, "root": 0, "parent": [-1, 0, 0, 1]}, vertices 0-based.
RootedTree parse_tree_json(const std::string& text);
RootedTree load_tree_file(const std::string& path);
nlohmann::json tree_to_json(const RootedTree& t);

// {"i,j": count, ...}
nlohmann::json betti_json(const BettiTable& table);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace facetreg
