#include "facetreg/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "facetreg/error.hpp"

namespace facetreg {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer, got " + v.dump());
  return v.get<int>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

ComplexInput parse_complex_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("facets"))
    throw ParseError("complex file needs keys \"n\" and \"facets\"");
  const int n = as_int(doc["n"], "n");
  if (n < 1) throw ParseError("n must be positive");
  const json& fs = doc["facets"];
  if (!fs.is_array() || fs.empty()) throw ParseError("facets must be a non-empty array");

  std::vector<Facet> raw;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string where = "facets[" + std::to_string(i) + "]";
    if (!fs[i].is_array() || fs[i].empty()) throw ParseError(where + ": expected a non-empty array");
    Facet f;
    for (const json& v : fs[i]) {
      int x = as_int(v, where);
      if (x < 1 || x > n) throw ParseError(where + ": vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
      f.push_back(x);
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw ParseError(where + ": repeated vertex");
    raw.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = 0; j < raw.size(); ++j)
      if (i != j && is_subset(raw[i], raw[j])) {
        auto show = [&](std::size_t k) {
          std::string s = "{";
          for (std::size_t a = 0; a < raw[k].size(); ++a) s += (a ? "," : "") + std::to_string(raw[k][a]);
          return "facets[" + std::to_string(k) + "] " + s + "}";
        };
        throw ParseError(raw[i] == raw[j] ? show(i) + " duplicates " + show(j)
                                          : show(i) + " is contained in " + show(j));
      }

  std::set<int> used;
  for (const Facet& f : raw) used.insert(f.begin(), f.end());
  ComplexInput in;
  std::vector<int> index(static_cast<std::size_t>(n + 1), -1);
  for (int v = 1; v <= n; ++v) {
    if (used.count(v)) {
      index[static_cast<std::size_t>(v)] = static_cast<int>(in.labels.size());
      in.labels.push_back(v);
    } else {
      in.isolated.push_back(v);
    }
  }
  std::vector<Facet> facets;
  for (const Facet& f : raw) {
    Facet g;
    for (int v : f) g.push_back(index[static_cast<std::size_t>(v)]);
    facets.push_back(std::move(g));
  }
  in.complex = SimplicialComplex(static_cast<int>(in.labels.size()), std::move(facets));
  return in;
}

ComplexInput load_complex_file(const std::string& path) { return parse_complex_json(read_text_file(path)); }

json complex_to_json(const SimplicialComplex& c) {
  json fs = json::array();
  for (const Facet& f : c.facets()) {
    json row = json::array();
    for (int v : f) row.push_back(v + 1);
    fs.push_back(row);
  }
  return json{{"n", c.vertex_count()}, {"facets", fs}};
}

RootedTree parse_tree_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("parent"))
    throw ParseError("tree file needs keys \"n\" and \"parent\"");
  const int n = as_int(doc["n"], "n");
  const json& p = doc["parent"];
  if (!p.is_array() || static_cast<int>(p.size()) != n)
    throw ParseError("parent must be an array of length n = " + std::to_string(n));
  std::vector<int> parent;
  for (std::size_t i = 0; i < p.size(); ++i) parent.push_back(as_int(p[i], "parent[" + std::to_string(i) + "]"));
  if (doc.contains("root")) {
    const int root = as_int(doc["root"], "root");
    if (root < 0 || root >= n || parent[static_cast<std::size_t>(root)] != -1)
      throw ParseError("root " + std::to_string(root) + " does not have parent -1");
  }
  try {
    return RootedTree(std::move(parent));
  } catch (const StructuralError& e) {
    throw ParseError(std::string("invalid tree: ") + e.what());
  }
}

RootedTree load_tree_file(const std::string& path) { return parse_tree_json(read_text_file(path)); }

json tree_to_json(const RootedTree& t) {
  return json{{"n", t.size()}, {"root", t.root()}, {"parent", t.parents()}};
}

json betti_json(const BettiTable& table) {
  json out = json::object();
  for (const auto& [k, v] : table.entries()) out[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
  return out;
}

}  // namespace facetreg
