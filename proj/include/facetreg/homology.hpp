#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facetreg/monomial.hpp"

namespace facetreg {

struct FieldSpec {
  int characteristic = 0;

  static FieldSpec rational() { return FieldSpec{0}; }
  static FieldSpec prime(int p);
  void validate() const;
};

// Graded Betti numbers of the ideal I (not R/I).
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  void add(int i, int j, std::int64_t count);
  std::int64_t get(int i, int j) const;
  const std::map<Key, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::int64_t generator_count() const;
  int projective_dimension() const;  // -1 when empty
  // reg(I); nullopt for the zero ideal.
  std::optional<int> regularity() const;
  // reg(R/I) = reg(I) - 1, and 0 for the zero ideal.
  int quotient_regularity() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

 private:
  std::map<Key, std::int64_t> entries_;
};

struct OracleLimits {
  std::size_t max_lattice = 3'000'000;
  std::size_t max_strand_faces = 2'000'000;
  bool collapse_strands = true;  // strong collapses before building boundary matrices
};

// Which complex was used to get the strand homology. All three have the same
// reduced homology up to a fixed degree shift.
enum class StrandModel {
  UpperKoszul,   // tau with x^(b - tau) in I
  Nerve,         // nerve of the facets {supp(b) \ g}
  Restriction,   // Alexander dual: subsets of supp(b) containing no generator
};

const char* to_string(StrandModel m);

struct StrandRecord {
  Monomial multidegree;  // in the variables of the (sub)ideal that was split off
  StrandModel model = StrandModel::UpperKoszul;
  std::vector<std::int64_t> faces;     // f_{-1}, f_0, ..., f_D
  std::vector<std::int64_t> ranks;     // rank d_k : C_k -> C_{k-1}, k = 0..D
  std::vector<std::int64_t> homology;  // reduced h_k, k = -1..D

  // Alternating face count equals alternating homology count, all h_k >= 0,
  // and h_k = f_k - r_k - r_{k+1}.
  bool euler_holds() const;
};

struct BettiComputation {
  BettiTable table;
  std::vector<StrandRecord> strands;  // only filled on request
  std::size_t strands_computed = 0;
  std::size_t lattice_elements = 0;
};

std::vector<Monomial> lcm_lattice_degrees(const MonomialIdeal& ideal,
                                          std::size_t cap = OracleLimits{}.max_lattice);

BettiTable graded_betti(const MonomialIdeal& ideal, FieldSpec field = {}, const OracleLimits& limits = {});
BettiComputation graded_betti_detailed(const MonomialIdeal& ideal, FieldSpec field,
                                       const OracleLimits& limits, bool keep_strands);

std::optional<int> regularity(const MonomialIdeal& ideal, FieldSpec field = {},
                              const OracleLimits& limits = {});
int quotient_regularity(const MonomialIdeal& ideal, FieldSpec field = {},
                        const OracleLimits& limits = {});

// Squarefree ideals only: repeatedly drop v from a pair u, v such that swapping
// u and v fixes I and no generator contains both. Every Betti number at a
// multidegree through both is a shifted copy of one at a smaller multidegree on
// the same diagonal, so reg is unchanged. Non-squarefree input is returned as is.
MonomialIdeal drop_twin_variables(const MonomialIdeal& ideal);
// reg(R/I) via drop_twin_variables; the Betti table itself is not preserved.
int quotient_regularity_reduced(const MonomialIdeal& ideal, FieldSpec field = {},
                                const OracleLimits& limits = {});

bool has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field = {},
                           const OracleLimits& limits = {});
bool has_linear_first_syzygies(const MonomialIdeal& ideal, FieldSpec field = {},
                               const OracleLimits& limits = {});
// Same tests on an already computed table of an ideal generated in degree d.
bool table_is_linear(const BettiTable& table, int d);
bool table_has_linear_first_syzygies(const BettiTable& table, int d);

// Each colon (g_1..g_{k-1}) : g_k generated by variables.
bool has_linear_quotients(const std::vector<Monomial>& ordered_gens);

// Rows i, columns j - i.
std::string betti_tsv(const BettiTable& table);

}  // namespace facetreg
