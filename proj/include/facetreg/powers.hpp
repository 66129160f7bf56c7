#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facetreg/homology.hpp"
#include "facetreg/monomial.hpp"
#include "facetreg/simplicial.hpp"

namespace facetreg {

struct PowerGenerator {
  Monomial value;
  std::vector<int> exponents;      // a_1..a_r over the ordered facets, summing to s
  std::size_t factorizations = 0;  // exponent vectors giving this value
};

// Minimal generators of I(Delta)^s written over m_1..m_r, m_i the facet
// order[i - 1]. Each value keeps its lex-largest exponent vector; the list is
// sorted by that vector, largest first.
std::vector<PowerGenerator> power_generators(const SimplicialComplex& c, const std::vector<int>& order, int s,
                                             std::size_t cap = kDefaultPowerCap);
// Same list, but a value with two exponent vectors is an InvariantViolation.
std::vector<PowerGenerator> power_generators_canonical(const SimplicialComplex& c, const std::vector<int>& order,
                                                       int s, std::size_t cap = kDefaultPowerCap);

struct ClaimOutcome {
  std::string id;
  bool pass = true;
  std::string witness;
};

struct VerificationReport {
  std::string instance;
  int characteristic = 0;
  std::vector<ClaimOutcome> claims;
  double seconds = 0;

  void add(std::string id, bool pass, std::string witness = {});
  bool passed() const;
  const ClaimOutcome* first_failure() const;
};

// Prefix colons of the canonical order, plus the (p, q, k, x) witness for
// every pair M > N.
VerificationReport verify_linear_quotients_power(const SimplicialComplex& c, int s,
                                                 std::size_t cap = kDefaultPowerCap);

struct TheoremAItems {
  bool pure = false;
  bool intersection = false;          // (1)
  bool linear = false;                // (2)
  std::vector<bool> linear_quotients; // pure and I^s has lq in the lex order, s = 1..s_max
  std::vector<bool> linear_power;     // (5) at s
  std::vector<bool> linear_syzygies;  // (6) at s
  // (3)/(4) on the window s <= s_max
  bool all_lq() const;
  bool some_lq() const;
  bool some_linear_power() const;
  bool some_linear_syzygies() const;
};

// Lex order comes from adjacent_good_leaf_order when the intersection property
// holds and from good_leaf_order otherwise.
TheoremAItems theorem_A_items(const SimplicialComplex& c, int s_max, FieldSpec field = {},
                              const OracleLimits& limits = {}, std::size_t cap = kDefaultPowerCap);
VerificationReport verify_theorem_A(const SimplicialComplex& c, int s_max, FieldSpec field = {},
                                    const OracleLimits& limits = {}, std::size_t cap = kDefaultPowerCap);

// The four colon identities along a good leaf order, each side as a minimal
// generating set.
VerificationReport verify_colon_identities(const SimplicialComplex& c, const std::vector<int>& order, int s,
                                           std::size_t cap = kDefaultPowerCap);

// Pieces of the short exact sequence bound for reg(R/I^{s+1}).
MonomialIdeal order_prefix_ideal(const SimplicialComplex& c, const std::vector<int>& order, int i);  // I(Delta_i)
MonomialIdeal order_suffix_ideal(const SimplicialComplex& c, const std::vector<int>& order, int i);  // J_i

// max{d_r + reg(R/I^s), max_i d_i + reg(R/(I(Delta_i)^s + (J_i : m_i))), reg(R/I)},
// an upper bound for reg(R/I^{s+1}).
int power_reg_upper_bound(const SimplicialComplex& c, const std::vector<int>& order, int s,
                          FieldSpec field = {}, const OracleLimits& limits = {},
                          std::size_t cap = kDefaultPowerCap);

struct SlackRow {
  int s = 0;
  int reg_power = 0;  // reg(I^s)
  int bound = 0;      // (d+1)(s-1) + reg(I)
  int slack() const { return bound - reg_power; }
};

struct ConjectureReport {
  int dimension = 0;
  bool connected = true;
  std::vector<SlackRow> rows;                 // whole complex
  std::vector<int> component_min_slack;       // per component, when disconnected
  bool finding() const;                       // some negative slack anywhere
  int min_slack() const;
};

ConjectureReport conjecture_D_check(const SimplicialComplex& c, int s_max, FieldSpec field = {},
                                    const OracleLimits& limits = {}, std::size_t cap = kDefaultPowerCap);

}  // namespace facetreg
