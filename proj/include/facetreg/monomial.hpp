#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace facetreg {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int n);
  static Monomial variable(int n, int i);
  // Squarefree product of the listed (0-based) variables.
  static Monomial from_support(int n, const std::vector<int>& vars);

  int ambient_size() const { return static_cast<int>(exp_.size()); }
  int degree() const { return degree_; }
  const std::vector<int>& exponents() const { return exp_; }
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }

  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;
  std::vector<int> support() const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<int> exp_;
  int degree_ = 0;
};

// Canonical order: degree ascending, then exponent vectors lex descending
// (so x1 comes before x2).
bool canonical_less(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
// a / b; requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial power(const Monomial& m, int e);

// x1^2*x3 style; "1" for the unit.
std::string to_string(const Monomial& m);

constexpr std::size_t kDefaultPowerCap = 20000;

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Minimalizes and sorts canonically.
  MonomialIdeal(int n, std::vector<Monomial> gens);

  static MonomialIdeal zero(int n);
  static MonomialIdeal unit(int n);
  static MonomialIdeal principal(const Monomial& m);

  int ambient_size() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& m) const;
  // True when every generator has degree one.
  bool is_generated_by_variables() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int n, std::vector<Monomial> gens);
MonomialIdeal minimalize(std::vector<Monomial> gens);  // needs at least one monomial
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b,
                            std::size_t cap = kDefaultPowerCap);
MonomialIdeal ideal_power(const MonomialIdeal& ideal, int s, std::size_t cap = kDefaultPowerCap);
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);
// Common generator degree, or nullopt. Throws on the zero ideal.
std::optional<int> is_equigenerated(const MonomialIdeal& ideal);
// I ⊆ J for monomial ideals.
bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace facetreg
