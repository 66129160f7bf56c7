#include "facetreg/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "facetreg/error.hpp"

namespace facetreg {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient_size() != b.ambient_size())
    throw StructuralError("monomials live in rings of different size (" +
                          std::to_string(a.ambient_size()) + " vs " +
                          std::to_string(b.ambient_size()) + ")");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  if (exp_.empty()) throw StructuralError("monomial needs a positive ambient size");
  for (int e : exp_) {
    if (e < 0) throw StructuralError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Monomial Monomial::variable(int n, int i) {
  if (i < 0 || i >= n) throw StructuralError("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::from_support(int n, const std::vector<int>& vars) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int v : vars) {
    if (v < 0 || v >= n) throw StructuralError("variable index out of range");
    e[static_cast<std::size_t>(v)] = 1;
  }
  return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ambient(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() > b.exponents();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw StructuralError("quotient: " + to_string(b) + " does not divide " + to_string(a));
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exponents()[i];
  return Monomial(std::move(e));
}

Monomial power(const Monomial& m, int e) {
  std::vector<int> v(m.exponents());
  for (int& x : v) x *= e;
  return Monomial(std::move(v));
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.ambient_size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
  return os.str();
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  if (n <= 0) throw StructuralError("ideal needs a positive ambient size");
  for (const auto& g : gens)
    if (g.ambient_size() != n)
      throw StructuralError("generator " + to_string(g) + " has ambient size " +
                            std::to_string(g.ambient_size()) + ", expected " + std::to_string(n));
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // After sorting by degree a divisor always precedes its multiples.
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : gens_) {
      if (k.degree() >= g.degree()) break;
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n, {}); }
MonomialIdeal MonomialIdeal::unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }
MonomialIdeal MonomialIdeal::principal(const Monomial& m) { return MonomialIdeal(m.ambient_size(), {m}); }

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_generated_by_variables() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) { return MonomialIdeal(n, std::move(gens)); }

MonomialIdeal minimalize(std::vector<Monomial> gens) {
  if (gens.empty()) throw PreconditionError("minimalize: empty input has no ambient size");
  int n = gens.front().ambient_size();
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_size() != b.ambient_size()) throw StructuralError("ideal_sum: ambient sizes differ");
  std::vector<Monomial> g(a.generators());
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient_size(), std::move(g));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b, std::size_t cap) {
  if (a.ambient_size() != b.ambient_size()) throw StructuralError("ideal_product: ambient sizes differ");
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  MonomialIdeal out(a.ambient_size(), std::move(g));
  if (out.size() > cap)
    throw ResourceError("ideal product has " + std::to_string(out.size()) +
                        " minimal generators, cap is " + std::to_string(cap));
  return out;
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, int s, std::size_t cap) {
  if (s < 1) throw PreconditionError("ideal_power: exponent must be positive");
  MonomialIdeal acc = ideal;
  for (int k = 2; k <= s; ++k) acc = ideal_product(acc, ideal, cap);
  if (acc.size() > cap) throw ResourceError("ideal power exceeds generator cap");
  return acc;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.ambient_size() != ideal.ambient_size()) throw StructuralError("colon: ambient sizes differ");
  std::vector<Monomial> g;
  g.reserve(ideal.size());
  for (const auto& x : ideal.generators()) g.push_back(quotient(x, gcd(x, m)));
  return MonomialIdeal(ideal.ambient_size(), std::move(g));
}

std::optional<int> is_equigenerated(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionError("is_equigenerated: zero ideal");
  int d = ideal.generators().front().degree();
  for (const auto& g : ideal.generators())
    if (g.degree() != d) return std::nullopt;
  return d;
}

bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Monomial& g) { return b.contains(g); });
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) s += ", ";
    s += to_string(ideal.generators()[i]);
  }
  return s + ")";
}

}  // namespace facetreg
