#include "facetreg/linalg.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <numeric>
#include <algorithm>

namespace facetreg {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

using ModRow = std::vector<std::pair<int, std::uint32_t>>;

// row <- row - c * piv   (mod p)
void axpy_mod(ModRow& row, const ModRow& piv, std::uint64_t c, std::uint64_t p, ModRow& scratch) {
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < piv.size()) {
    if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
      scratch.push_back(row[i++]);
    } else if (i == row.size() || piv[j].first < row[i].first) {
      std::uint64_t v = (p - c * piv[j].second % p) % p;
      if (v) scratch.emplace_back(piv[j].first, static_cast<std::uint32_t>(v));
      ++j;
    } else {
      std::uint64_t v = (row[i].second + p - c * piv[j].second % p) % p;
      if (v) scratch.emplace_back(row[i].first, static_cast<std::uint32_t>(v));
      ++i;
      ++j;
    }
  }
  row.swap(scratch);
}

std::size_t column_bound(const std::vector<SparseRow>& rows) {
  int m = -1;
  for (const auto& r : rows)
    if (!r.empty()) m = std::max(m, r.back().first);
  return static_cast<std::size_t>(m + 1);
}

struct Overflow {};

// Checked int64 arithmetic for the fast exact path.
struct I64 {
  using T = std::int64_t;
  static T from(int v) { return v; }
  static bool zero(const T& v) { return v == 0; }
  static T mul(const T& a, const T& b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(const T& a, const T& b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T gcd(const T& a, const T& b) { return std::gcd(a, b); }
  static T div(const T& a, const T& b) { return a / b; }
  static bool is_unit(const T& g) { return g == 1 || g == -1; }
};

struct Big {
  using T = mpz_class;
  static T from(int v) { return T(v); }
  static bool zero(const T& v) { return sgn(v) == 0; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static T div(const T& a, const T& b) {
    T q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool is_unit(const T& g) { return g == 1 || g == -1; }
};

template <class Ops>
std::size_t rank_integral(const std::vector<SparseRow>& rows) {
  using T = typename Ops::T;
  using Row = std::vector<std::pair<int, T>>;
  std::vector<Row> pivots;
  std::vector<int> pivot_of(column_bound(rows), -1);  // leading column -> pivot index
  Row row, scratch;
  for (const auto& src : rows) {
    row.clear();
    for (auto [c, v] : src)
      if (v) row.emplace_back(c, Ops::from(v));
    while (!row.empty()) {
      int pi = pivot_of[static_cast<std::size_t>(row.front().first)];
      if (pi < 0) break;
      const Row& piv = pivots[static_cast<std::size_t>(pi)];
      // row <- a*row - b*piv with a = lead(piv), b = lead(row)
      T a = piv.front().second, b = row.front().second;
      T g = Ops::gcd(a, b);
      a = Ops::div(a, g);
      b = Ops::div(b, g);
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.emplace_back(row[i].first, Ops::mul(a, row[i].second));
          ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, Ops::sub(T(0), Ops::mul(b, piv[j].second)));
          ++j;
        } else {
          T v = Ops::sub(Ops::mul(a, row[i].second), Ops::mul(b, piv[j].second));
          if (!Ops::zero(v)) scratch.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
      if (row.empty()) break;
      T content = row.front().second;
      for (std::size_t k = 1; k < row.size() && !Ops::is_unit(content); ++k)
        content = Ops::gcd(content, row[k].second);
      if (!Ops::is_unit(content) && !Ops::zero(content))
        for (auto& e : row) e.second = Ops::div(e.second, content);
    }
    if (!row.empty()) {
      pivot_of[static_cast<std::size_t>(row.front().first)] = static_cast<int>(pivots.size());
      pivots.push_back(row);
    }
  }
  return pivots.size();
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::uint32_t p) {
  std::vector<ModRow> pivots;
  std::vector<int> pivot_of(column_bound(rows), -1);
  ModRow row, scratch;
  for (const auto& src : rows) {
    row.clear();
    for (auto [c, v] : src) {
      std::int64_t m = v % static_cast<std::int64_t>(p);
      if (m < 0) m += p;
      if (m) row.emplace_back(c, static_cast<std::uint32_t>(m));
    }
    while (!row.empty()) {
      int pi = pivot_of[static_cast<std::size_t>(row.front().first)];
      if (pi < 0) break;
      axpy_mod(row, pivots[static_cast<std::size_t>(pi)], row.front().second, p, scratch);
    }
    if (!row.empty()) {
      std::uint64_t inv = pow_mod(row.front().second, p - 2, p);
      for (auto& e : row) e.second = static_cast<std::uint32_t>(e.second * inv % p);
      pivot_of[static_cast<std::size_t>(row.front().first)] = static_cast<int>(pivots.size());
      pivots.push_back(row);
    }
  }
  return pivots.size();
}

std::size_t rank_rational(const std::vector<SparseRow>& rows) {
  try {
    return rank_integral<I64>(rows);
  } catch (const Overflow&) {
    return rank_integral<Big>(rows);
  }
}

}  // namespace facetreg
