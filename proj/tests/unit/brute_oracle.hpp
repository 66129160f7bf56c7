#pragma once

// Slow, independent Betti numbers for tests: for every lcm of a subset of
// generators b, beta_{i,b}(I) = dim H~_{i-1}(K^b) where
// K^b = {tau subset of supp(b) : x^(b - tau) in I}. Ranks over GF(p), dense.
// Nothing here touches the library's lattice, strand or rank code.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace brute {

using Exps = std::vector<int>;
using Table = std::map<std::pair<int, int>, long long>;

inline bool in_ideal(const std::vector<Exps>& gens, const Exps& m) {
  for (const Exps& g : gens) {
    bool div = true;
    for (std::size_t i = 0; i < m.size() && div; ++i) div = g[i] <= m[i];
    if (div) return true;
  }
  return false;
}

inline long long rank_mod(std::vector<std::vector<long long>> a, long long p) {
  long long rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    const long long iv = inv((a[row][c] % p + p) % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] % p == 0) continue;
      const long long f = (a[r][c] % p + p) % p * iv % p;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[row][k]) % p + p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Reduced homology dimensions h_{-1}, h_0, ... of the complex given by its
// faces as bitmasks (closed under subsets, may be just {0}).
inline std::vector<long long> reduced_homology(const std::vector<std::uint32_t>& faces, int width, long long p) {
  std::vector<std::vector<std::uint32_t>> by_dim(static_cast<std::size_t>(width + 2));
  for (std::uint32_t f : faces) by_dim[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
  // by_dim[k] holds faces of dimension k - 1
  std::vector<long long> ranks(by_dim.size() + 1, 0);  // ranks[k]: boundary from size k to size k-1
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    if (by_dim[k].empty() || by_dim[k - 1].empty()) continue;
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t r = 0; r < by_dim[k - 1].size(); ++r) index[by_dim[k - 1][r]] = r;
    std::vector<std::vector<long long>> m(by_dim[k].size(), std::vector<long long>(by_dim[k - 1].size(), 0));
    for (std::size_t r = 0; r < by_dim[k].size(); ++r) {
      const std::uint32_t f = by_dim[k][r];
      int sign = 1;
      for (int v = 0; v < width; ++v) {
        if (!(f >> v & 1u)) continue;
        m[r][index.at(f & ~(1u << v))] = sign;
        sign = -sign;
      }
    }
    ranks[k] = rank_mod(m, p);
  }
  std::vector<long long> h;
  for (std::size_t k = 0; k < by_dim.size(); ++k)
    h.push_back(static_cast<long long>(by_dim[k].size()) - ranks[k] - ranks[k + 1]);
  return h;
}

inline Table betti(const std::vector<Exps>& gens, long long p = 1000003) {
  const std::size_t r = gens.size();
  const std::size_t n = r ? gens[0].size() : 0;
  std::set<Exps> lattice;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    Exps b(n, 0);
    for (std::size_t g = 0; g < r; ++g)
      if (mask >> g & 1u)
        for (std::size_t i = 0; i < n; ++i) b[i] = std::max(b[i], gens[g][i]);
    lattice.insert(b);
  }
  Table out;
  for (const Exps& b : lattice) {
    std::vector<int> supp;
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      deg += b[i];
      if (b[i] > 0) supp.push_back(static_cast<int>(i));
    }
    const int w = static_cast<int>(supp.size());
    std::vector<std::uint32_t> faces;
    for (std::uint32_t tau = 0; tau < (1u << w); ++tau) {
      Exps m = b;
      for (int k = 0; k < w; ++k)
        if (tau >> k & 1u) --m[static_cast<std::size_t>(supp[static_cast<std::size_t>(k)])];
      if (in_ideal(gens, m)) faces.push_back(tau);
    }
    std::vector<long long> h = reduced_homology(faces, w, p);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] > 0) out[{static_cast<int>(k), deg}] += h[k];  // h[k] is H~_{k-1}, giving beta_k
  }
  return out;
}

}  // namespace brute
