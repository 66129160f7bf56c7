#include "facetreg/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "facetreg/error.hpp"
#include "facetreg/linalg.hpp"

namespace facetreg {

namespace {

using Mask = std::uint64_t;
constexpr std::uint32_t kCheckPrime = 2147483647u;  // 2^31 - 1

int popcount(Mask m) { return std::popcount(m); }

// Quotient Betti numbers beta^{R/I}_{i,j}.
using QTable = std::map<std::pair<int, int>, std::int64_t>;

// Open-addressing set of nonzero 64-bit keys.
class MaskSet {
 public:
  MaskSet() { slots_.assign(1024, 0); }
  bool insert(Mask key) {
    if ((size_ + 1) * 2 > slots_.size()) grow();
    return insert_raw(key);
  }
  std::size_t size() const { return size_; }

 private:
  static std::size_t hash(Mask k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
  bool insert_raw(Mask key) {
    std::size_t m = slots_.size() - 1;
    for (std::size_t i = hash(key) & m;; i = (i + 1) & m) {
      if (slots_[i] == key) return false;
      if (slots_[i] == 0) {
        slots_[i] = key;
        ++size_;
        return true;
      }
    }
  }
  void grow() {
    std::vector<Mask> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    size_ = 0;
    for (Mask k : old)
      if (k) insert_raw(k);
  }
  std::vector<Mask> slots_;
  std::size_t size_ = 0;
};

struct Polarization {
  int n = 0;                   // original ambient size
  std::vector<int> offset;     // first polarized bit of each variable
  std::vector<int> width;      // max exponent of each variable
  std::vector<Mask> gens;
};

Polarization polarize(const MonomialIdeal& ideal) {
  Polarization p;
  p.n = ideal.ambient_size();
  p.width.assign(static_cast<std::size_t>(p.n), 0);
  for (const auto& g : ideal.generators())
    for (int i = 0; i < p.n; ++i) p.width[i] = std::max(p.width[i], g[i]);
  p.offset.assign(static_cast<std::size_t>(p.n), 0);
  int total = 0;
  for (int i = 0; i < p.n; ++i) {
    p.offset[i] = total;
    total += p.width[i];
  }
  if (total > 64)
    throw ResourceError("oracle handles at most 64 polarized variables, ideal needs " + std::to_string(total));
  for (const auto& g : ideal.generators()) {
    Mask m = 0;
    for (int i = 0; i < p.n; ++i)
      for (int k = 0; k < g[i]; ++k) m |= Mask{1} << (p.offset[i] + k);
    p.gens.push_back(m);
  }
  return p;
}

Monomial depolarize(Mask m, const Polarization& p) {
  std::vector<int> e(static_cast<std::size_t>(p.n), 0);
  for (int i = 0; i < p.n; ++i)
    for (int k = 0; k < p.width[i]; ++k)
      if (m >> (p.offset[i] + k) & 1) ++e[i];
  return Monomial(std::move(e));
}

QTable convolve(const QTable& a, const QTable& b) {
  QTable out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  return out;
}

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Faces of one strand complex, bucketed by size (bucket 0 holds the empty face).
struct FaceLists {
  std::vector<std::vector<Mask>> by_size;
  std::size_t total = 0;
};

class BudgetExceeded {};

// Enumerates faces of one of the three strand models on a compressed ground set.
class StrandEnumerator {
 public:
  StrandEnumerator(Mask sigma, const std::vector<Mask>& gens) {
    for (int b = 0; b < 64; ++b)
      if (sigma >> b & 1) bits_.push_back(b);
    m_ = static_cast<int>(bits_.size());
    for (Mask g : gens) gc_.push_back(compress(g));
    full_ = m_ == 64 ? ~Mask{0} : ((Mask{1} << m_) - 1);
    k_ = static_cast<int>(gc_.size());
    if (k_ <= 64) {
      contains_.assign(static_cast<std::size_t>(m_), 0);
      for (int j = 0; j < k_; ++j)
        for (int v = 0; v < m_; ++v)
          if (gc_[j] >> v & 1) contains_[v] |= Mask{1} << j;
    }
    gens_at_.assign(static_cast<std::size_t>(m_), {});
    for (int j = 0; j < k_; ++j)
      for (int v = 0; v < m_; ++v)
        if (gc_[j] >> v & 1) gens_at_[v].push_back(gc_[j]);
  }

  int ground_size() const { return m_; }
  int generator_count() const { return k_; }
  bool model_available(StrandModel model) const { return model == StrandModel::Restriction || k_ <= 64; }

  // Counts faces; throws BudgetExceeded past `budget`.
  std::size_t count(StrandModel model, std::size_t budget) {
    collect_ = nullptr;
    budget_ = budget;
    counted_ = 1;  // the empty face
    run(model);
    return counted_;
  }

  FaceLists enumerate(StrandModel model, std::size_t budget) {
    FaceLists f;
    f.by_size.assign(1, {Mask{0}});
    collect_ = &f;
    budget_ = budget;
    counted_ = 1;
    run(model);
    f.total = counted_;
    collect_ = nullptr;
    return f;
  }

 private:
  Mask compress(Mask g) const {
    Mask out = 0;
    for (int i = 0; i < m_; ++i)
      if (g >> bits_[i] & 1) out |= Mask{1} << i;
    return out;
  }

  void record(Mask face, int size) {
    if (++counted_ > budget_) throw BudgetExceeded{};
    if (collect_) {
      if (static_cast<int>(collect_->by_size.size()) <= size) collect_->by_size.resize(size + 1);
      collect_->by_size[size].push_back(face);
    }
  }

  void run(StrandModel model) {
    switch (model) {
      case StrandModel::UpperKoszul: {
        Mask alive = k_ == 64 ? ~Mask{0} : ((Mask{1} << k_) - 1);
        dfs_koszul(0, alive, 0, 0);
        break;
      }
      case StrandModel::Nerve:
        dfs_nerve(0, 0, 0, 0);
        break;
      case StrandModel::Restriction:
        dfs_restriction(0, 0, 0);
        break;
    }
  }

  // tau is a face iff some generator avoids tau.
  void dfs_koszul(int start, Mask alive, Mask face, int size) {
    for (int v = start; v < m_; ++v) {
      Mask a = alive & ~contains_[v];
      if (!a) continue;
      Mask f = face | (Mask{1} << v);
      record(f, size + 1);
      dfs_koszul(v + 1, a, f, size + 1);
    }
  }

  // a set of generators is a face iff their union is not all of sigma.
  void dfs_nerve(int start, Mask uni, Mask face, int size) {
    for (int j = start; j < k_; ++j) {
      Mask u = uni | gc_[j];
      if (u == full_) continue;
      Mask f = face | (Mask{1} << j);
      record(f, size + 1);
      dfs_nerve(j + 1, u, f, size + 1);
    }
  }

  // rho is a face iff it contains no generator.
  void dfs_restriction(int start, Mask face, int size) {
    for (int v = start; v < m_; ++v) {
      Mask f = face | (Mask{1} << v);
      bool ok = true;
      for (Mask g : gens_at_[v])
        if ((g & ~f) == 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      record(f, size + 1);
      dfs_restriction(v + 1, f, size + 1);
    }
  }

  std::vector<int> bits_;
  std::vector<Mask> gc_;
  std::vector<Mask> contains_;
  std::vector<std::vector<Mask>> gens_at_;
  Mask full_ = 0;
  int m_ = 0;
  int k_ = 0;
  FaceLists* collect_ = nullptr;
  std::size_t budget_ = 0;
  std::size_t counted_ = 0;
};

std::vector<SparseRow> boundary_rows(const std::vector<Mask>& faces, const std::vector<Mask>& lower) {
  std::vector<SparseRow> rows;
  rows.reserve(faces.size());
  for (Mask f : faces) {
    SparseRow row;
    int pos = 0;
    for (Mask rest = f; rest; rest &= rest - 1, ++pos) {
      Mask bit = rest & (~rest + 1);
      auto it = std::lower_bound(lower.begin(), lower.end(), f ^ bit);
      row.emplace_back(static_cast<int>(it - lower.begin()), (pos % 2 == 0) ? 1 : -1);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

// Reduced homology of the complex given by its faces.
StrandRecord strand_homology(FaceLists& faces, const FieldSpec& field) {
  StrandRecord rec;
  for (auto& bucket : faces.by_size) std::sort(bucket.begin(), bucket.end());
  const int top = static_cast<int>(faces.by_size.size()) - 2;  // dimension D
  for (const auto& b : faces.by_size) rec.faces.push_back(static_cast<std::int64_t>(b.size()));

  // ranks[k] = rank of d_k, k = 0..D (d_0 maps vertices onto the empty face)
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top + 2), 0);
  if (top >= 0) ranks[0] = faces.by_size[1].empty() ? 0 : 1;
  std::vector<std::vector<SparseRow>> mats(static_cast<std::size_t>(top + 2));
  const std::uint32_t p = field.characteristic == 0 ? kCheckPrime : static_cast<std::uint32_t>(field.characteristic);
  for (int k = 1; k <= top; ++k) {
    mats[k] = boundary_rows(faces.by_size[k + 1], faces.by_size[k]);
    ranks[k] = static_cast<std::int64_t>(rank_mod_p(mats[k], p));
  }
  auto homology = [&]() {
    // h_k = f_k - rank d_k - rank d_{k+1}, k = -1..D
    std::vector<std::int64_t> h;
    for (int k = -1; k <= top; ++k) {
      std::int64_t rk = k >= 0 ? ranks[k] : 0;
      std::int64_t rk1 = ranks[k + 1];
      h.push_back(rec.faces[k + 1] - rk - rk1);
    }
    return h;
  };
  std::vector<std::int64_t> h = homology();
  if (field.characteristic == 0) {
    // rank over Q >= rank mod p, so a vanishing mod-p homology group pins both
    // adjacent ranks. Only ranks sitting between two nonzero groups need exact work.
    bool changed = false;
    for (int k = 1; k <= top; ++k) {
      if (h[k] != 0 && h[k + 1] != 0) {  // h_{k-1} and h_k
        ranks[k] = static_cast<std::int64_t>(rank_rational(mats[k]));
        changed = true;
      }
    }
    if (changed) h = homology();
  }
  rec.ranks.assign(ranks.begin(), ranks.begin() + (top + 1));
  rec.homology = std::move(h);
  return rec;
}

class Engine {
 public:
  Engine(FieldSpec field, OracleLimits limits, bool keep)
      : field_(field), limits_(limits), keep_(keep) {}

  // Quotient Betti table of R/(gens), gens minimal squarefree masks.
  QTable solve(std::vector<Mask> gens, Mask shift_bits) {
    if (gens.size() == 1) return {{{0, 0}, 1}, {{1, popcount(gens[0])}, 1}};
    Mask common = ~Mask{0};
    for (Mask g : gens) common &= g;
    if (common) {
      for (Mask& g : gens) g &= ~common;
      QTable inner = solve(std::move(gens), shift_bits | common);
      QTable out;
      int c = popcount(common);
      for (const auto& [k, v] : inner) out[{k.first, k.first == 0 ? 0 : k.second + c}] += v;
      return out;
    }
    auto parts = split_components(gens);
    if (parts.size() > 1) {
      QTable acc{{{0, 0}, 1}};
      for (auto& part : parts) acc = convolve(acc, solve(std::move(part), shift_bits));
      return acc;
    }
    return solve_connected(gens, shift_bits);
  }

  std::vector<StrandRecord> strands;
  std::size_t strands_computed = 0;
  std::size_t lattice_elements = 0;
  const Polarization* pol = nullptr;

 private:
  static std::vector<std::vector<Mask>> split_components(const std::vector<Mask>& gens) {
    std::vector<std::size_t> parent(gens.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (gens[i] & gens[j]) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<Mask>> groups;
    for (std::size_t i = 0; i < gens.size(); ++i) groups[find(i)].push_back(gens[i]);
    std::vector<std::vector<Mask>> out;
    for (auto& [r, g] : groups) out.push_back(std::move(g));
    return out;
  }

  QTable solve_connected(const std::vector<Mask>& gens, Mask shift_bits) {
    std::vector<Mask> lattice(gens.begin(), gens.end());
    MaskSet seen;
    for (Mask g : gens) seen.insert(g);
    for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
      Mask x = lattice[idx];
      for (Mask g : gens) {
        Mask y = x | g;
        if (y != x && seen.insert(y)) {
          lattice.push_back(y);
          if (lattice.size() > limits_.max_lattice)
            throw ResourceError("lcm lattice exceeds cap of " + std::to_string(limits_.max_lattice));
        }
      }
    }
    lattice_elements += lattice.size();

    std::unordered_map<Mask, std::vector<std::int64_t>> memo;
    QTable out{{{0, 0}, 1}};
    std::vector<Mask> inside;
    std::vector<std::size_t> parent;
    for (Mask sigma : lattice) {
      inside.clear();
      for (Mask g : gens)
        if ((g & ~sigma) == 0) inside.push_back(g);
      // components of the generators below sigma
      parent.resize(inside.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j)
          if (inside[i] & inside[j]) parent[find(i)] = find(j);
      std::map<std::size_t, Mask> pieces;
      for (std::size_t i = 0; i < inside.size(); ++i) pieces[find(i)] |= inside[i];
      std::vector<std::int64_t> betti{1};
      for (const auto& [r, piece] : pieces) {
        const auto& b = connected_strand(piece, gens, memo, shift_bits);
        betti = convolve(betti, b);
        if (betti.empty()) break;
      }
      for (std::size_t i = 1; i < betti.size(); ++i)
        if (betti[i]) out[{static_cast<int>(i), popcount(sigma)}] += betti[i];
    }
    return out;
  }

  const std::vector<std::int64_t>& connected_strand(Mask sigma, const std::vector<Mask>& gens,
                                                    std::unordered_map<Mask, std::vector<std::int64_t>>& memo,
                                                    Mask shift_bits) {
    auto it = memo.find(sigma);
    if (it != memo.end()) return it->second;
    std::vector<Mask> inside;
    for (Mask g : gens)
      if ((g & ~sigma) == 0) inside.push_back(g);
    std::vector<std::int64_t> betti;
    if (inside.size() == 1) {
      betti = {0, 1};
    } else {
      betti = compute_strand(sigma, inside, shift_bits);
    }
    return memo.emplace(sigma, std::move(betti)).first->second;
  }

  std::vector<std::int64_t> compute_strand(Mask sigma, const std::vector<Mask>& inside, Mask shift_bits) {
    ++strands_computed;
    const int m = popcount(sigma);
    std::vector<std::int64_t> betti(static_cast<std::size_t>(m + 2), 0);

    Mask ground = sigma;
    std::vector<Mask> gens = inside;
    switch (limits_.collapse_strands ? collapse(ground, gens) : Collapse::Reduced) {
      case Collapse::Contractible:
        return {0};
      case Collapse::EmptySphere:
        // K = {empty face}: reduced homology in degree -1 only
        betti.assign(2, 0);
        betti[1] = 1;
        if (keep_ && pol) {
          StrandRecord rec;
          rec.model = StrandModel::UpperKoszul;
          rec.faces = {1};
          rec.homology = {1};
          rec.multidegree = depolarize(sigma | shift_bits, *pol);
          strands.push_back(std::move(rec));
        }
        return betti;
      case Collapse::Reduced:
        break;
    }

    StrandEnumerator en(ground, gens);
    // Grow a shared budget so the cost stays proportional to the smallest model.
    const StrandModel order[] = {StrandModel::Restriction, StrandModel::Nerve, StrandModel::UpperKoszul};
    std::size_t best = 0;
    StrandModel chosen = StrandModel::Restriction;
    for (std::size_t budget = 256;; budget *= 4) {
      std::size_t cap = std::min(budget, limits_.max_strand_faces);
      for (StrandModel model : order) {
        if (!en.model_available(model)) continue;
        try {
          std::size_t c = en.count(model, best ? best - 1 : cap);
          if (!best || c < best) {
            best = c;
            chosen = model;
          }
        } catch (const BudgetExceeded&) {
        }
      }
      if (best) break;
      if (cap >= limits_.max_strand_faces)
        throw ResourceError("strand complex exceeds " + std::to_string(limits_.max_strand_faces) + " faces");
    }
    FaceLists faces = en.enumerate(chosen, best);
    StrandRecord rec = strand_homology(faces, field_);
    rec.model = chosen;
    if (!rec.euler_holds()) throw InvariantViolation("Euler characteristic check failed on a strand");

    const int ground_size = popcount(ground);
    for (std::size_t idx = 0; idx < rec.homology.size(); ++idx) {
      std::int64_t h = rec.homology[idx];
      if (!h) continue;
      int k = static_cast<int>(idx) - 1;
      // Alexander duality on the ground set for the restriction model
      int koszul_degree = chosen == StrandModel::Restriction ? ground_size - 3 - k : k;
      int i = koszul_degree + 2;
      if (i < 1 || i >= static_cast<int>(betti.size()))
        throw InvariantViolation("strand homology outside the admissible range");
      betti[i] += h;
    }
    while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
    if (keep_ && pol) {
      rec.multidegree = depolarize(sigma | shift_bits, *pol);
      strands.push_back(std::move(rec));
    }
    return betti;
  }

  enum class Collapse { Contractible, EmptySphere, Reduced };

  // The upper Koszul complex on `ground` is generated by the sets ground \ g.
  // Strong collapses: a vertex v whose generators include all generators of
  // another vertex w is dominated by w and can be deleted.
  static Collapse collapse(Mask& ground, std::vector<Mask>& gens) {
    std::vector<Mask> tmp;
    for (;;) {
      std::sort(gens.begin(), gens.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
      });
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      tmp.clear();
      for (Mask g : gens) {
        bool redundant = false;
        for (Mask k : tmp)
          if ((k & ~g) == 0) {
            redundant = true;
            break;
          }
        if (!redundant) tmp.push_back(g);
      }
      gens.swap(tmp);
      if (gens.front() == 0) return ground == 0 ? Collapse::EmptySphere : Collapse::Contractible;
      Mask covered = 0;
      for (Mask g : gens) covered |= g;
      if (ground & ~covered) return Collapse::Contractible;  // cone point
      if (gens.size() > 64) return Collapse::Reduced;

      int verts[64];
      Mask incidence[64];
      int nv = 0;
      for (Mask rest = ground; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        Mask inc = 0;
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (gens[j] >> v & 1) inc |= Mask{1} << j;
        verts[nv] = v;
        incidence[nv++] = inc;
      }
      int victim = -1;
      for (int a = 0; a < nv && victim < 0; ++a)
        for (int b = 0; b < nv; ++b)
          if (a != b && (incidence[b] & ~incidence[a]) == 0) {
            victim = verts[a];
            break;
          }
      if (victim < 0) return Collapse::Reduced;
      Mask bit = Mask{1} << victim;
      ground &= ~bit;
      for (Mask& g : gens) g &= ~bit;
    }
  }

  FieldSpec field_;
  OracleLimits limits_;
  bool keep_;
};

}  // namespace

FieldSpec FieldSpec::prime(int p) {
  FieldSpec f{p};
  f.validate();
  return f;
}

void FieldSpec::validate() const {
  if (characteristic == 0) return;
  if (characteristic < 0 || !is_prime(characteristic) || characteristic > 2147483647)
    throw PreconditionError("field characteristic must be 0 or a prime, got " + std::to_string(characteristic));
}

const char* to_string(StrandModel m) {
  switch (m) {
    case StrandModel::UpperKoszul:
      return "upper-koszul";
    case StrandModel::Nerve:
      return "nerve";
    case StrandModel::Restriction:
      return "restriction";
  }
  return "?";
}

bool StrandRecord::euler_holds() const {
  if (faces.size() != homology.size() || ranks.size() + 1 != faces.size()) return false;
  std::int64_t lhs = 0, rhs = 0;
  for (std::size_t idx = 0; idx < faces.size(); ++idx) {
    int k = static_cast<int>(idx) - 1;
    std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    lhs += sign * faces[idx];
    rhs += sign * homology[idx];
    if (homology[idx] < 0) return false;
    std::int64_t rk = k >= 0 ? ranks[static_cast<std::size_t>(k)] : 0;
    std::int64_t rk1 = static_cast<std::size_t>(k + 1) < ranks.size() ? ranks[static_cast<std::size_t>(k + 1)] : 0;
    if (homology[idx] != faces[idx] - rk - rk1) return false;
  }
  return lhs == rhs;
}

void BettiTable::add(int i, int j, std::int64_t count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
}

std::int64_t BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BettiTable::generator_count() const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == 0) s += v;
  return s;
}

int BettiTable::projective_dimension() const {
  int p = -1;
  for (const auto& [k, v] : entries_) p = std::max(p, k.first);
  return p;
}

std::optional<int> BettiTable::regularity() const {
  if (entries_.empty()) return std::nullopt;
  int r = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
  return r;
}

int BettiTable::quotient_regularity() const {
  auto r = regularity();
  return r ? *r - 1 : 0;
}

std::vector<Monomial> lcm_lattice_degrees(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_zero()) throw PreconditionError("lcm lattice of the zero ideal");
  const auto& g = ideal.generators();
  std::vector<Monomial> out(g.begin(), g.end());
  std::map<std::vector<int>, bool> seen;
  for (const auto& m : g) seen[m.exponents()] = true;
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    for (const auto& x : g) {
      Monomial y = lcm(out[idx], x);
      if (seen.emplace(y.exponents(), true).second) {
        out.push_back(std::move(y));
        if (out.size() > cap) throw ResourceError("lcm lattice exceeds cap of " + std::to_string(cap));
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

BettiComputation graded_betti_detailed(const MonomialIdeal& ideal, FieldSpec field, const OracleLimits& limits,
                                       bool keep_strands) {
  field.validate();
  BettiComputation out;
  if (ideal.is_zero()) return out;
  if (ideal.is_unit()) throw PreconditionError("graded_betti: unit ideal");
  Polarization pol = polarize(ideal);
  Engine engine(field, limits, keep_strands);
  engine.pol = &pol;
  QTable q = engine.solve(pol.gens, 0);
  for (const auto& [k, v] : q)
    if (k.first >= 1) out.table.add(k.first - 1, k.second, v);
  if (keep_strands) {
    std::sort(engine.strands.begin(), engine.strands.end(), [](const StrandRecord& a, const StrandRecord& b) {
      return canonical_less(a.multidegree, b.multidegree);
    });
    out.strands = std::move(engine.strands);
  }
  out.strands_computed = engine.strands_computed;
  out.lattice_elements = engine.lattice_elements;
  return out;
}

BettiTable graded_betti(const MonomialIdeal& ideal, FieldSpec field, const OracleLimits& limits) {
  return graded_betti_detailed(ideal, field, limits, false).table;
}

std::optional<int> regularity(const MonomialIdeal& ideal, FieldSpec field, const OracleLimits& limits) {
  return graded_betti(ideal, field, limits).regularity();
}

int quotient_regularity(const MonomialIdeal& ideal, FieldSpec field, const OracleLimits& limits) {
  return graded_betti(ideal, field, limits).quotient_regularity();
}

MonomialIdeal drop_twin_variables(const MonomialIdeal& ideal) {
  const int n = ideal.ambient_size();
  std::vector<Monomial> gens = ideal.generators();
  for (const Monomial& g : gens)
    if (!g.is_squarefree()) return ideal;
  auto swapped = [](Monomial m, int u, int v) {
    std::vector<int> e = m.exponents();
    std::swap(e[u], e[v]);
    return Monomial(std::move(e));
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> used(n, 0);
    for (const Monomial& g : gens)
      for (int v : g.support()) ++used[v];
    MonomialIdeal current(n, gens);
    for (int u = 0; u < n && !changed; ++u) {
      if (!used[u]) continue;
      for (int v = u + 1; v < n && !changed; ++v) {
        if (used[v] != used[u]) continue;
        bool ok = true;
        std::vector<Monomial> image;
        image.reserve(gens.size());
        for (const Monomial& g : gens) {
          if (g[u] && g[v]) {
            ok = false;
            break;
          }
          image.push_back(swapped(g, u, v));
        }
        if (!ok || !(MonomialIdeal(n, std::move(image)) == current)) continue;
        std::vector<Monomial> kept;
        for (const Monomial& g : gens)
          if (!g[v]) kept.push_back(g);
        gens = std::move(kept);
        changed = true;
      }
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

int quotient_regularity_reduced(const MonomialIdeal& ideal, FieldSpec field, const OracleLimits& limits) {
  return quotient_regularity(drop_twin_variables(ideal), field, limits);
}

bool table_is_linear(const BettiTable& table, int d) {
  for (const auto& [k, v] : table.entries())
    if (k.second != k.first + d) return false;
  return true;
}

bool table_has_linear_first_syzygies(const BettiTable& table, int d) {
  for (const auto& [k, v] : table.entries())
    if (k.first == 1 && k.second != d + 1) return false;
  return true;
}

bool has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field, const OracleLimits& limits) {
  if (ideal.is_zero()) throw PreconditionError("has_linear_resolution: zero ideal");
  auto d = is_equigenerated(ideal);
  if (!d) return false;
  return table_is_linear(graded_betti(ideal, field, limits), *d);
}

bool has_linear_first_syzygies(const MonomialIdeal& ideal, FieldSpec field, const OracleLimits& limits) {
  if (ideal.is_zero()) throw PreconditionError("has_linear_first_syzygies: zero ideal");
  auto d = is_equigenerated(ideal);
  if (!d) throw PreconditionError("has_linear_first_syzygies: ideal is not equigenerated");
  return table_has_linear_first_syzygies(graded_betti(ideal, field, limits), *d);
}

bool has_linear_quotients(const std::vector<Monomial>& ordered_gens) {
  if (ordered_gens.empty()) return true;
  const int n = ordered_gens.front().ambient_size();
  for (std::size_t i = 0; i < ordered_gens.size(); ++i)
    for (std::size_t j = 0; j < ordered_gens.size(); ++j) {
      if (ordered_gens[i].ambient_size() != n) throw StructuralError("has_linear_quotients: mixed ambient sizes");
      if (i != j && ordered_gens[i].divides(ordered_gens[j]))
        throw StructuralError("has_linear_quotients: " + to_string(ordered_gens[i]) + " divides " +
                              to_string(ordered_gens[j]) + ", not a minimal generating set");
    }
  for (std::size_t k = 1; k < ordered_gens.size(); ++k) {
    MonomialIdeal prefix(n, std::vector<Monomial>(ordered_gens.begin(), ordered_gens.begin() + k));
    if (!colon_by_monomial(prefix, ordered_gens[k]).is_generated_by_variables()) return false;
  }
  return true;
}

std::string betti_tsv(const BettiTable& table) {
  std::ostringstream os;
  if (table.empty()) {
    os << "(zero ideal)\n";
    return os.str();
  }
  int maxi = table.projective_dimension();
  int lo = table.entries().begin()->first.second - table.entries().begin()->first.first, hi = lo;
  for (const auto& [k, v] : table.entries()) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  os << "j-i\\i";
  for (int i = 0; i <= maxi; ++i) os << '\t' << i;
  os << '\n';
  for (int r = lo; r <= hi; ++r) {
    os << r;
    for (int i = 0; i <= maxi; ++i) {
      std::int64_t v = table.get(i, i + r);
      os << '\t';
      if (v) os << v; else os << '-';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace facetreg
