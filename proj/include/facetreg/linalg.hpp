#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace facetreg {

// Sparse row: (column, small integer coefficient), columns strictly increasing.
using SparseRow = std::vector<std::pair<int, int>>;

// Rank over GF(p). p must be prime and < 2^31.
std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::uint32_t p);

// Exact rank over the rationals (fraction-free integer elimination, falling
// back to GMP integers on 64-bit overflow).
std::size_t rank_rational(const std::vector<SparseRow>& rows);

bool is_prime(std::int64_t n);

}  // namespace facetreg
