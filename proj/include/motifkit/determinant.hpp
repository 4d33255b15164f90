#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace motifkit {

template <typename Ring>
using Matrix = std::vector<std::vector<Ring>>;

/// Exact determinant over a commutative ring, by Laplace expansion with
/// memoization over the set of used columns: O(r 2^r) ring products, no
/// division.  `zero` and `one` fix the parent ring (e.g. variable counts).
/// Entries for which `is_zero` holds are skipped.
template <typename Ring, typename IsZero>
Ring determinant(Matrix<Ring> const &a, Ring const &zero, Ring const &one, IsZero is_zero)
{
  std::size_t const r = a.size();
  if (r == 0) { return one; }
  for (auto const &row : a) {
    if (row.size() != r) { throw std::invalid_argument("determinant: matrix is not square"); }
  }
  if (r > 24) { throw std::invalid_argument("determinant: matrix too large for subset expansion"); }

  std::vector<Ring> dp(std::size_t{1} << r, zero);
  std::vector<char> live(dp.size(), 0);
  dp[0] = one;
  live[0] = 1;
  // Row i consumes masks of popcount i.
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (!live[mask]) { continue; }
    std::size_t const row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == r) { continue; }
    for (std::size_t c = 0; c < r; ++c) {
      if (mask & (std::size_t{1} << c)) { continue; }
      if (is_zero(a[row][c])) { continue; }
      // Inversions gained: used columns to the right of c.
      bool const odd = __builtin_popcountll(mask >> (c + 1)) & 1;
      Ring term = dp[mask] * a[row][c];
      std::size_t const next = mask | (std::size_t{1} << c);
      if (odd) {
        dp[next] -= term;
      } else {
        dp[next] += term;
      }
      live[next] = 1;
    }
  }
  return dp.back();
}

} // namespace motifkit
