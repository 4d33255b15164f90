#pragma once

// Independent reference implementations used only by the tests.

#include "motifkit/qseries.hpp"
#include "motifkit/shapes.hpp"
#include "motifkit/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using motifkit::BigInt;
using motifkit::Partition;
using motifkit::QSeriesPoly;
using motifkit::SymPoly;

// Gaussian binomial as the inversion generating function of 0/1 words with
// k ones and N-k zeros.
inline QSeriesPoly q_binomial_by_inversions(int N, int k)
{
  std::map<int, BigInt> count;
  for (unsigned w = 0; w < (1u << N); ++w) {
    if (std::popcount(w) != k) { continue; }
    int inv = 0, ones = 0;
    for (int i = 0; i < N; ++i) {
      if (w >> i & 1u) {
        ++ones;
      } else {
        inv += ones;
      }
    }
    count[inv] += 1;
  }
  QSeriesPoly p;
  for (auto const &[e, c] : count) { p += QSeriesPoly::monomial(c, e); }
  return p;
}

// Skew Schur polynomial by enumerating semistandard tableaux of outer/inner
// with entries 1..m (rows weakly increase, columns strictly increase).
inline SymPoly skew_schur_by_tableaux(Partition const &outer, Partition const &inner, int m)
{
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < outer.length(); ++r) {
    for (int c = inner[r]; c < outer[r]; ++c) { cells.emplace_back(r, c); }
  }
  std::map<std::pair<int, int>, int> fill;
  SymPoly                            result(m, 0);
  std::vector<int>                   exps(m, 0);

  std::function<void(std::size_t)> go = [&](std::size_t idx) {
    if (idx == cells.size()) {
      result.add_term(exps, QSeriesPoly(1));
      return;
    }
    auto const [r, c] = cells[idx];
    int lo = 1;
    if (auto it = fill.find({r, c - 1}); it != fill.end()) { lo = std::max(lo, it->second); }
    if (auto it = fill.find({r - 1, c}); it != fill.end()) { lo = std::max(lo, it->second + 1); }
    for (int v = lo; v <= m; ++v) {
      fill[{r, c}] = v;
      ++exps[v - 1];
      go(idx + 1);
      --exps[v - 1];
    }
    fill.erase({r, c});
  };
  go(0);
  return result;
}

inline SymPoly schur_by_tableaux(Partition const &lambda, int m) { return skew_schur_by_tableaux(lambda, Partition{}, m); }

// Coefficients of a formal product, truncated to q^0..q^{K-1}, computed with
// plain integer convolution.
inline std::vector<long long> product_one_plus_qi(int K, int power)
{
  std::vector<long long> c(K, 0);
  c[0] = 1;
  for (int rep = 0; rep < power; ++rep) {
    for (int i = 0; i < K; ++i) {
      std::vector<long long> next = c;
      for (int k = 0; k < K; ++k) {
        if (k + i < K) { next[k + i] += c[k]; }
      }
      c = next;
    }
  }
  return c;
}

} // namespace oracle
