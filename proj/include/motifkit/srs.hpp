#pragma once

// Supersymmetric Rogers-Szego polynomials H_N^{(m|n)}(x, y; q) and the spin
// chain partition function Z_N = H_N(1, 1; q).

#include "motifkit/qseries.hpp"
#include "motifkit/symmetric.hpp"

#include <vector>

namespace motifkit {

/// Species counts and degree.  Throws std::invalid_argument unless m >= 1,
/// n >= 0, N >= 0.
struct SrsContext
{
  int m;
  int n;
  int N;

  SrsContext(int m_, int n_, int N_);
};

/// Composition sum with the all-positive q-power form
/// (q;q)_N / (prod (q;q)_{a_i} prod (q;q)_{b_j}) q^{sum b_j (b_j - 1)/2}.
SymPoly srs_direct(SrsContext const &ctx);

/// Short recursion through e_k(x), e_k(y) over max(m, n) previous terms.
SymPoly srs_recur1(SrsContext const &ctx);
/// H_0..H_N by the short recursion.
std::vector<SymPoly> srs_recur1_sequence(SrsContext const &ctx);

/// Long recursion through the super elementary E_k over all lower degrees.
SymPoly srs_recur2(SrsContext const &ctx);
std::vector<SymPoly> srs_recur2_sequence(SrsContext const &ctx);

/// Sum over the 2^{N-1} border strips with N boxes of
/// q^{N(N+1)/2 - sum_i (m_1 + ... + m_i)} S_<m_1..m_r>.  Requires N >= 1.
SymPoly srs_strip_sum(SrsContext const &ctx);

/// q-exponent attached to a strip in the strip sum.
int strip_q_exponent(BorderStrip const &s);

/// Z_N^{(m|n)}(q), i.e. srs_direct at x = y = 1 (summed without building
/// the monomials).
QSeriesPoly partition_function(SrsContext const &ctx);

/// Z_N^{(m|n)}(q) == q^{N(N-1)/2} Z_N^{(n|m)}(1/q).  Throws
/// std::invalid_argument when n == 0.
bool duality_check(SrsContext const &ctx);

/// The classical n = 0 recursion
/// H_N = sum_k (-1)^{k-1} [(q;q)_{N-1}/(q;q)_{N-k}] e_k(x) H_{N-k}.
SymPoly rogers_szego_classical(int m, int N);

} // namespace motifkit
