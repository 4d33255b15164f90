#pragma once

// Symmetric and supersymmetric polynomials in x_1..x_m, y_1..y_n with
// coefficients in Z[q, 1/q].

#include "motifkit/qseries.hpp"
#include "motifkit/shapes.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace motifkit {

/// Exponent vector (x_1..x_m, y_1..y_n).
using Exponents = std::vector<int>;

class SymPoly
{
public:
  SymPoly() = default;
  SymPoly(int m, int n);

  static SymPoly constant(int m, int n, QSeriesPoly const &c);
  static SymPoly x(int m, int n, int i);
  static SymPoly y(int m, int n, int j);

  int mvars() const { return m_; }
  int nvars() const { return n_; }
  std::map<Exponents, QSeriesPoly> const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_q_free() const;

  /// Adds c * monomial, dropping the term if it cancels.
  void add_term(Exponents const &e, QSeriesPoly const &c);

  SymPoly &operator+=(SymPoly const &o);
  SymPoly &operator-=(SymPoly const &o);
  SymPoly &operator*=(QSeriesPoly const &c);

  friend SymPoly operator+(SymPoly a, SymPoly const &b) { return a += b; }
  friend SymPoly operator-(SymPoly a, SymPoly const &b) { return a -= b; }
  friend SymPoly operator*(SymPoly const &a, SymPoly const &b);
  friend SymPoly operator*(SymPoly a, QSeriesPoly const &c) { return a *= c; }
  friend SymPoly operator*(QSeriesPoly const &c, SymPoly a) { return a *= c; }
  friend SymPoly operator-(SymPoly a);

  friend bool operator==(SymPoly const &, SymPoly const &) = default;

  /// Value at x_i = y_j = 1.
  QSeriesPoly specialize_ones() const;

  std::string to_string() const;

private:
  void check_compatible(SymPoly const &o) const;

  int                              m_ = 0;
  int                              n_ = 0;
  std::map<Exponents, QSeriesPoly> terms_;
};

/// SymPoly(m,n) -> SymPoly(n,m) with the x and y blocks exchanged.
SymPoly swap_roles(SymPoly const &p);

/// e_k and h_k of the x block (m variables, n = 0).
SymPoly elementary(int k, int m);
SymPoly complete(int k, int m);

/// e_k / h_k of either variable block of a SymPoly(m, n).
enum class Block
{
  X,
  Y
};
SymPoly elementary_in(Block b, int k, int m, int n);
SymPoly complete_in(Block b, int k, int m, int n);

/// Jacobi-Trudi determinant in h; zero when len(lambda) > m.
SymPoly schur(Partition const &lambda, int m);
/// Dual Jacobi-Trudi determinant in e.
SymPoly schur_dual(Partition const &lambda, int m);

/// Skew Schur via det(h_{l_i - mu_j + j - i}); throws std::invalid_argument
/// unless inner is contained in outer.
SymPoly skew_schur(Partition const &outer, Partition const &inner, int m);
SymPoly skew_schur_dual(Partition const &outer, Partition const &inner, int m);

/// c_N: coefficient of t^N in prod(1 + t y_j) / prod(1 - t x_i).
SymPoly super_c(int N, int m, int n);
/// E_N = sum_k e_k(x) h_{N-k}(y).
SymPoly super_E(int N, int m, int n);
/// S_lambda = det(c_{lambda_i + j - i}).
SymPoly super_schur(Partition const &lambda, int m, int n);

/// Border-strip super Schur via the r x r determinant in E.
SymPoly super_skew_strip(BorderStrip const &s, int m, int n);
/// Same quantity by first-row expansion.
SymPoly super_skew_strip_recursive(BorderStrip const &s, int m, int n);

/// Strip determinant with E replaced by ordinary e_k (x block only).
SymPoly skew_strip(BorderStrip const &s, int m);

struct DecompositionEntry
{
  Partition shape;
  BigInt    multiplicity;

  friend bool operator==(DecompositionEntry const &, DecompositionEntry const &) = default;
};
using DecompositionList = std::vector<DecompositionEntry>;

/// Expands a q-free polynomial, symmetric in its m x-variables (no y
/// variables), in the Schur basis.  Entries appear in decreasing
/// lexicographic order of shape.  Throws std::domain_error for non-symmetric
/// input or a negative multiplicity.
DecompositionList schur_expand(SymPoly const &p);

/// "[2^2] + [2,1^2]".
std::string to_string(DecompositionList const &d);

void to_json(nlohmann::json &j, SymPoly const &p);
void from_json(nlohmann::json const &j, SymPoly &p);

} // namespace motifkit
