#pragma once

// Exact univariate (Laurent) polynomials in q with arbitrary-precision
// integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace motifkit {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q, possibly with negative powers.  Stored as the lowest
/// power `offset` plus a dense run of coefficients.  Always canonical: the
/// first and last stored coefficients are nonzero, and zero is the empty run
/// at offset 0.
class QSeriesPoly
{
public:
  QSeriesPoly() = default;
  QSeriesPoly(long long constant);                       // NOLINT: implicit on purpose
  QSeriesPoly(BigInt const &constant);                   // NOLINT
  QSeriesPoly(int offset, std::vector<BigInt> coeffs);

  static QSeriesPoly monomial(BigInt const &coeff, int power);
  static QSeriesPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (offset_ == 0 && coeffs_.size() == 1); }

  // Lowest / highest power with nonzero coefficient.  Zero polynomial: 0, -1.
  int low() const { return offset_; }
  int high() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
  int offset() const { return offset_; }
  std::vector<BigInt> const &coeffs() const { return coeffs_; }

  BigInt coeff(int power) const;
  BigInt eval_at_one() const;
  double eval(double q) const;

  QSeriesPoly &operator+=(QSeriesPoly const &o);
  QSeriesPoly &operator-=(QSeriesPoly const &o);
  QSeriesPoly &operator*=(QSeriesPoly const &o);
  QSeriesPoly &operator*=(BigInt const &c);

  friend QSeriesPoly operator+(QSeriesPoly a, QSeriesPoly const &b) { return a += b; }
  friend QSeriesPoly operator-(QSeriesPoly a, QSeriesPoly const &b) { return a -= b; }
  friend QSeriesPoly operator*(QSeriesPoly const &a, QSeriesPoly const &b);
  friend QSeriesPoly operator-(QSeriesPoly a);

  friend bool operator==(QSeriesPoly const &, QSeriesPoly const &) = default;

  /// Multiply by q^k.
  QSeriesPoly shifted(int k) const;

  std::string to_string() const;

private:
  void normalize();

  int                 offset_ = 0;
  std::vector<BigInt> coeffs_;
};

/// (q;q)_k = prod_{i=1}^{k} (1 - q^i).
QSeriesPoly q_pochhammer(int k);

/// prod_{j=from}^{to} (1 - q^j); 1 when the range is empty.
QSeriesPoly q_factor_range(int from, int to);

/// Gaussian binomial (q;q)_N / ((q;q)_k (q;q)_{N-k}), by exact division.
QSeriesPoly q_binomial(int N, int k);

/// (q;q)_N / prod_i (q;q)_{parts_i} for parts summing to N.
QSeriesPoly q_multinomial(std::vector<int> const &parts);

/// Exact quotient; throws std::logic_error if the remainder is nonzero.
QSeriesPoly exact_divide(QSeriesPoly const &num, QSeriesPoly const &den);

/// q^shift * p(1/q).
QSeriesPoly reciprocal_transform(QSeriesPoly const &p, int shift);

/// Drop every power >= order.
QSeriesPoly truncate(QSeriesPoly const &p, int order);

/// Power-series inverse modulo q^order.  p must be ordinary with constant
/// term +-1.
QSeriesPoly series_inverse(QSeriesPoly const &p, int order);

/// Checks 1/(t;q)_inf = sum_N t^N/(q;q)_N on every monomial t^a q^b with
/// a + b <= K.
bool truncated_euler_check(int K);

void to_json(nlohmann::json &j, QSeriesPoly const &p);
void from_json(nlohmann::json const &j, QSeriesPoly &p);

} // namespace motifkit
