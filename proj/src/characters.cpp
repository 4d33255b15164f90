#include "motifkit/characters.hpp"

#include "motifkit/srs.hpp"

#include <stdexcept>

namespace motifkit {

std::string to_string(Fraction const &f)
{
  if (f.denominator() == 1) { return std::to_string(f.numerator()); }
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

QSeriesPoly char_su11(int K)
{
  if (K < 1) { throw std::invalid_argument("char_su11: K >= 1 required"); }
  QSeriesPoly p = 2; // i = 0 factor
  for (int i = 1; i < K; ++i) { p = truncate(p * (QSeriesPoly(1) + QSeriesPoly::monomial(1, i)), K); }
  return p;
}

QSeriesPoly char_su1n(int K, int n)
{
  if (n < 1) { throw std::invalid_argument("char_su1n: n >= 1 required"); }
  QSeriesPoly const base = char_su11(K);
  QSeriesPoly       p = 1;
  for (int i = 0; i < n; ++i) { p = truncate(p * base, K); }
  return p;
}

bool fermionic_sum_identity(int K)
{
  if (K < 0) { throw std::invalid_argument("fermionic_sum_identity: K >= 0 required"); }
  int const   order = K + 1;
  QSeriesPoly sum;
  for (int b = 0; b * (b - 1) / 2 < order; ++b) {
    sum += series_inverse(q_pochhammer(b), order).shifted(b * (b - 1) / 2);
  }
  QSeriesPoly prod = 1;
  for (int i = 0; i <= K; ++i) { prod = truncate(prod * (QSeriesPoly(1) + QSeriesPoly::monomial(1, i)), order); }
  return truncate(sum, order) == prod;
}

int agreeing_prefix(QSeriesPoly const &a, QSeriesPoly const &b, int K)
{
  int k = 0;
  while (k < K && a.coeff(k) == b.coeff(k)) { ++k; }
  return k;
}

ShiftedQSeries shifted_reversed_partition_function(int m, int N)
{
  QSeriesPoly const z = partition_function(SrsContext(m, 0, N));
  Fraction const    prefactor(static_cast<long long>(m - 1) * N * N, 2LL * m);
  // q^{prefactor} z(1/q) = q^{prefactor - deg} * (q^{deg} z(1/q)).
  return {prefactor - Fraction(z.high()), reciprocal_transform(z, z.high())};
}

StabilizationReport char_sum_limit(int m, int j, int K, std::vector<int> const &N_list)
{
  if (m < 2) { throw std::invalid_argument("char_sum_limit: m >= 2 required"); }
  if (j < 0 || j >= m) { throw std::invalid_argument("char_sum_limit: 0 <= j < m required"); }
  if (K < 1) { throw std::invalid_argument("char_sum_limit: K >= 1 required"); }
  for (std::size_t i = 0; i < N_list.size(); ++i) {
    if (N_list[i] < 0 || N_list[i] % m != j) { throw std::invalid_argument("char_sum_limit: N must be = j mod m"); }
    if (i > 0 && N_list[i] <= N_list[i - 1]) { throw std::invalid_argument("char_sum_limit: N_list must increase"); }
  }
  StabilizationReport rep;
  rep.m = m;
  rep.j = j;
  rep.K = K;
  rep.N_list = N_list;
  for (int N : N_list) {
    auto s = shifted_reversed_partition_function(m, N);
    s.series = truncate(s.series, K);
    rep.series.push_back(std::move(s));
  }
  for (std::size_t i = 1; i < rep.series.size(); ++i) {
    Fraction const gap = rep.series[i].offset - rep.series[i - 1].offset;
    if (gap.denominator() != 1) {
      rep.stable_prefix.push_back(0);
      continue;
    }
    // Align both on the earlier offset.
    QSeriesPoly const later = rep.series[i].series.shifted(static_cast<int>(gap.numerator()));
    rep.stable_prefix.push_back(agreeing_prefix(rep.series[i - 1].series, later, K));
  }
  return rep;
}

} // namespace motifkit
