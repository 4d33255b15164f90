#pragma once

// Truncated character q-series as large-N limits of Z_N.

#include "motifkit/qseries.hpp"

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace motifkit {

using Fraction = boost::rational<long long>;

std::string to_string(Fraction const &f); ///< "p/q", or "p" when integral

/// q^{offset} * series, with an exact rational offset.
struct ShiftedQSeries
{
  Fraction    offset;
  QSeriesPoly series;
};

/// First K coefficients (q^0 .. q^{K-1}) of prod_{i>=0} (1 + q^i).
QSeriesPoly char_su11(int K);

/// First K coefficients of prod_{i>=0} (1 + q^i)^n.
QSeriesPoly char_su1n(int K, int n);

/// sum_{b>=0} q^{b(b-1)/2} / (q;q)_b == prod_{i=0}^{K} (1 + q^i) modulo
/// q^{K+1}.
bool fermionic_sum_identity(int K);

/// Number of leading coefficients (from q^0) on which two series agree,
/// capped at K.
int agreeing_prefix(QSeriesPoly const &a, QSeriesPoly const &b, int K);

struct StabilizationReport
{
  int                         m = 0;
  int                         j = 0;
  int                         K = 0;
  std::vector<int>            N_list;
  std::vector<ShiftedQSeries> series;        ///< per N, truncated to K terms
  std::vector<int>            stable_prefix; ///< per consecutive pair of N
};

/// q^{(m-1)N^2/(2m)} Z_N^{(m|0)}(1/q) for each N in N_list (all N = j mod m,
/// increasing), with the leading-coefficient agreement between neighbours.
StabilizationReport char_sum_limit(int m, int j, int K, std::vector<int> const &N_list);

/// The unreduced shifted reversed series for a single N.
ShiftedQSeries shifted_reversed_partition_function(int m, int N);

} // namespace motifkit
