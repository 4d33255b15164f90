#include "motifkit/srs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace motifkit {

SrsContext::SrsContext(int m_, int n_, int N_)
  : m(m_)
  , n(n_)
  , N(N_)
{
  if (m < 1) { throw std::invalid_argument("SrsContext: m >= 1 required"); }
  if (n < 0) { throw std::invalid_argument("SrsContext: n >= 0 required"); }
  if (N < 0) { throw std::invalid_argument("SrsContext: N >= 0 required"); }
}

namespace {

// Weight attached to one composition (a | b) of N.
QSeriesPoly composition_weight(std::vector<int> const &parts, int m)
{
  int fermion_power = 0;
  for (std::size_t j = m; j < parts.size(); ++j) { fermion_power += parts[j] * (parts[j] - 1) / 2; }
  return q_multinomial(parts).shifted(fermion_power);
}

// (-1)^{k-1} (q;q)_{N-1} / (q;q)_{N-k} as an explicit product.
QSeriesPoly signed_ratio(int N, int k)
{
  QSeriesPoly r = q_factor_range(N - k + 1, N - 1);
  return k % 2 == 1 ? r : -r;
}

} // namespace

SymPoly srs_direct(SrsContext const &ctx)
{
  SymPoly h(ctx.m, ctx.n);
  for (auto const &parts : compositions(ctx.N, ctx.m + ctx.n)) { h.add_term(parts, composition_weight(parts, ctx.m)); }
  return h;
}

std::vector<SymPoly> srs_recur1_sequence(SrsContext const &ctx)
{
  int const m = ctx.m, n = ctx.n, K = std::max(m, n);
  std::vector<SymPoly> ex, ey;
  for (int k = 0; k <= K; ++k) {
    ex.push_back(elementary_in(Block::X, k, m, n));
    ey.push_back(elementary_in(Block::Y, k, m, n));
  }
  std::vector<SymPoly> H{SymPoly::constant(m, n, 1)};
  for (int N = 1; N <= ctx.N; ++N) {
    SymPoly acc(m, n);
    for (int k = 1; k <= std::min(K, N); ++k) {
      // e_k(x) - (-1)^k q^{N-k} e_k(y)
      QSeriesPoly const ycoef = QSeriesPoly::monomial(k % 2 == 0 ? -1 : 1, N - k);
      SymPoly const     factor = ex[k] + ey[k] * ycoef;
      acc += (factor * H[N - k]) * signed_ratio(N, k);
    }
    H.push_back(std::move(acc));
  }
  return H;
}

SymPoly srs_recur1(SrsContext const &ctx) { return srs_recur1_sequence(ctx).back(); }

std::vector<SymPoly> srs_recur2_sequence(SrsContext const &ctx)
{
  int const            m = ctx.m, n = ctx.n;
  std::vector<SymPoly> E;
  for (int k = 0; k <= ctx.N; ++k) { E.push_back(super_E(k, m, n)); }
  std::vector<SymPoly> H{SymPoly::constant(m, n, 1)};
  for (int N = 1; N <= ctx.N; ++N) {
    SymPoly acc(m, n);
    for (int k = 1; k <= N; ++k) { acc += (E[k] * H[N - k]) * signed_ratio(N, k); }
    H.push_back(std::move(acc));
  }
  return H;
}

SymPoly srs_recur2(SrsContext const &ctx) { return srs_recur2_sequence(ctx).back(); }

int strip_q_exponent(BorderStrip const &s)
{
  int const N = s.boxes();
  int       partial = 0, total = 0;
  for (int c : s.cols) {
    partial += c;
    total += partial;
  }
  return N * (N + 1) / 2 - total;
}

SymPoly srs_strip_sum(SrsContext const &ctx)
{
  if (ctx.N < 1) { throw std::invalid_argument("srs_strip_sum: N >= 1 required"); }
  int const m = ctx.m, n = ctx.n;
  std::vector<SymPoly> E;
  for (int k = 0; k <= ctx.N; ++k) { E.push_back(super_E(k, m, n)); }

  // Memoized first-row expansion shared by all strips: S_<> = 1 and
  // S_<m_1..m_p> = sum_i (-1)^{i+1} E_{m_p + ... + m_{p-i+1}} S_<m_1..m_{p-i}>.
  std::map<std::vector<int>, SymPoly> memo;
  memo.emplace(std::vector<int>{}, SymPoly::constant(m, n, 1));
  auto strip_poly = [&](auto &self, std::vector<int> const &cols) -> SymPoly const & {
    if (auto it = memo.find(cols); it != memo.end()) { return it->second; }
    SymPoly acc(m, n);
    int     sum = 0;
    int const p = static_cast<int>(cols.size());
    for (int i = 1; i <= p; ++i) {
      sum += cols[p - i];
      std::vector<int> prefix(cols.begin(), cols.begin() + (p - i));
      SymPoly          t = E[sum] * self(self, prefix);
      if (i % 2 == 1) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return memo.emplace(cols, std::move(acc)).first->second;
  };

  SymPoly F(m, n);
  for (auto const &s : enumerate_strips(ctx.N)) {
    F += strip_poly(strip_poly, s.cols) * QSeriesPoly::monomial(1, strip_q_exponent(s));
  }
  return F;
}

QSeriesPoly partition_function(SrsContext const &ctx)
{
  QSeriesPoly z;
  for (auto const &parts : compositions(ctx.N, ctx.m + ctx.n)) { z += composition_weight(parts, ctx.m); }
  return z;
}

bool duality_check(SrsContext const &ctx)
{
  if (ctx.n < 1) { throw std::invalid_argument("duality_check: requires n >= 1"); }
  QSeriesPoly const lhs = partition_function(ctx);
  QSeriesPoly const dual = partition_function(SrsContext(ctx.n, ctx.m, ctx.N));
  return lhs == reciprocal_transform(dual, ctx.N * (ctx.N - 1) / 2);
}

SymPoly rogers_szego_classical(int m, int N)
{
  if (m < 1 || N < 0) { throw std::invalid_argument("rogers_szego_classical: m >= 1, N >= 0"); }
  std::vector<SymPoly> H{SymPoly::constant(m, 0, 1)};
  for (int d = 1; d <= N; ++d) {
    SymPoly acc(m, 0);
    for (int k = 1; k <= std::min(m, d); ++k) { acc += (elementary(k, m) * H[d - k]) * signed_ratio(d, k); }
    H.push_back(std::move(acc));
  }
  return H.back();
}

} // namespace motifkit
