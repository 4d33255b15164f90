#include "motifkit/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace motifkit {

QSeriesPoly::QSeriesPoly(long long constant)
  : QSeriesPoly(0, {BigInt(constant)})
{
}

QSeriesPoly::QSeriesPoly(BigInt const &constant)
  : QSeriesPoly(0, {constant})
{
}

QSeriesPoly::QSeriesPoly(int offset, std::vector<BigInt> coeffs)
  : offset_(offset)
  , coeffs_(std::move(coeffs))
{
  normalize();
}

QSeriesPoly QSeriesPoly::monomial(BigInt const &coeff, int power)
{
  return QSeriesPoly(power, {coeff});
}

void QSeriesPoly::normalize()
{
  while (!coeffs_.empty() && coeffs_.back() == 0) { coeffs_.pop_back(); }
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](BigInt const &c) { return c != 0; });
  offset_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) { offset_ = 0; }
}

BigInt QSeriesPoly::coeff(int power) const
{
  if (is_zero() || power < low() || power > high()) { return 0; }
  return coeffs_[power - offset_];
}

BigInt QSeriesPoly::eval_at_one() const
{
  BigInt s = 0;
  for (auto const &c : coeffs_) { s += c; }
  return s;
}

double QSeriesPoly::eval(double q) const
{
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + it->convert_to<double>();
  }
  return acc * std::pow(q, offset_);
}

QSeriesPoly &QSeriesPoly::operator+=(QSeriesPoly const &o)
{
  if (o.is_zero()) { return *this; }
  if (is_zero()) { return *this = o; }
  int const lo = std::min(low(), o.low());
  int const hi = std::max(high(), o.high());
  std::vector<BigInt> out(hi - lo + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) { out[offset_ - lo + i] += coeffs_[i]; }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) { out[o.offset_ - lo + i] += o.coeffs_[i]; }
  offset_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QSeriesPoly &QSeriesPoly::operator-=(QSeriesPoly const &o) { return *this += -o; }

QSeriesPoly operator-(QSeriesPoly a)
{
  for (auto &c : a.coeffs_) { c = -c; }
  return a;
}

QSeriesPoly operator*(QSeriesPoly const &a, QSeriesPoly const &b)
{
  if (a.is_zero() || b.is_zero()) { return {}; }
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) { out[i + j] += a.coeffs_[i] * b.coeffs_[j]; }
  }
  return QSeriesPoly(a.offset_ + b.offset_, std::move(out));
}

QSeriesPoly &QSeriesPoly::operator*=(QSeriesPoly const &o) { return *this = *this * o; }

QSeriesPoly &QSeriesPoly::operator*=(BigInt const &c)
{
  if (c == 0) { return *this = QSeriesPoly{}; }
  for (auto &x : coeffs_) { x *= c; }
  return *this;
}

QSeriesPoly QSeriesPoly::shifted(int k) const
{
  if (is_zero()) { return {}; }
  QSeriesPoly r = *this;
  r.offset_ += k;
  return r;
}

std::string QSeriesPoly::to_string() const
{
  if (is_zero()) { return "0"; }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt const &c = coeffs_[i];
    if (c == 0) { continue; }
    int const p = offset_ + static_cast<int>(i);
    BigInt const mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) { os << "-"; }
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (p == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) { os << mag << "*"; }
    os << "q";
    if (p != 1) { os << "^" << p; }
  }
  return os.str();
}

QSeriesPoly q_factor_range(int from, int to)
{
  QSeriesPoly r = 1;
  for (int j = std::max(from, 1); j <= to; ++j) { r *= QSeriesPoly(1) - QSeriesPoly::monomial(1, j); }
  return r;
}

QSeriesPoly q_pochhammer(int k)
{
  if (k < 0) { throw std::invalid_argument("q_pochhammer: negative index"); }
  return q_factor_range(1, k);
}

QSeriesPoly exact_divide(QSeriesPoly const &num, QSeriesPoly const &den)
{
  if (den.is_zero()) { throw std::domain_error("exact_divide: division by zero"); }
  if (num.is_zero()) { return {}; }
  // Long division from the low end; den's lowest coefficient must divide.
  std::vector<BigInt> rem = num.coeffs();
  std::vector<BigInt> const &d = den.coeffs();
  BigInt const &lead = d.front();
  if (rem.size() < d.size()) { throw std::logic_error("exact_divide: nonzero remainder"); }
  std::size_t const qlen = rem.size() - d.size() + 1;
  std::vector<BigInt> quot(qlen);
  for (std::size_t i = 0; i < qlen; ++i) {
    if (rem[i] == 0) { continue; }
    if (rem[i] % lead != 0) { throw std::logic_error("exact_divide: non-integral quotient"); }
    BigInt const f = rem[i] / lead;
    quot[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) { rem[i + j] -= f * d[j]; }
  }
  for (auto const &r : rem) {
    if (r != 0) { throw std::logic_error("exact_divide: nonzero remainder"); }
  }
  return QSeriesPoly(num.offset() - den.offset(), std::move(quot));
}

QSeriesPoly q_binomial(int N, int k)
{
  if (N < 0 || k < 0 || k > N) { throw std::invalid_argument("q_binomial: need 0 <= k <= N"); }
  return exact_divide(q_pochhammer(N), q_pochhammer(k) * q_pochhammer(N - k));
}

QSeriesPoly q_multinomial(std::vector<int> const &parts)
{
  int rest = 0;
  for (int p : parts) {
    if (p < 0) { throw std::invalid_argument("q_multinomial: negative part"); }
    rest += p;
  }
  QSeriesPoly r = 1;
  for (int p : parts) {
    r *= q_binomial(rest, p);
    rest -= p;
  }
  return r;
}

QSeriesPoly reciprocal_transform(QSeriesPoly const &p, int shift)
{
  if (p.is_zero()) { return {}; }
  std::vector<BigInt> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return QSeriesPoly(shift - p.high(), std::move(rev));
}

QSeriesPoly truncate(QSeriesPoly const &p, int order)
{
  if (p.is_zero() || p.low() >= order) { return {}; }
  std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().begin() + std::min<int>(order - p.low(), p.coeffs().size()));
  return QSeriesPoly(p.low(), std::move(c));
}

QSeriesPoly series_inverse(QSeriesPoly const &p, int order)
{
  if (p.low() < 0) { throw std::invalid_argument("series_inverse: Laurent input"); }
  BigInt const c0 = p.coeff(0);
  if (c0 != 1 && c0 != -1) { throw std::invalid_argument("series_inverse: constant term must be +-1"); }
  std::vector<BigInt> inv(std::max(order, 0));
  for (int k = 0; k < order; ++k) {
    BigInt acc = k == 0 ? BigInt(1) : BigInt(0);
    for (int i = 1; i <= k; ++i) { acc -= p.coeff(i) * inv[k - i]; }
    inv[k] = acc * c0; // c0 is its own inverse
  }
  return QSeriesPoly(0, std::move(inv));
}

namespace {

// Bivariate series in (t, q) truncated to total degree <= K.
struct TQSeries
{
  int                              K;
  std::vector<std::vector<BigInt>> c; // c[a][b] : t^a q^b

  explicit TQSeries(int K_)
    : K(K_)
    , c(K_ + 1, std::vector<BigInt>(K_ + 1))
  {
  }

  TQSeries operator*(TQSeries const &o) const
  {
    TQSeries r(K);
    for (int a = 0; a <= K; ++a) {
      for (int b = 0; a + b <= K; ++b) {
        if (c[a][b] == 0) { continue; }
        for (int a2 = 0; a + a2 <= K; ++a2) {
          for (int b2 = 0; a + a2 + b + b2 <= K; ++b2) { r.c[a + a2][b + b2] += c[a][b] * o.c[a2][b2]; }
        }
      }
    }
    return r;
  }
};

} // namespace

bool truncated_euler_check(int K)
{
  if (K < 1) { throw std::invalid_argument("truncated_euler_check: K >= 1"); }
  // Left: prod_{i>=0} 1/(1 - t q^i) = prod_i sum_k t^k q^{ik}; factors with
  // i > K only contribute beyond total degree K.
  TQSeries lhs(K);
  lhs.c[0][0] = 1;
  for (int i = 0; i <= K; ++i) {
    TQSeries f(K);
    for (int k = 0; k + i * k <= K; ++k) { f.c[k][i * k] = 1; }
    lhs = lhs * f;
  }
  // Right: sum_N t^N / (q;q)_N.
  TQSeries rhs(K);
  for (int N = 0; N <= K; ++N) {
    QSeriesPoly const inv = series_inverse(q_pochhammer(N), K - N + 1);
    for (int b = 0; N + b <= K; ++b) { rhs.c[N][b] += inv.coeff(b); }
  }
  return lhs.c == rhs.c;
}

void to_json(nlohmann::json &j, QSeriesPoly const &p)
{
  auto arr = nlohmann::json::array();
  for (auto const &c : p.coeffs()) { arr.push_back(c.str()); }
  j = nlohmann::json{{"offset", p.offset()}, {"coeffs", arr}};
}

void from_json(nlohmann::json const &j, QSeriesPoly &p)
{
  std::vector<BigInt> c;
  for (auto const &s : j.at("coeffs")) { c.emplace_back(s.get<std::string>()); }
  p = QSeriesPoly(j.at("offset").get<int>(), std::move(c));
}

} // namespace motifkit
