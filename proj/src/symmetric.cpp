#include "motifkit/symmetric.hpp"

#include "motifkit/determinant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace motifkit {

SymPoly::SymPoly(int m, int n)
  : m_(m)
  , n_(n)
{
  if (m < 0 || n < 0) { throw std::invalid_argument("SymPoly: negative variable count"); }
}

SymPoly SymPoly::constant(int m, int n, QSeriesPoly const &c)
{
  SymPoly p(m, n);
  p.add_term(Exponents(m + n, 0), c);
  return p;
}

SymPoly SymPoly::x(int m, int n, int i)
{
  if (i < 0 || i >= m) { throw std::out_of_range("SymPoly::x index"); }
  SymPoly  p(m, n);
  Exponents e(m + n, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

SymPoly SymPoly::y(int m, int n, int j)
{
  if (j < 0 || j >= n) { throw std::out_of_range("SymPoly::y index"); }
  SymPoly  p(m, n);
  Exponents e(m + n, 0);
  e[m + j] = 1;
  p.add_term(e, 1);
  return p;
}

bool SymPoly::is_q_free() const
{
  return std::all_of(terms_.begin(), terms_.end(), [](auto const &t) { return t.second.is_constant(); });
}

void SymPoly::add_term(Exponents const &e, QSeriesPoly const &c)
{
  if (c.is_zero()) { return; }
  if (static_cast<int>(e.size()) != m_ + n_) { throw std::invalid_argument("SymPoly: exponent length mismatch"); }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) { terms_.erase(it); }
  }
}

void SymPoly::check_compatible(SymPoly const &o) const
{
  if (m_ != o.m_ || n_ != o.n_) { throw std::invalid_argument("SymPoly: mismatched variable sets"); }
}

SymPoly &SymPoly::operator+=(SymPoly const &o)
{
  check_compatible(o);
  for (auto const &[e, c] : o.terms_) { add_term(e, c); }
  return *this;
}

SymPoly &SymPoly::operator-=(SymPoly const &o)
{
  check_compatible(o);
  for (auto const &[e, c] : o.terms_) { add_term(e, -c); }
  return *this;
}

SymPoly &SymPoly::operator*=(QSeriesPoly const &c)
{
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, v] : terms_) { v *= c; }
  return *this;
}

SymPoly operator-(SymPoly a)
{
  for (auto &[e, v] : a.terms_) { v = -v; }
  return a;
}

SymPoly operator*(SymPoly const &a, SymPoly const &b)
{
  a.check_compatible(b);
  SymPoly   r(a.m_, a.n_);
  Exponents e(a.m_ + a.n_);
  for (auto const &[ea, ca] : a.terms_) {
    for (auto const &[eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) { e[i] = ea[i] + eb[i]; }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

QSeriesPoly SymPoly::specialize_ones() const
{
  QSeriesPoly s;
  for (auto const &[e, c] : terms_) { s += c; }
  return s;
}

std::string SymPoly::to_string() const
{
  if (is_zero()) { return "0"; }
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto const &[e, c] = *it;
    if (!first) { os << " + "; }
    first = false;
    bool const unit = c == QSeriesPoly(1);
    bool any_var = false;
    if (!unit) { os << (c.coeffs().size() == 1 && c.offset() == 0 ? c.to_string() : "(" + c.to_string() + ")"); }
    for (int i = 0; i < m_ + n_; ++i) {
      if (e[i] == 0) { continue; }
      if (!unit || any_var) { os << "*"; }
      any_var = true;
      os << (i < m_ ? "x" : "y") << (i < m_ ? i + 1 : i - m_ + 1);
      if (e[i] > 1) { os << "^" << e[i]; }
    }
    if (unit && !any_var) { os << "1"; }
  }
  return os.str();
}

SymPoly swap_roles(SymPoly const &p)
{
  int const m = p.mvars(), n = p.nvars();
  SymPoly   r(n, m);
  for (auto const &[e, c] : p.terms()) {
    Exponents f(e.begin() + m, e.end());
    f.insert(f.end(), e.begin(), e.begin() + m);
    r.add_term(f, c);
  }
  return r;
}

namespace {

bool sym_is_zero(SymPoly const &p) { return p.is_zero(); }

SymPoly sym_det(Matrix<SymPoly> const &a, int m, int n)
{
  return determinant(a, SymPoly(m, n), SymPoly::constant(m, n, 1), sym_is_zero);
}

// Monomials in a block of `count` variables starting at `first`.
void enumerate_block(int k, int count, bool squarefree, auto &&emit)
{
  std::vector<int> e(count, 0);
  auto rec = [&](auto &self, int idx, int rest) -> void {
    if (idx == count) {
      if (rest == 0) { emit(e); }
      return;
    }
    int const cap = squarefree ? std::min(rest, 1) : rest;
    for (int v = cap; v >= 0; --v) {
      e[idx] = v;
      self(self, idx + 1, rest - v);
    }
    e[idx] = 0;
  };
  rec(rec, 0, k);
}

SymPoly block_poly(Block b, int k, int m, int n, bool squarefree)
{
  if (m < 0 || n < 0) { throw std::invalid_argument("negative variable count"); }
  SymPoly r(m, n);
  if (k < 0) { return r; }
  int const first = b == Block::X ? 0 : m;
  int const count = b == Block::X ? m : n;
  if (k == 0) { return SymPoly::constant(m, n, 1); }
  enumerate_block(k, count, squarefree, [&](std::vector<int> const &blk) {
    Exponents e(m + n, 0);
    std::copy(blk.begin(), blk.end(), e.begin() + first);
    r.add_term(e, 1);
  });
  return r;
}

} // namespace

SymPoly elementary_in(Block b, int k, int m, int n) { return block_poly(b, k, m, n, true); }
SymPoly complete_in(Block b, int k, int m, int n) { return block_poly(b, k, m, n, false); }

SymPoly elementary(int k, int m) { return elementary_in(Block::X, k, m, 0); }
SymPoly complete(int k, int m) { return complete_in(Block::X, k, m, 0); }

SymPoly skew_schur(Partition const &outer, Partition const &inner, int m)
{
  if (!outer.contains(inner)) { throw std::invalid_argument("skew_schur: inner not contained in outer"); }
  int const        l = outer.length();
  Matrix<SymPoly> a(l, std::vector<SymPoly>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) { a[i][j] = complete(outer[i] - inner[j] + j - i, m); }
  }
  return sym_det(a, m, 0);
}

SymPoly skew_schur_dual(Partition const &outer, Partition const &inner, int m)
{
  if (!outer.contains(inner)) { throw std::invalid_argument("skew_schur_dual: inner not contained in outer"); }
  Partition const  lt = conjugate(outer), mt = conjugate(inner);
  int const        l = lt.length();
  Matrix<SymPoly> a(l, std::vector<SymPoly>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) { a[i][j] = elementary(lt[i] - mt[j] + j - i, m); }
  }
  return sym_det(a, m, 0);
}

SymPoly schur(Partition const &lambda, int m)
{
  if (lambda.length() > m) { return SymPoly(m, 0); }
  return skew_schur(lambda, Partition{}, m);
}

SymPoly schur_dual(Partition const &lambda, int m) { return skew_schur_dual(lambda, Partition{}, m); }

SymPoly super_c(int N, int m, int n)
{
  SymPoly r(m, n);
  if (N < 0) { return r; }
  for (int j = 0; j <= std::min(N, n); ++j) { r += elementary_in(Block::Y, j, m, n) * complete_in(Block::X, N - j, m, n); }
  return r;
}

SymPoly super_E(int N, int m, int n)
{
  SymPoly r(m, n);
  if (N < 0) { return r; }
  for (int k = 0; k <= std::min(N, m); ++k) { r += elementary_in(Block::X, k, m, n) * complete_in(Block::Y, N - k, m, n); }
  return r;
}

SymPoly super_schur(Partition const &lambda, int m, int n)
{
  int const        l = lambda.length();
  Matrix<SymPoly> a(l, std::vector<SymPoly>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) { a[i][j] = super_c(lambda[i] + j - i, m, n); }
  }
  return sym_det(a, m, n);
}

namespace {

void check_strip(BorderStrip const &s)
{
  if (s.cols.empty()) { throw std::invalid_argument("border strip needs at least one column"); }
  for (int c : s.cols) {
    if (c < 1) { throw std::invalid_argument("border strip columns must be positive"); }
  }
}

// Row i starts at column m_{r-i}; entry (i, j >= i) is E of the column sum
// m_{r-j} + ... + m_{r-i}; ones on the subdiagonal.
template <typename ElemFn>
SymPoly strip_det(BorderStrip const &s, int m, int n, ElemFn elem)
{
  check_strip(s);
  int const        r = s.columns();
  Matrix<SymPoly> a(r, std::vector<SymPoly>(r, SymPoly(m, n)));
  for (int i = 0; i < r; ++i) {
    if (i > 0) { a[i][i - 1] = SymPoly::constant(m, n, 1); }
    int sum = 0;
    for (int j = i; j < r; ++j) {
      sum += s.cols[r - 1 - j];
      a[i][j] = elem(sum);
    }
  }
  return sym_det(a, m, n);
}

} // namespace

SymPoly super_skew_strip(BorderStrip const &s, int m, int n)
{
  return strip_det(s, m, n, [&](int k) { return super_E(k, m, n); });
}

SymPoly skew_strip(BorderStrip const &s, int m)
{
  return strip_det(s, m, 0, [&](int k) { return elementary(k, m); });
}

SymPoly super_skew_strip_recursive(BorderStrip const &s, int m, int n)
{
  check_strip(s);
  int const r = s.columns();
  std::vector<SymPoly> E;
  for (int k = 0; k <= s.boxes(); ++k) { E.push_back(super_E(k, m, n)); }
  // prefix[p] = S_<m_1..m_p>, prefix[0] = 1.
  std::vector<SymPoly> prefix{SymPoly::constant(m, n, 1)};
  for (int p = 1; p <= r; ++p) {
    SymPoly acc(m, n);
    int     sum = 0;
    for (int i = 1; i <= p; ++i) {
      sum += s.cols[p - i];
      SymPoly t = E[sum] * prefix[p - i];
      if (i % 2 == 1) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    prefix.push_back(std::move(acc));
  }
  return prefix.back();
}

DecompositionList schur_expand(SymPoly const &p)
{
  if (p.nvars() != 0) { throw std::invalid_argument("schur_expand: y variables present"); }
  if (!p.is_q_free()) { throw std::domain_error("schur_expand: coefficients depend on q"); }
  int const         m = p.mvars();
  DecompositionList out;
  SymPoly           rest = p;
  while (!rest.is_zero()) {
    auto const &[lead, c] = *rest.terms().rbegin();
    if (!std::is_sorted(lead.rbegin(), lead.rend())) {
      throw std::domain_error("schur_expand: input is not symmetric");
    }
    BigInt const mult = c.coeff(0);
    if (mult < 0) { throw std::domain_error("schur_expand: negative multiplicity"); }
    Partition const shape{std::vector<int>(lead.begin(), lead.end())};
    // Smaller of the two Jacobi-Trudi determinants.
    SymPoly const s = shape.length() <= shape[0] ? schur(shape, m) : schur_dual(shape, m);
    rest -= s * QSeriesPoly(mult);
    out.push_back({shape, mult});
  }
  return out;
}

std::string to_string(DecompositionList const &d)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) { os << " + "; }
    if (d[i].multiplicity != 1) { os << d[i].multiplicity << "*"; }
    os << d[i].shape.to_power_string();
  }
  return os.str();
}

void to_json(nlohmann::json &j, SymPoly const &p)
{
  auto terms = nlohmann::json::array();
  for (auto const &[e, c] : p.terms()) { terms.push_back({{"exps", e}, {"coeff", c}}); }
  j = nlohmann::json{{"m", p.mvars()}, {"n", p.nvars()}, {"terms", terms}};
}

void from_json(nlohmann::json const &j, SymPoly &p)
{
  p = SymPoly(j.at("m").get<int>(), j.at("n").get<int>());
  for (auto const &t : j.at("terms")) { p.add_term(t.at("exps").get<Exponents>(), t.at("coeff").get<QSeriesPoly>()); }
}

} // namespace motifkit
