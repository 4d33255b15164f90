#include "motifkit/thermo.hpp"

#include "motifkit/parallel.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace motifkit {

namespace {

long long binom(int n, int k)
{
  if (k < 0 || k > n) { return 0; }
  long long r = 1;
  for (int i = 1; i <= k; ++i) { r = r * (n - k + i) / i; }
  return r;
}

double horner2(std::vector<std::vector<double>> const &c, double s, double V, double *ds, double *dV)
{
  double f = 0.0, fs = 0.0, fv = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    double p = 0.0, pv = 0.0;
    for (std::size_t j = c[i].size(); j-- > 0;) {
      pv = pv * V + p;
      p = p * V + c[i][j];
    }
    fs = fs * s + f;
    f = f * s + p;
    fv = fv * s + pv;
  }
  *ds = fs;
  *dV = fv;
  return f;
}

constexpr double kSeedV = 1e-8;

} // namespace

SpectralCurve::SpectralCurve(int m, int n)
  : m_(m)
  , n_(n)
{
  if (m < 1 || n < 0) { throw std::invalid_argument("SpectralCurve: m >= 1, n >= 0 required"); }
  int const K = std::max(m, n);
  wcoef_.assign(K + 1, std::vector<long long>(K + 1, 0));
  wcoef_[0][0] = -1;
  for (int k = 1; k <= K; ++k) {
    long long const sign = k % 2 == 1 ? 1 : -1;
    // (1 - V)^{k-1} (C(m,k) + sign V C(n,k)), times sign.
    for (int j = 0; j <= k - 1; ++j) {
      long long const base = binom(k - 1, j) * (j % 2 == 0 ? 1 : -1);
      wcoef_[k][j] += sign * base * binom(m, k);
      wcoef_[k][j + 1] += sign * base * sign * binom(n, k);
    }
  }
  wform_.assign(K + 1, std::vector<double>(K + 1, 0.0));
  zform_.assign(K + 1, std::vector<double>(K + 1, 0.0));
  for (int k = 0; k <= K; ++k) {
    for (int j = 0; j <= K; ++j) {
      wform_[k][j] = static_cast<double>(wcoef_[k][j]);
      // w^k = (1 - z)^k
      for (int i = 0; i <= k; ++i) {
        zform_[i][j] += static_cast<double>(wcoef_[k][j] * binom(k, i) * (i % 2 == 0 ? 1 : -1));
      }
    }
  }
}

long long SpectralCurve::coefficient(int k, int j) const
{
  if (k < 0 || j < 0 || k > degree() || j > degree()) { return 0; }
  return wcoef_[k][j];
}

double SpectralCurve::a(int k, double V) const
{
  if (k < 1 || k > degree()) { return 0.0; }
  double acc = 0.0;
  for (int j = degree(); j >= 0; --j) { acc = acc * V + wform_[k][j]; }
  return acc;
}

SpectralCurve::Eval SpectralCurve::eval_z(double z, double V) const
{
  double ds = 0.0, dv = 0.0;
  if (z <= 0.5) {
    double const f = horner2(zform_, z, V, &ds, &dv);
    return {f, ds, dv};
  }
  double const f = horner2(wform_, 1.0 - z, V, &ds, &dv);
  return {f, -ds, dv};
}

SpectralCurve build_curve(int m, int n) { return SpectralCurve(m, n); }

SpectralCurve::Eval SpectralCurve::eval_w(double w, double V) const
{
  double ds = 0.0, dv = 0.0;
  double const f = horner2(wform_, w, V, &ds, &dv);
  return {f, ds, dv};
}

namespace {

// The continuation works in whichever of z = 1 - w and w is below 1/2, so
// that neither w -> 1 (small V) nor w -> 0 (large V) loses digits.  In both
// coordinates f is arranged to decrease through the root.
enum class Coord
{
  Z,
  W
};

struct Point
{
  Coord  coord;
  double u;

  double z() const { return coord == Coord::Z ? u : 1.0 - u; }
  double w() const { return coord == Coord::W ? u : 1.0 - u; }
};

SpectralCurve::Eval eval_u(SpectralCurve const &c, Coord coord, double u, double V)
{
  if (coord == Coord::Z) { return c.eval_z(u, V); }
  auto const e = c.eval_w(u, V);
  return {-e.f, -e.df_dz, -e.df_dV};
}

void rebase(Point &p)
{
  if (p.u > 0.5) {
    p.coord = p.coord == Coord::Z ? Coord::W : Coord::Z;
    p.u = 1.0 - p.u;
  }
}

// Root of f in [lo, hi] with f(lo) >= 0 > f(hi): Newton, falling back to
// bisection whenever a step leaves the bracket or stalls.
double polish(SpectralCurve const &c, Coord coord, double V, double lo, double hi, double guess)
{
  double u = std::clamp(guess, lo, hi);
  for (int it = 0; it < 400; ++it) {
    auto const e = eval_u(c, coord, u, V);
    if (e.f == 0.0) { return u; }
    if (e.f > 0.0) {
      lo = u;
    } else {
      hi = u;
    }
    double next = e.df_dz != 0.0 ? u - e.f / e.df_dz : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) { next = 0.5 * (lo + hi); }
    double const scale = std::max(std::abs(next), std::numeric_limits<double>::min());
    if (std::abs(next - u) <= 2.0 * std::numeric_limits<double>::epsilon() * scale || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * scale) {
      return next;
    }
    u = next;
  }
  return u;
}

// First sign change of P walking from w = 0 (z = 1) upward in w.
Point seed(SpectralCurve const &c, double V)
{
  double prev = 1.0;
  auto   found = [&](double z) -> bool { return c.eval_z(z, V).f >= 0.0; };
  for (int i = 1; i < 1000; ++i) {
    double const z = 1.0 - i * 1e-3;
    if (found(z)) {
      Point p{Coord::Z, polish(c, Coord::Z, V, z, prev, 0.5 * (z + prev))};
      rebase(p);
      return p;
    }
    prev = z;
  }
  for (double z = 1e-3 * 0.8; z > 1e-300; z *= 0.8) {
    if (found(z)) { return {Coord::Z, polish(c, Coord::Z, V, z, prev, 0.5 * (z + prev))}; }
    prev = z;
  }
  throw ContinuationError("no positive root below w = 1", V);
}

// du/dV along the curve.
double slope(SpectralCurve const &c, Point const &p, double V)
{
  auto const e = eval_u(c, p.coord, p.u, V);
  if (e.df_dz == 0.0) { throw ContinuationError("singular curve derivative", V); }
  return -e.df_dV / e.df_dz;
}

// One corrector step from (V0, p0) to V1; false if no local bracket.
bool advance(SpectralCurve const &c, double V0, Point const &p0, double V1, Point &p1)
{
  double const u0 = p0.u;
  double       up = u0 + slope(c, p0, V0) * (V1 - V0);
  if (!(up > 0.0 && up < 1.0)) { up = std::clamp(up, 0.5 * u0, 0.5 * (1.0 + u0)); }
  double const limit = 0.5 * std::min(up, 1.0 - up) + std::abs(up - u0);
  // Start narrow: at large V some curves carry a second root within a
  // relative distance ~ V^{-1/2} of the tracked one.
  double delta = std::max({1e-3 * std::abs(up - u0), 16.0 * std::numeric_limits<double>::epsilon() * up, std::numeric_limits<double>::min()});
  for (int it = 0; it < 200 && delta <= limit; ++it, delta *= 2.0) {
    double const lo = std::max(up - delta, 0.0);
    double const hi = std::min(up + delta, 1.0);
    if (eval_u(c, p0.coord, lo, V1).f >= 0.0 && eval_u(c, p0.coord, hi, V1).f < 0.0) {
      p1 = {p0.coord, polish(c, p0.coord, V1, lo, hi, up)};
      rebase(p1);
      return true;
    }
  }
  return false;
}

double next_V(double V) { return V + std::min(V, 0.01 * std::max(1.0, V)); }

// -V d log w / dV at a root.
double occupation_at(SpectralCurve const &c, Point const &p, double V)
{
  double const du = slope(c, p, V);
  return p.coord == Coord::Z ? V * du / p.w() : -V * du / p.w();
}

} // namespace

std::vector<CurveRoot> track_roots(SpectralCurve const &curve, std::span<double const> ascending_V)
{
  std::vector<CurveRoot> out;
  out.reserve(ascending_V.size());
  if (ascending_V.empty()) { return out; }
  for (std::size_t i = 0; i < ascending_V.size(); ++i) {
    if (!(ascending_V[i] > 0.0) || !std::isfinite(ascending_V[i])) { throw std::invalid_argument("track_z: V must be positive and finite"); }
    if (i > 0 && ascending_V[i] < ascending_V[i - 1]) { throw std::invalid_argument("track_z: V must be ascending"); }
  }
  double V = std::min(ascending_V.front(), kSeedV);
  Point  p = seed(curve, V);
  for (double const target : ascending_V) {
    while (V < target) {
      double step = std::min(next_V(V), target) - V;
      Point  p1 = p;
      int    halvings = 0;
      while (!advance(curve, V, p, V + step, p1)) {
        if (++halvings > 40) { throw ContinuationError("root continuation lost its bracket", V + step); }
        step *= 0.5;
      }
      V += step;
      p = p1;
    }
    out.push_back({V, p.z(), p.w(), occupation_at(curve, p, V)});
  }
  return out;
}

std::vector<double> track_z(SpectralCurve const &curve, std::span<double const> ascending_V)
{
  std::vector<double> zs;
  for (auto const &r : track_roots(curve, ascending_V)) { zs.push_back(r.z); }
  return zs;
}

namespace {

CurveRoot root_at(SpectralCurve const &curve, double V, char const *who)
{
  if (!(V > 0.0)) { throw std::invalid_argument(std::string(who) + ": V > 0 required"); }
  double const v[] = {V};
  return track_roots(curve, v).front();
}

} // namespace

double solve_z(SpectralCurve const &curve, double V) { return root_at(curve, V, "solve_z").z; }

double solve_w(SpectralCurve const &curve, double V) { return root_at(curve, V, "solve_w").w; }

double w_ratio_oracle(int m, int n, double V, int depth)
{
  if (!(V > 0.0)) { throw std::invalid_argument("w_ratio_oracle: V > 0 required"); }
  if (depth < 10) { throw std::invalid_argument("w_ratio_oracle: depth >= 10 required"); }
  int const           K = std::max(m, n);
  std::vector<double> coef(K + 1, 0.0);
  for (int k = 1; k <= K; ++k) {
    double prod = 1.0;
    for (int i = 1; i < k; ++i) { prod *= 1.0 - V; }
    double const fermion = (k % 2 == 0 ? -1.0 : 1.0) * V * static_cast<double>(binom(n, k));
    coef[k] = (k % 2 == 1 ? 1.0 : -1.0) * prod * (static_cast<double>(binom(m, k)) + fermion);
  }
  // window[i] = phi_{N-i}
  std::vector<double> window(K + 1, 0.0);
  window[0] = 1.0;
  for (int N = 1; N <= depth; ++N) {
    double next = 0.0;
    for (int k = 1; k <= K; ++k) { next += coef[k] * window[k - 1]; }
    std::rotate(window.rbegin(), window.rbegin() + 1, window.rend());
    window[0] = next;
    double const mag = std::abs(next);
    if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
      for (auto &v : window) { v /= mag; }
    }
  }
  return window[1] / window[0];
}

double occupation(SpectralCurve const &curve, double V)
{
  double const n = root_at(curve, V, "occupation").n_av;
  if (!std::isfinite(n)) { throw std::domain_error("occupation: singular derivative at V=" + std::to_string(V)); }
  return n;
}

namespace {

struct Integral
{
  double value;
  double error;
};

// int_0^1 log w(V) / V dV with V = u^p.  log_w(V) must be accurate for
// tiny V.
Integral integrate_log_w(std::function<double(double)> const &log_w, int p, double tol)
{
  auto integrand = [&](double u) {
    double const V = std::pow(u, p);
    if (V <= 0.0) { return 0.0; }
    return p * log_w(V) / u;
  };
  double err = 0.0;
  double const val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 20, tol, &err);
  return {val, err};
}

double central_factor() { return -6.0 / (boost::math::constants::pi<double>() * boost::math::constants::pi<double>()); }

} // namespace

CentralCharge central_charge(SpectralCurve const &curve, double quad_tol)
{
  if (!(quad_tol > 0.0)) { throw std::invalid_argument("central_charge: quad_tol > 0 required"); }
  auto const I = integrate_log_w([&](double V) { return std::log1p(-solve_z(curve, V)); }, std::max(curve.m(), 1), quad_tol);
  double const c = central_factor() * I.value;
  double const err = std::abs(central_factor()) * I.error;
  if (!std::isfinite(c) || err > std::max(1e3 * quad_tol, 1e-6)) {
    throw QuadratureError("central_charge: quadrature did not converge (error estimate " + std::to_string(err) + ")");
  }
  return {c, err, curve.m() - 1 + 0.5 * curve.n()};
}

DualityReport duality_checks(std::span<double const> V_samples)
{
  SpectralCurve const c12(1, 2), c21(2, 1);
  DualityReport       rep;
  for (double V : V_samples) {
    if (!(V > 0.0)) { throw std::invalid_argument("duality_checks: V > 0 required"); }
    DualityRow row{};
    row.V = V;
    row.w12 = solve_w(c12, V);
    row.w21_dual = solve_w(c21, 1.0 / V) / V;
    row.occupation_sum = occupation(c12, V) + occupation(c21, 1.0 / V);
    rep.max_w_error = std::max(rep.max_w_error, std::abs(row.w12 - row.w21_dual));
    rep.max_occupation_error = std::max(rep.max_occupation_error, std::abs(row.occupation_sum - 1.0));
    rep.rows.push_back(row);
  }
  rep.ok = rep.max_w_error <= 1e-8 && rep.max_occupation_error <= 1e-8;
  return rep;
}

std::string ThermoCase::label() const
{
  if (free_fermion) { return "free"; }
  return "su(" + std::to_string(m) + "|" + std::to_string(n) + ")";
}

std::vector<ThermoCurve> emit_distribution(std::span<ThermoCase const> cases, std::span<double const> grid, double quad_tol)
{
  std::vector<ThermoCurve> out(cases.size());
  // Continuation runs along ascending V = exp(-x).
  std::vector<std::size_t> order(grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) { order[i] = i; }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return grid[a] > grid[b]; });
  std::vector<double> Vs;
  for (auto i : order) { Vs.push_back(std::exp(-grid[i])); }

  parallel_for(cases.size(), [&](std::size_t ci) {
    ThermoCase const &tc = cases[ci];
    ThermoCurve      &tcurve = out[ci];
    tcurve.case_ = tc;
    tcurve.samples.resize(grid.size());
    if (tc.free_fermion) {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        double const V = std::exp(-grid[i]);
        tcurve.samples[i] = {grid[i], V, 1.0 / (1.0 + V), V / (1.0 + V)};
      }
      tcurve.c = central_factor() * integrate_log_w([](double V) { return -std::log1p(V); }, 1, quad_tol).value;
      return;
    }
    SpectralCurve const curve(tc.m, tc.n);
    auto const          roots = track_roots(curve, Vs);
    for (std::size_t r = 0; r < order.size(); ++r) {
      std::size_t const i = order[r];
      tcurve.samples[i] = {grid[i], Vs[r], roots[r].w, roots[r].n_av};
    }
    tcurve.c = central_charge(curve, quad_tol).value;
  });
  return out;
}

} // namespace motifkit
