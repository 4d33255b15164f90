#pragma once

// Quasi-particle thermodynamics from the restricted partition function:
// spectral parameter w(V), mean occupation and central charge.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace motifkit {

/// P(w, V) = sum_{k=1}^{K} a_k(V) w^k - 1 with K = max(m, n) and
/// a_k(V) = (-1)^{k-1} (1 - V)^{k-1} (C(m,k) + (-1)^{k-1} V C(n,k)).
/// The asymptotic ratio phi_{N-1}/phi_N of the restricted partition function
/// is the smallest positive root w of P(., V).
class SpectralCurve
{
public:
  SpectralCurve(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int degree() const { return static_cast<int>(wcoef_.size()) - 1; }

  /// Exact integer coefficient of w^k V^j in P.
  long long coefficient(int k, int j) const;
  std::vector<std::vector<long long>> const &coefficients() const { return wcoef_; }

  double a(int k, double V) const;

  struct Eval
  {
    double f;     ///< P(1 - z, V)
    double df_dz; ///< -dP/dw
    double df_dV;
  };
  /// Evaluates in z = 1 - w; small z uses the expansion around w = 1 so
  /// that no cancellation occurs as V -> 0.
  Eval eval_z(double z, double V) const;
  /// P(w, V) with dP/dw in df_dz.
  Eval eval_w(double w, double V) const;

private:
  int                                 m_, n_;
  std::vector<std::vector<long long>> wcoef_; // [k][j]
  std::vector<std::vector<double>>    wform_;
  std::vector<std::vector<double>>    zform_; // P(1 - z, V) = sum zform[i][j] z^i V^j
};

SpectralCurve build_curve(int m, int n);

/// The root continuation lost its bracket (two roots collided or the root
/// left (0, 1]).
class ContinuationError : public std::runtime_error
{
public:
  ContinuationError(std::string const &what, double V)
    : std::runtime_error(what + " at V=" + std::to_string(V))
    , V_(V)
  {
  }
  double V() const { return V_; }

private:
  double V_;
};

class QuadratureError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct CurveRoot
{
  double V;
  double z; ///< 1 - w
  double w;
  double n_av;
};

/// The continued root and occupation at every V (positive, ascending).
std::vector<CurveRoot> track_roots(SpectralCurve const &curve, std::span<double const> ascending_V);

/// 1 - w(V) for every V (which must be positive and ascending), continued
/// from w(0+) = 1.
std::vector<double> track_z(SpectralCurve const &curve, std::span<double const> ascending_V);

double solve_z(SpectralCurve const &curve, double V);
double solve_w(SpectralCurve const &curve, double V);

/// phi_{depth-1} / phi_depth from the constant-V restricted recursion
/// phi_N = sum_k (-1)^{k-1} (1-V)^{k-1} (C(m,k) - (-1)^k V C(n,k)) phi_{N-k}.
double w_ratio_oracle(int m, int n, double V, int depth);

/// <n_av> = -V d log w / dV via implicit differentiation of the curve.
double occupation(SpectralCurve const &curve, double V);

struct CentralCharge
{
  double value;
  double error_estimate;
  double target; ///< m - 1 + n/2
};

/// c = -(6/pi^2) int_0^1 log w(V) dV / V by adaptive Gauss-Kronrod on the
/// substitution V = u^m.
CentralCharge central_charge(SpectralCurve const &curve, double quad_tol);

struct DualityRow
{
  double V;
  double w12;           ///< w^{(1|2)}(V)
  double w21_dual;      ///< w^{(2|1)}(1/V) / V
  double occupation_sum; ///< <n^{(1|2)}(V)> + <n^{(2|1)}(1/V)>
};

struct DualityReport
{
  std::vector<DualityRow> rows;
  double                  max_w_error = 0.0;
  double                  max_occupation_error = 0.0;
  bool                    ok = true;
};

/// su(1|2) <-> su(2|1) duality of w and of the occupation, to 1e-8.
DualityReport duality_checks(std::span<double const> V_samples);

struct ThermoSample
{
  double eps_minus_mu; ///< in units of 1/beta
  double V;
  double w;
  double n_av;
};

struct ThermoCase
{
  int  m = 1;
  int  n = 1;
  bool free_fermion = false; ///< closed form V/(1+V)

  std::string label() const;
};

struct ThermoCurve
{
  ThermoCase                case_;
  std::vector<ThermoSample> samples; ///< in grid order
  double                    c = 0.0;
};

/// Samples every case on the grid of (eps - mu) beta values, V = exp(-x).
std::vector<ThermoCurve> emit_distribution(std::span<ThermoCase const> cases, std::span<double const> grid,
                                           double quad_tol = 1e-10);

} // namespace motifkit
