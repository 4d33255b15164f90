// One PASS/FAIL line per acceptance criterion, with wall time against budget.

#include "motifkit/characters.hpp"
#include "motifkit/motifdeg.hpp"
#include "motifkit/srs.hpp"
#include "motifkit/thermo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace motifkit;

namespace {

struct Outcome
{
  bool        ok = true;
  std::string detail;

  void fail(std::string const &why)
  {
    if (ok) { detail = why; }
    ok = false;
  }
};

std::pair<int, int> const kSix[] = {{2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};

std::string species(int m, int n) { return "(" + std::to_string(m) + "|" + std::to_string(n) + ")"; }

Outcome four_routes()
{
  Outcome o;
  for (auto [m, n] : kSix) {
    auto const r1 = srs_recur1_sequence(SrsContext(m, n, 8));
    auto const r2 = srs_recur2_sequence(SrsContext(m, n, 8));
    for (int N = 1; N <= 8; ++N) {
      SrsContext const ctx(m, n, N);
      SymPoly const    h = srs_direct(ctx);
      if (!(r1[N] == h && r2[N] == h && srs_strip_sum(ctx) == h)) { o.fail(species(m, n) + " N=" + std::to_string(N)); }
    }
  }
  return o;
}

Outcome degeneracy_tables()
{
  Outcome                        o;
  std::vector<std::string> const order{"(000)", "(100)", "(010)", "(001)", "(101)", "(110)", "(011)", "(111)"};
  struct Column
  {
    int                    m, n;
    std::vector<long long> values;
    long long              total;
  };
  Column const cols[] = {
      {2, 0, {5, 3, 4, 3, 1, 0, 0, 0}, 16},
      {1, 1, {2, 2, 2, 2, 2, 2, 2, 2}, 16},
      {3, 0, {15, 15, 21, 15, 9, 3, 3, 0}, 81},
      {2, 1, {9, 12, 16, 12, 12, 8, 8, 4}, 81},
  };
  for (auto const &c : cols) {
    std::map<std::string, MotifRecord> by;
    for (auto &r : degeneracy_table(4, c.m, c.n)) { by.emplace(r.motif.to_string(), r); }
    long long total = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto const &r = by.at(order[i]);
      long long   g = r.degeneracy.convert_to<long long>();
      total += g;
      if (g != c.values[i]) { o.fail(species(c.m, c.n) + " " + order[i] + " = " + std::to_string(g)); }
      if (r.energy != motif_energy(r.motif)) { o.fail("energy of " + order[i]); }
    }
    if (total != c.total) { o.fail(species(c.m, c.n) + " total " + std::to_string(total)); }
  }
  return o;
}

Outcome decomposition_table()
{
  Outcome o;
  struct Row
  {
    char const *motif;
    char const *strip;
    char const *decomposition;
  };
  Row const rows[] = {
      {"(~)", "<1>", "[1]"},
      {"(0)", "<1,1>", "[2]"},
      {"(1)", "<2>", "[1^2]"},
      {"(11)", "<3>", "[1^3]"},
      {"(01)", "<1,2>", "[2,1]"},
      {"(10)", "<2,1>", "[2,1]"},
      {"(00)", "<1,1,1>", "[3]"},
      {"(111)", "<4>", "[1^4]"},
      {"(110)", "<3,1>", "[2,1^2]"},
      {"(101)", "<2,2>", "[2^2] + [2,1^2]"},
      {"(011)", "<1,3>", "[2,1^2]"},
      {"(100)", "<2,1,1>", "[3,1]"},
      {"(010)", "<1,2,1>", "[3,1] + [2^2]"},
      {"(001)", "<1,1,2>", "[3,1]"},
      {"(000)", "<1,1,1,1>", "[4]"},
  };
  for (auto const &r : rows) {
    Motif const d = Motif::parse(r.motif);
    if (motif_to_strip(d).to_string() != r.strip) { o.fail(std::string(r.motif) + " strip " + motif_to_strip(d).to_string()); }
    std::string const got = to_string(decompose_motif(d));
    if (got != r.decomposition) { o.fail(std::string(r.motif) + " -> " + got); }
  }
  return o;
}

Outcome master_identity()
{
  Outcome o;
  for (auto [m, n] : kSix) {
    for (int N = 1; N <= 7; ++N) {
      QSeriesPoly sum;
      for (auto const &d : enumerate_motifs(N - 1)) { sum += degeneracy_poly(d, m, n).specialize_ones().shifted(motif_energy(d)); }
      if (!(sum == partition_function(SrsContext(m, n, N)))) { o.fail(species(m, n) + " N=" + std::to_string(N)); }
    }
  }
  return o;
}

Outcome duality()
{
  Outcome o;
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}, std::pair{1, 2}}) {
    for (int N = 1; N <= 8; ++N) {
      QSeriesPoly const lhs = partition_function(SrsContext(m, n, N));
      QSeriesPoly const rhs = reciprocal_transform(partition_function(SrsContext(n, m, N)), N * (N - 1) / 2);
      if (!(lhs == rhs)) { o.fail(species(m, n) + " N=" + std::to_string(N)); }
    }
  }
  return o;
}

Outcome thermo_points()
{
  Outcome o;
  struct Point
  {
    int    m, n;
    double expected;
  };
  for (auto const &p : {Point{2, 2, 0.5}, Point{2, 1, 4.0 / 9.0}, Point{1, 2, 5.0 / 9.0}}) {
    double const got = occupation(build_curve(p.m, p.n), 1.0);
    if (!(std::abs(got - p.expected) < 1e-8)) { o.fail(species(p.m, p.n) + " n(1) = " + std::to_string(got)); }
  }
  std::vector<double> grid;
  for (int i = 0; i < 20; ++i) { grid.push_back(std::exp(-5.0 + 10.0 * i / 19.0)); }
  SpectralCurve const c12 = build_curve(1, 2), c21 = build_curve(2, 1);
  for (double V : grid) {
    double const s = occupation(c12, V) + occupation(c21, 1.0 / V);
    if (!(std::abs(s - 1.0) < 1e-8)) { o.fail("duality sum at V=" + std::to_string(V)); }
  }
  return o;
}

Outcome central_charges()
{
  Outcome o;
  struct Case
  {
    int    m, n;
    double expected;
  };
  Case const cases[] = {{1, 1, 0.5}, {2, 0, 1.0}, {3, 0, 2.0}, {4, 0, 3.0}, {2, 1, 1.5},
                        {2, 2, 2.0}, {1, 2, 1.0}, {3, 1, 2.5}, {3, 2, 3.0}};
  std::ostringstream os;
  for (auto const &c : cases) {
    double const got = central_charge(build_curve(c.m, c.n), 1e-10).value;
    os << " " << species(c.m, c.n) << "=" << got;
    if (!(std::abs(got - c.expected) < 1e-5)) { o.fail(species(c.m, c.n) + " c = " + std::to_string(got)); }
  }
  if (o.ok) { o.detail = os.str().substr(1); }
  return o;
}

Outcome oracle_agreement()
{
  Outcome      o;
  double const Vs[] = {0.01, 0.1, 0.5, 1.0, 2.0, 10.0};
  double       worst = 0.0;
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{3, 0}, std::pair{4, 0}, std::pair{2, 1}, std::pair{2, 2},
                      std::pair{1, 2}, std::pair{3, 1}, std::pair{3, 2}}) {
    SpectralCurve const curve = build_curve(m, n);
    for (double V : Vs) {
      double const diff = std::abs(solve_w(curve, V) - w_ratio_oracle(m, n, V, 200));
      worst = std::max(worst, diff);
      if (!(diff < 1e-6)) { o.fail(species(m, n) + " V=" + std::to_string(V)); }
    }
  }
  if (o.ok) {
    std::ostringstream os;
    os << "max |diff| = " << worst;
    o.detail = os.str();
  }
  return o;
}

Outcome character_stabilization()
{
  Outcome o;
  // prod_{i>=0} (1 + q^i) through q^3, by plain integer convolution
  std::vector<long long> prod{1, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    auto next = prod;
    for (int k = 0; k + i < 4; ++k) { next[k + i] += prod[k]; }
    prod = next;
  }
  for (int N = 6; N <= 12; ++N) {
    QSeriesPoly const z = partition_function(SrsContext(1, 1, N));
    for (int k = 0; k < 4; ++k) {
      if (z.coeff(k) != prod[k]) { o.fail("Z_" + std::to_string(N) + "^(1|1) coefficient " + std::to_string(k)); }
    }
    if (agreeing_prefix(z, char_su11(4), 4) != 4) { o.fail("char_su11 vs Z_" + std::to_string(N)); }
  }
  auto const rep = char_sum_limit(2, 0, 3, {6, 8});
  if (rep.stable_prefix.empty() || rep.stable_prefix[0] < 3) { o.fail("su(2) j=0 N=6 vs N=8"); }
  if (!fermionic_sum_identity(12)) { o.fail("fermionic sum identity at order 12"); }
  return o;
}

} // namespace

int main()
{
  struct Criterion
  {
    char const              *name;
    double                   budget_s;
    std::function<Outcome()> run;
  };
  Criterion const criteria[] = {
      {"four-route SRS equality, N<=8", 60.0, four_routes},
      {"degeneracy tables N=4", 5.0, degeneracy_tables},
      {"decomposition table, 15 rows", 5.0, decomposition_table},
      {"master motif identity, N<=7", 30.0, master_identity},
      {"partition function duality, N<=8", 5.0, duality},
      {"occupation values and duality", 1.0, thermo_points},
      {"central charges", 10.0, central_charges},
      {"spectral parameter vs ratio oracle", 5.0, oracle_agreement},
      {"character stabilization", 10.0, character_stabilization},
  };

  int failures = 0;
  int index = 0;
  for (auto const &c : criteria) {
    ++index;
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_s) { o.fail("over time budget"); }
    failures += o.ok ? 0 : 1;
    std::printf("%s %d %s (%.3fs / %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", index, c.name, secs, c.budget_s,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
