#include "motifkit/cli.hpp"

#include "motifkit/characters.hpp"
#include "motifkit/motifdeg.hpp"
#include "motifkit/qseries.hpp"
#include "motifkit/shapes.hpp"
#include "motifkit/srs.hpp"
#include "motifkit/symmetric.hpp"
#include "motifkit/thermo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace motifkit::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

std::string real(double v)
{
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << v;
  return os.str();
}

std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) { return s; }
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') { q += '"'; }
    q += c;
  }
  return q + "\"";
}

void require(bool cond, std::string const &what)
{
  if (!cond) { throw UsageError(what); }
}

void check_species(int m, int n)
{
  require(m >= 1, "--m must be >= 1");
  require(n >= 0, "--n must be >= 0");
}

void write_poly_csv(std::ostream &out, QSeriesPoly const &p)
{
  out << "power,coeff\n";
  for (int k = p.low(); k <= p.high(); ++k) {
    BigInt const c = p.coeff(k);
    if (c != 0) { out << k << "," << c << "\n"; }
  }
}

json decomposition_json(DecompositionList const &d)
{
  auto arr = json::array();
  for (auto const &e : d) { arr.push_back({{"shape", e.shape.parts()}, {"multiplicity", e.multiplicity.str()}}); }
  return arr;
}

// ---- subcommand bodies ----------------------------------------------------

struct Flags
{
  int         m = 2;
  int         n = 0;
  int         N = 4;
  int         K = 8;
  int         j = 0;
  double      grid_min = -10.0;
  double      grid_max = 10.0;
  int         points = 41;
  double      tol = 1e-10;
  std::string format = "csv";
  std::string motif;
  std::string which = "su11";
  std::vector<int> N_list;
  bool        free_fermion = false;
};

int cmd_zq(Flags const &f, std::ostream &out)
{
  check_species(f.m, f.n);
  require(f.N >= 0, "--N must be >= 0");
  QSeriesPoly const z = partition_function(SrsContext(f.m, f.n, f.N));
  if (f.format == "json") {
    out << json{{"schema", kSchema}, {"m", f.m}, {"n", f.n}, {"N", f.N}, {"Z", z}}.dump() << "\n";
  } else {
    write_poly_csv(out, z);
  }
  return kOk;
}

int cmd_srs_verify(Flags const &f, std::ostream &out)
{
  check_species(f.m, f.n);
  require(f.N >= 1, "--N must be >= 1");
  bool all = true;
  out << "N,recur1,recur2,strip_sum,z_at_one,duality\n";
  for (int N = 1; N <= f.N; ++N) {
    SrsContext const ctx(f.m, f.n, N);
    SymPoly const    direct = srs_direct(ctx);
    bool const       r1 = srs_recur1(ctx) == direct;
    bool const       r2 = srs_recur2(ctx) == direct;
    bool const       st = srs_strip_sum(ctx) == direct;
    BigInt           expected = 1;
    for (int i = 0; i < N; ++i) { expected *= (f.m + f.n); }
    bool const  one = partition_function(ctx).eval_at_one() == expected;
    std::string dual = "n/a";
    bool        dual_ok = true;
    if (f.n >= 1) {
      dual_ok = duality_check(ctx);
      dual = dual_ok ? "ok" : "FAIL";
    }
    auto const mark = [](bool b) { return b ? "ok" : "FAIL"; };
    out << N << "," << mark(r1) << "," << mark(r2) << "," << mark(st) << "," << mark(one) << "," << dual << "\n";
    all = all && r1 && r2 && st && one && dual_ok;
  }
  return all ? kOk : kVerificationFailed;
}

int cmd_motifs(Flags const &f, std::ostream &out)
{
  require(f.N >= 0 && f.N <= 20, "--N must be in [0, 20]");
  out << "motif,energy,strip\n";
  for (auto const &d : enumerate_motifs(f.N)) {
    out << d.to_string() << "," << motif_energy(d) << "," << csv_field(motif_to_strip(d).to_string()) << "\n";
  }
  return kOk;
}

int cmd_degeneracy(Flags const &f, std::ostream &out)
{
  check_species(f.m, f.n);
  require(f.N >= 1 && f.N <= 12, "--N must be in [1, 12]");
  auto const table = degeneracy_table(f.N, f.m, f.n);
  BigInt     total = 0;
  for (auto const &r : table) { total += r.degeneracy; }
  BigInt expected = 1;
  for (int i = 0; i < f.N; ++i) { expected *= (f.m + f.n); }
  if (f.format == "json") {
    auto rows = json::array();
    for (auto const &r : table) {
      rows.push_back({{"motif", r.motif.to_string()},
                      {"energy", r.energy},
                      {"degeneracy", r.degeneracy.str()},
                      {"decomposition", decomposition_json(r.decomposition)}});
    }
    out << json{{"schema", kSchema}, {"m", f.m}, {"n", f.n}, {"N", f.N}, {"rows", rows}, {"total", total.str()}}.dump()
        << "\n";
  } else {
    out << "motif,energy,degeneracy,decomposition\n";
    for (auto const &r : table) {
      out << r.motif.to_string() << "," << r.energy << "," << r.degeneracy << "," << csv_field(to_string(r.decomposition)) << "\n";
    }
  }
  return total == expected ? kOk : kVerificationFailed;
}

int cmd_decompose(Flags const &f, std::ostream &out)
{
  std::vector<Motif> motifs;
  if (!f.motif.empty()) {
    try {
      motifs.push_back(Motif::parse(f.motif));
    } catch (std::invalid_argument const &e) {
      throw UsageError(e.what());
    }
  } else {
    require(f.N >= 0 && f.N <= 10, "--N must be in [0, 10]");
    motifs = enumerate_motifs(f.N);
  }
  out << "motif,strip,skew,decomposition\n";
  for (auto const &d : motifs) {
    BorderStrip const s = motif_to_strip(d);
    auto const [outer, inner] = strip_to_skew(s);
    out << d.to_string() << "," << csv_field(s.to_string()) << "," << csv_field(outer.to_string() + "/" + inner.to_string()) << ","
        << csv_field(to_string(decompose_motif(d))) << "\n";
  }
  return kOk;
}

int cmd_thermo(Flags const &f, std::ostream &out)
{
  if (!f.free_fermion) { check_species(f.m, f.n); }
  require(f.points >= 1, "--points must be >= 1");
  require(f.grid_min <= f.grid_max, "--grid-min must not exceed --grid-max");
  require(std::abs(f.grid_min) <= 100.0 && std::abs(f.grid_max) <= 100.0, "grid limited to |eps - mu| <= 100");
  std::vector<double> grid;
  for (int i = 0; i < f.points; ++i) {
    grid.push_back(f.points == 1 ? f.grid_min : f.grid_min + (f.grid_max - f.grid_min) * i / (f.points - 1));
  }
  ThermoCase const tc{f.m, f.n, f.free_fermion};
  auto const       curves = emit_distribution(std::span<ThermoCase const>(&tc, 1), grid, f.tol);
  auto const      &curve = curves.front();
  if (f.format == "json") {
    auto rows = json::array();
    for (auto const &s : curve.samples) { rows.push_back({{"eps_minus_mu", s.eps_minus_mu}, {"V", s.V}, {"w", s.w}, {"n_av", s.n_av}}); }
    out << json{{"schema", kSchema}, {"case", tc.label()}, {"central_charge", curve.c}, {"samples", rows}}.dump() << "\n";
  } else {
    out << "eps_minus_mu,V,w,n_av\n";
    for (auto const &s : curve.samples) { out << real(s.eps_minus_mu) << "," << real(s.V) << "," << real(s.w) << "," << real(s.n_av) << "\n"; }
  }
  return kOk;
}

int cmd_central_charge(Flags const &f, std::ostream &out)
{
  check_species(f.m, f.n);
  require(f.tol > 0.0, "--tol must be positive");
  auto const   c = central_charge(build_curve(f.m, f.n), f.tol);
  double const diff = std::abs(c.value - c.target);
  if (f.format == "json") {
    out << json{{"schema", kSchema}, {"m", f.m}, {"n", f.n}, {"c", c.value}, {"target", c.target}, {"error_estimate", c.error_estimate}}.dump()
        << "\n";
  } else {
    out << "m,n,c,target,abs_diff\n";
    out << f.m << "," << f.n << "," << real(c.value) << "," << real(c.target) << "," << real(diff) << "\n";
  }
  return diff < std::max(f.tol, 1e-6) ? kOk : kVerificationFailed;
}

json series_json(QSeriesPoly const &p, int K)
{
  auto arr = json::array();
  for (int k = 0; k < K; ++k) { arr.push_back(p.coeff(k).str()); }
  return arr;
}

int cmd_character(Flags const &f, std::ostream &out)
{
  require(f.K >= 1, "--K must be >= 1");
  json doc{{"schema", kSchema}, {"case", f.which}, {"K", f.K}};
  if (f.which == "su11") {
    doc["offset"] = "0";
    doc["coeffs"] = series_json(char_su11(f.K), f.K);
  } else if (f.which == "su1n") {
    require(f.n >= 1, "--n must be >= 1 for su1n");
    doc["n"] = f.n;
    doc["offset"] = "0";
    doc["coeffs"] = series_json(char_su1n(f.K, f.n), f.K);
  } else if (f.which == "sum") {
    require(f.m >= 2, "--m must be >= 2 for sum");
    require(f.j >= 0 && f.j < f.m, "--j must be in [0, m)");
    std::vector<int> Ns = f.N_list;
    if (Ns.empty()) {
      for (int N = f.j == 0 ? f.m : f.j; Ns.size() < 3; N += f.m) { Ns.push_back(N); }
    }
    StabilizationReport rep;
    try {
      rep = char_sum_limit(f.m, f.j, f.K, Ns);
    } catch (std::invalid_argument const &e) {
      throw UsageError(e.what());
    }
    doc["m"] = f.m;
    doc["j"] = f.j;
    auto rows = json::array();
    for (std::size_t i = 0; i < rep.series.size(); ++i) {
      rows.push_back({{"N", rep.N_list[i]}, {"offset", to_string(rep.series[i].offset)}, {"coeffs", series_json(rep.series[i].series, f.K)}});
    }
    doc["series"] = rows;
    doc["stable_prefix"] = rep.stable_prefix;
  } else {
    throw UsageError("--case must be one of su11, su1n, sum");
  }
  out << doc.dump() << "\n";
  return kOk;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Exact partition functions, motif degeneracies and thermodynamics of the su(m|n) Polychronakos spin chain"};
  app.name("motifkit");
  app.require_subcommand(1);
  Flags f;

  auto add_species = [&](CLI::App *s) {
    s->add_option("--m", f.m, "bosonic species count (>= 1)")->required();
    s->add_option("--n", f.n, "fermionic species count (>= 0)")->required();
  };
  auto add_format = [&](CLI::App *s) { s->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"})); };

  auto *zq = app.add_subcommand("zq", "partition function Z_N as (power,coeff) rows");
  add_species(zq);
  zq->add_option("--N", f.N, "number of sites")->required();
  add_format(zq);

  auto *verify = app.add_subcommand("srs-verify", "four-route equality of the SRS polynomials for 1..N");
  add_species(verify);
  verify->add_option("--N", f.N, "largest degree")->required();

  auto *motifs = app.add_subcommand("motifs", "list motifs of length N with energies and strips");
  motifs->add_option("--N", f.N, "motif length")->required();

  auto *deg = app.add_subcommand("degeneracy", "degeneracy table for the N-site chain");
  add_species(deg);
  deg->add_option("--N", f.N, "number of sites")->required();
  add_format(deg);

  auto *dec = app.add_subcommand("decompose", "hyper-multiplet decomposition of motifs");
  dec->add_option("--motif", f.motif, "motif such as (101)");
  dec->add_option("--N", f.N, "decompose every motif of this length");

  auto *thermo = app.add_subcommand("thermo", "occupation curve on a grid of (eps - mu) beta values");
  thermo->add_option("--m", f.m, "bosonic species count (>= 1)");
  thermo->add_option("--n", f.n, "fermionic species count (>= 0)");
  thermo->add_flag("--free-fermion", f.free_fermion, "emit the free fermion V/(1+V) instead");
  thermo->add_option("--grid-min", f.grid_min, "smallest eps - mu");
  thermo->add_option("--grid-max", f.grid_max, "largest eps - mu");
  thermo->add_option("--points", f.points, "grid points");
  thermo->add_option("--tol", f.tol, "quadrature tolerance for the central charge");
  add_format(thermo);

  auto *cc = app.add_subcommand("central-charge", "central charge by quadrature of log w(V)/V");
  add_species(cc);
  cc->add_option("--tol", f.tol, "quadrature tolerance");
  add_format(cc);

  auto *ch = app.add_subcommand("character", "truncated character series (JSON)");
  ch->add_option("--case", f.which, "su11, su1n or sum")->required();
  ch->add_option("--m", f.m, "rank for sum");
  ch->add_option("--n", f.n, "fermion count for su1n");
  ch->add_option("--j", f.j, "residue class N = j mod m");
  ch->add_option("--K", f.K, "number of coefficients");
  ch->add_option("--N-list", f.N_list, "comma separated N values")->delimiter(',');

  auto *self = app.add_subcommand("selftest", "run the built-in invariant suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  try {
    if (*zq) { return cmd_zq(f, out); }
    if (*verify) { return cmd_srs_verify(f, out); }
    if (*motifs) { return cmd_motifs(f, out); }
    if (*deg) { return cmd_degeneracy(f, out); }
    if (*dec) { return cmd_decompose(f, out); }
    if (*thermo) { return cmd_thermo(f, out); }
    if (*cc) { return cmd_central_charge(f, out); }
    if (*ch) { return cmd_character(f, out); }
    if (*self) { return selftest(out); }
  } catch (UsageError const &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  err << app.help();
  return kUsage;
}

// ---- selftest ---------------------------------------------------------------

namespace {

struct Check
{
  std::ostream &out;
  bool          ok = true;

  bool operator()(bool cond, std::string const &name, std::string const &repro)
  {
    if (!ok) { return false; }
    if (cond) {
      out << "ok   " << name << "\n";
    } else {
      out << "FAIL " << name << "  reproduce: " << repro << "\n";
      ok = false;
    }
    return ok;
  }
};

std::vector<long long> table_column(int m, int n, std::vector<std::string> const &order)
{
  auto const                       table = degeneracy_table(4, m, n);
  std::map<std::string, long long> by_motif;
  for (auto const &r : table) { by_motif[r.motif.to_string()] = r.degeneracy.convert_to<long long>(); }
  std::vector<long long> col;
  for (auto const &s : order) { col.push_back(by_motif.at(s)); }
  return col;
}

} // namespace

int selftest(std::ostream &out)
{
  Check check{out};
  std::pair<int, int> const pairs[] = {{2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};

  check(truncated_euler_check(8), "qseries euler identity K=8", "truncated_euler_check(8)");
  check(q_binomial(4, 2) == QSeriesPoly(0, {1, 1, 2, 1, 1}), "qseries q_binomial(4,2)", "q_binomial(4,2)");

  std::string bad;
  for (int L = 0; L <= 8 && bad.empty(); ++L) {
    for (auto const &d : enumerate_motifs(L)) {
      if (!(strip_to_motif(motif_to_strip(d)) == d)) {
        bad = d.to_string();
        break;
      }
    }
  }
  check(bad.empty(), "shapes motif/strip bijection N<=8", "strip_to_motif(motif_to_strip(" + bad + "))");

  for (auto [m, n] : pairs) {
    for (int N = 1; N <= 6; ++N) {
      SrsContext const ctx(m, n, N);
      SymPoly const    h = srs_direct(ctx);
      std::string const tag = "(" + std::to_string(m) + "|" + std::to_string(n) + ") N=" + std::to_string(N);
      if (!check(srs_recur1(ctx) == h && srs_recur2(ctx) == h && srs_strip_sum(ctx) == h, "srs four routes " + tag,
                 "motifkit srs-verify --m " + std::to_string(m) + " --n " + std::to_string(n) + " --N " + std::to_string(N))) {
        return kVerificationFailed;
      }
    }
  }

  std::vector<std::string> const order{"(000)", "(100)", "(010)", "(001)", "(101)", "(110)", "(011)", "(111)"};
  check(table_column(2, 0, order) == std::vector<long long>{5, 3, 4, 3, 1, 0, 0, 0}, "motifdeg su(2) N=4 table", "motifkit degeneracy --m 2 --n 0 --N 4");
  check(table_column(1, 1, order) == std::vector<long long>(8, 2), "motifdeg su(1|1) N=4 table", "motifkit degeneracy --m 1 --n 1 --N 4");
  check(table_column(3, 0, order) == std::vector<long long>{15, 15, 21, 15, 9, 3, 3, 0}, "motifdeg su(3) N=4 table", "motifkit degeneracy --m 3 --n 0 --N 4");
  check(table_column(2, 1, order) == std::vector<long long>{9, 12, 16, 12, 12, 8, 8, 4}, "motifdeg su(2|1) N=4 table", "motifkit degeneracy --m 2 --n 1 --N 4");
  check(to_string(decompose_motif(Motif::parse("(101)"))) == "[2^2] + [2,1^2]", "motifdeg decompose (101)", "motifkit decompose --motif '(101)'");
  check(to_string(decompose_motif(Motif::parse("(010)"))) == "[3,1] + [2^2]", "motifdeg decompose (010)", "motifkit decompose --motif '(010)'");

  for (auto [m, n] : pairs) {
    if (n == 0) { continue; }
    check(duality_check(SrsContext(m, n, 6)), "srs duality (" + std::to_string(m) + "|" + std::to_string(n) + ") N=6", "duality_check");
  }

  check(std::abs(occupation(build_curve(2, 2), 1.0) - 0.5) < 1e-8, "thermo occupation su(2|2) V=1", "occupation(build_curve(2,2),1)");
  check(std::abs(occupation(build_curve(2, 1), 1.0) - 4.0 / 9.0) < 1e-8, "thermo occupation su(2|1) V=1", "occupation(build_curve(2,1),1)");
  check(std::abs(occupation(build_curve(1, 2), 1.0) - 5.0 / 9.0) < 1e-8, "thermo occupation su(1|2) V=1", "occupation(build_curve(1,2),1)");
  double const samples[] = {0.1, 1.0, 10.0};
  check(duality_checks(samples).ok, "thermo su(1|2)/su(2|1) duality", "duality_checks({0.1,1,10})");
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 0}, std::pair{2, 1}}) {
    auto const c = central_charge(build_curve(m, n), 1e-10);
    check(std::abs(c.value - c.target) < 1e-5, "thermo central charge (" + std::to_string(m) + "|" + std::to_string(n) + ")",
          "motifkit central-charge --m " + std::to_string(m) + " --n " + std::to_string(n));
  }
  check(std::abs(solve_w(build_curve(2, 1), 0.5) - w_ratio_oracle(2, 1, 0.5, 200)) < 1e-6, "thermo oracle agreement su(2|1) V=0.5",
        "w_ratio_oracle(2,1,0.5,200)");

  check(fermionic_sum_identity(12), "characters fermionic sum identity K=12", "fermionic_sum_identity(12)");
  check(agreeing_prefix(partition_function(SrsContext(1, 1, 8)), char_su11(4), 4) == 4, "characters su(1|1) stabilization",
        "motifkit character --case su11 --K 4");
  auto const rep = char_sum_limit(2, 0, 3, {6, 8});
  check(rep.stable_prefix.front() >= 3, "characters su(2) j=0 stabilization", "motifkit character --case sum --m 2 --j 0 --K 3 --N-list 6,8");

  if (check.ok) { out << "selftest passed\n"; }
  return check.ok ? kOk : kVerificationFailed;
}

} // namespace motifkit::cli
