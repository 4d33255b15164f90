#include "motifkit/motifdeg.hpp"

#include "motifkit/srs.hpp"

#include <doctest.h>

#include <stdexcept>

#include <map>

using namespace motifkit;

namespace {

std::pair<int, int> const kPairs[] = {{2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};

std::map<std::string, long long> degeneracies(int m, int n)
{
  std::map<std::string, long long> by;
  for (auto const &r : degeneracy_table(4, m, n)) { by[r.motif.to_string()] = r.degeneracy.convert_to<long long>(); }
  return by;
}

bool has_run_of_ones(Motif const &d, int len)
{
  int run = 0;
  for (auto b : d.bits) {
    run = b ? run + 1 : 0;
    if (run >= len) { return true; }
  }
  return false;
}

} // namespace

TEST_CASE("motif energy")
{
  CHECK(motif_energy(Motif::parse("(000)")) == 0);
  CHECK(motif_energy(Motif::parse("(101)")) == 4);
  CHECK(motif_energy(Motif::parse("(111)")) == 6);
  for (int len = 0; len <= 4; ++len) {
    for (auto const &d : enumerate_motifs(len)) { CHECK(strip_q_exponent(motif_to_strip(d)) == motif_energy(d)); }
  }
}

TEST_CASE("degeneracy polynomial base cases")
{
  for (auto [m, n] : kPairs) {
    CHECK(degeneracy_poly(Motif{}, m, n) == super_schur(Partition({1}), m, n));
    CHECK(degeneracy_poly(Motif::parse("(0)"), m, n) == super_schur(Partition({2}), m, n));
    CHECK(degeneracy_poly(Motif::parse("(1)"), m, n) == super_schur(Partition({1, 1}), m, n));
  }
  CHECK(degeneracy_poly(Motif::parse("(101)"), 2, 1).specialize_ones() == QSeriesPoly(12));
}

TEST_CASE("master motif identity")
{
  for (auto [m, n] : kPairs) {
    for (int N = 1; N <= 7; ++N) {
      QSeriesPoly sum;
      for (auto const &d : enumerate_motifs(N - 1)) {
        sum += degeneracy_poly(d, m, n).specialize_ones().shifted(motif_energy(d));
      }
      CHECK(sum == partition_function(SrsContext(m, n, N)));
    }
  }
}

TEST_CASE("selection rule emerges from the determinant")
{
  for (int m = 1; m <= 3; ++m) {
    for (int len = 0; len <= 6; ++len) {
      for (auto const &d : enumerate_motifs(len)) {
        CHECK(degeneracy_poly(d, m, 0).is_zero() == has_run_of_ones(d, m));
        CHECK_FALSE(degeneracy_poly(d, m, 1).is_zero());
      }
    }
  }
}

TEST_CASE("printed recursions")
{
  CHECK(degeneracy_recur(Motif::parse("(010)"), RecurCase::Su2).specialize_ones() == QSeriesPoly(4));
  CHECK(degeneracy_recur(Motif::parse("(110)"), RecurCase::Su21).specialize_ones() == QSeriesPoly(8));
  for (auto c : {RecurCase::Su2, RecurCase::Su21, RecurCase::Su22}) {
    auto const [m, n] = recur_species(c);
    for (int len = 0; len <= 6; ++len) {
      for (auto const &d : enumerate_motifs(len)) { CHECK(degeneracy_recur(d, c) == degeneracy_poly(d, m, n)); }
    }
  }
}

TEST_CASE("su(2|2) recursion reduces to su(2|1) and su(2)")
{
  // In the (2|2) variable set, keep a single fermion (e_1(y) = y_1, e_2(y) = 0)
  // or none at all (e_1(y) = e_2(y) = 0).
  MotifRecurInputs in21 = MotifRecurInputs::for_species(2, 2);
  in21.e1y = SymPoly::y(2, 2, 0);
  in21.e2y = SymPoly(2, 2);
  MotifRecurInputs in2 = in21;
  in2.e1y = SymPoly(2, 2);
  for (int len = 0; len <= 6; ++len) {
    for (auto const &d : enumerate_motifs(len)) {
      CHECK(degeneracy_recur_su22(d, MotifRecurInputs::for_species(2, 1)) == degeneracy_poly(d, 2, 1));
      CHECK(degeneracy_recur_su22(d, MotifRecurInputs::for_species(2, 0)) == degeneracy_poly(d, 2, 0));
      CHECK(degeneracy_recur_su22(d, in21).specialize_ones() == degeneracy_poly(d, 2, 1).specialize_ones());
      CHECK(degeneracy_recur_su22(d, in2).specialize_ones() == degeneracy_poly(d, 2, 0).specialize_ones());
    }
  }
}

TEST_CASE("degeneracy tables at N=4")
{
  std::vector<std::string> const order{"(000)", "(100)", "(010)", "(001)", "(101)", "(110)", "(011)", "(111)"};
  auto column = [&](int m, int n) {
    auto const by = degeneracies(m, n);
    std::vector<long long> c;
    for (auto const &s : order) { c.push_back(by.at(s)); }
    return c;
  };
  CHECK(column(2, 0) == std::vector<long long>{5, 3, 4, 3, 1, 0, 0, 0});
  CHECK(column(1, 1) == std::vector<long long>(8, 2));
  CHECK(column(3, 0) == std::vector<long long>{15, 15, 21, 15, 9, 3, 3, 0});
  CHECK(column(2, 1) == std::vector<long long>{9, 12, 16, 12, 12, 8, 8, 4});

  for (auto [m, n] : kPairs) {
    auto const table = degeneracy_table(5, m, n);
    CHECK(table.size() == 16);
    BigInt total = 0, expected = 1;
    for (auto const &r : table) {
      total += r.degeneracy;
      CHECK(r.degeneracy == r.degeneracy_poly.specialize_ones().eval_at_one());
      CHECK(r.degeneracy == decomposition_dimension(r.decomposition, m, n));
    }
    for (int i = 0; i < 5; ++i) { expected *= m + n; }
    CHECK(total == expected);
  }
}

TEST_CASE("decomposition table")
{
  std::pair<char const *, char const *> const rows[] = {
      {"(~)", "[1]"},          {"(0)", "[2]"},
      {"(1)", "[1^2]"},        {"(11)", "[1^3]"},
      {"(01)", "[2,1]"},       {"(10)", "[2,1]"},
      {"(00)", "[3]"},         {"(111)", "[1^4]"},
      {"(110)", "[2,1^2]"},    {"(101)", "[2^2] + [2,1^2]"},
      {"(011)", "[2,1^2]"},    {"(100)", "[3,1]"},
      {"(010)", "[3,1] + [2^2]"}, {"(001)", "[3,1]"},
      {"(000)", "[4]"},
  };
  for (auto const &[motif, expected] : rows) {
    CAPTURE(motif);
    CHECK(to_string(decompose_motif(Motif::parse(motif))) == expected);
  }
}
