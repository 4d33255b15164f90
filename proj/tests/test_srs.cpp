#include "motifkit/srs.hpp"

#include "motifkit/symmetric.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace motifkit;

namespace {

std::pair<int, int> const kPairs[] = {{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};

QSeriesPoly poly(std::vector<long long> c)
{
  std::vector<BigInt> b(c.begin(), c.end());
  return QSeriesPoly(0, b);
}

// (q^{-1};q^{-1})_b as a Laurent polynomial, by direct multiplication.
QSeriesPoly inverse_pochhammer(int b)
{
  QSeriesPoly p = 1;
  for (int i = 1; i <= b; ++i) { p *= QSeriesPoly(1) - QSeriesPoly::monomial(1, -i); }
  return p;
}

} // namespace

TEST_CASE("srs low degrees")
{
  for (auto [m, n] : kPairs) {
    CHECK(srs_direct(SrsContext(m, n, 0)) == SymPoly::constant(m, n, 1));
    CHECK(srs_direct(SrsContext(m, n, 1)) == super_c(1, m, n));
  }
  SymPoly const x = SymPoly::x(1, 1, 0), y = SymPoly::y(1, 1, 0);
  QSeriesPoly const q = QSeriesPoly::q();
  SymPoly const h2 = x * x + q * (y * y) + (QSeriesPoly(1) + q) * (x * y);
  CHECK(srs_direct(SrsContext(1, 1, 2)) == h2);
  CHECK(srs_recur1(SrsContext(1, 1, 2)) == h2);
  CHECK(srs_recur2(SrsContext(1, 1, 2)) == q * super_schur(Partition({1, 1}), 1, 1) + super_schur(Partition({2}), 1, 1));
  CHECK(srs_strip_sum(SrsContext(2, 1, 2)) ==
        q * super_schur(Partition({1, 1}), 2, 1) + super_schur(Partition({2}), 2, 1));
  CHECK(srs_strip_sum(SrsContext(2, 2, 1)) == super_schur(Partition({1}), 2, 2));
}

TEST_CASE("context validation")
{
  CHECK_THROWS_AS(SrsContext(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(SrsContext(1, -1, 3), std::invalid_argument);
  CHECK_THROWS_AS(srs_strip_sum(SrsContext(1, 1, 0)), std::invalid_argument);
}

TEST_CASE("laurent rewriting of the inverse pochhammer")
{
  // (q^{-1};q^{-1})_b = (-1)^b q^{-b(b+1)/2} (q;q)_b
  for (int b = 0; b <= 4; ++b) {
    QSeriesPoly rhs = q_pochhammer(b).shifted(-b * (b + 1) / 2);
    if (b % 2 == 1) { rhs = -rhs; }
    CHECK(inverse_pochhammer(b) == rhs);
  }
}

TEST_CASE("four routes agree")
{
  for (auto [m, n] : kPairs) {
    auto const r1 = srs_recur1_sequence(SrsContext(m, n, 8));
    auto const r2 = srs_recur2_sequence(SrsContext(m, n, 8));
    for (int N = 1; N <= 8; ++N) {
      CAPTURE(m);
      CAPTURE(n);
      CAPTURE(N);
      SrsContext const ctx(m, n, N);
      SymPoly const    h = srs_direct(ctx);
      CHECK(r1[N] == h);
      CHECK(r2[N] == h);
      CHECK(srs_strip_sum(ctx) == h);
    }
  }
}

TEST_CASE("classical rogers-szego reduction")
{
  for (int m = 1; m <= 3; ++m) {
    for (int N = 0; N <= 7; ++N) {
      SymPoly const classical = rogers_szego_classical(m, N);
      CHECK(srs_recur1(SrsContext(m, 0, N)) == classical);
      CHECK(srs_recur2(SrsContext(m, 0, N)) == classical);
    }
  }
}

TEST_CASE("strip exponents are motif energies")
{
  CHECK(strip_q_exponent(BorderStrip{{1, 1}}) == 0);
  CHECK(strip_q_exponent(BorderStrip{{2}}) == 1);
}

TEST_CASE("partition function")
{
  CHECK(partition_function(SrsContext(2, 0, 4)) == poly({5, 3, 4, 3, 1}));
  CHECK(partition_function(SrsContext(1, 1, 4)) == poly({2, 2, 2, 4, 2, 2, 2}));
  CHECK(partition_function(SrsContext(2, 1, 4)) == poly({9, 12, 16, 20, 12, 8, 4}));
  for (auto [m, n] : kPairs) {
    for (int N = 0; N <= 8; ++N) {
      QSeriesPoly const z = partition_function(SrsContext(m, n, N));
      BigInt            total = 1;
      for (int i = 0; i < N; ++i) { total *= m + n; }
      CHECK(z.eval_at_one() == total);
      for (int k = z.low(); k <= z.high(); ++k) { CHECK(z.coeff(k) >= 0); }
      CHECK(z.low() >= 0);
    }
  }
  for (int N = 1; N <= 8; ++N) { CHECK(partition_function(SrsContext(1, 1, N)).high() == N * (N - 1) / 2); }
}

TEST_CASE("duality")
{
  CHECK(duality_check(SrsContext(1, 1, 3)));
  CHECK(duality_check(SrsContext(2, 1, 5)));
  CHECK(duality_check(SrsContext(2, 2, 6)));
  CHECK_THROWS_AS(duality_check(SrsContext(2, 0, 3)), std::invalid_argument);
  CHECK(reciprocal_transform(partition_function(SrsContext(2, 1, 3)), 3) == partition_function(SrsContext(1, 2, 3)));
}
