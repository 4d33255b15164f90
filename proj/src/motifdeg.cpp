#include "motifkit/motifdeg.hpp"

#include "motifkit/parallel.hpp"

#include <stdexcept>

namespace motifkit {

int motif_energy(Motif const &d)
{
  int e = 0;
  for (int j = 0; j < d.size(); ++j) { e += (j + 1) * d.bits[j]; }
  return e;
}

SymPoly degeneracy_poly(Motif const &d, int m, int n)
{
  if (m < 1) { throw std::invalid_argument("degeneracy_poly: m >= 1 required"); }
  return super_skew_strip(motif_to_strip(d), m, n);
}

std::pair<int, int> recur_species(RecurCase c)
{
  switch (c) {
  case RecurCase::Su2: return {2, 0};
  case RecurCase::Su21: return {2, 1};
  case RecurCase::Su22: return {2, 2};
  }
  throw std::invalid_argument("unsupported recursion case");
}

MotifRecurInputs MotifRecurInputs::for_species(int m, int n)
{
  return {elementary_in(Block::X, 1, m, n), elementary_in(Block::X, 2, m, n), elementary_in(Block::Y, 1, m, n),
          elementary_in(Block::Y, 2, m, n)};
}

namespace {

int delta(std::uint8_t bit, int value) { return bit == value ? 1 : 0; }

// g_0 = S_[1], g_1(0) = S_[2], g_1(1) = S_[1^2], written through e_1, e_2 of
// both blocks (exact while m, n <= 2).
SymPoly base_case(Motif const &d, MotifRecurInputs const &in)
{
  if (d.size() == 0) { return in.e1x + in.e1y; }
  if (d.bits[0] == 0) { return in.e1x * in.e1x - in.e2x + in.e1x * in.e1y + in.e2y; }
  return in.e2x + in.e1x * in.e1y + in.e1y * in.e1y - in.e2y;
}

Motif prefix(Motif const &d, int len) { return Motif{{d.bits.begin(), d.bits.begin() + len}}; }

QSeriesPoly as_coeff(int v) { return QSeriesPoly(static_cast<long long>(v)); }

// Shared skeleton: g_N = first(d_N) g_{N-1} - second(d_{N-1}, d_N) g_{N-2}.
template <typename First, typename Second>
SymPoly run_recursion(Motif const &d, MotifRecurInputs const &in, First first, Second second)
{
  int const N = d.size();
  if (N <= 1) { return base_case(d, in); }
  std::vector<SymPoly> g{base_case(prefix(d, 0), in), base_case(prefix(d, 1), in)};
  for (int k = 2; k <= N; ++k) {
    std::uint8_t const dk = d.bits[k - 1], dk1 = d.bits[k - 2];
    g.push_back(first(dk) * g[k - 1] - second(dk1, dk) * g[k - 2]);
  }
  return g.back();
}

SymPoly recur_su2(Motif const &d)
{
  auto const in = MotifRecurInputs::for_species(2, 0);
  return run_recursion(
    d, in, [&](std::uint8_t dn) { return in.e1x * as_coeff(delta(dn, 0)); },
    [&](std::uint8_t dn1, std::uint8_t dn) {
      int const a = delta(dn, 0) * delta(dn1, 0) - delta(dn, 1) * delta(dn1, 0);
      return in.e2x * as_coeff(a);
    });
}

SymPoly recur_su21(Motif const &d)
{
  auto const in = MotifRecurInputs::for_species(2, 1);
  return run_recursion(
    d, in, [&](std::uint8_t dn) { return in.e1x * as_coeff(delta(dn, 0)) + in.e1y * as_coeff(delta(dn, 1)); },
    [&](std::uint8_t dn1, std::uint8_t dn) {
      int const a = delta(dn, 0) * delta(dn1, 0) - delta(dn, 1) * delta(dn1, 0);
      return in.e2x * as_coeff(a);
    });
}

} // namespace

SymPoly degeneracy_recur_su22(Motif const &d, MotifRecurInputs const &in)
{
  return run_recursion(
    d, in, [&](std::uint8_t dn) { return in.e1x * as_coeff(delta(dn, 0)) + in.e1y * as_coeff(delta(dn, 1)); },
    [&](std::uint8_t dn1, std::uint8_t dn) {
      int const a = delta(dn, 0) * delta(dn1, 0) - delta(dn, 1) * delta(dn1, 0);
      int const b = delta(dn, 0) * delta(dn1, 1) - delta(dn, 1) * delta(dn1, 1);
      return in.e2x * as_coeff(a) - in.e2y * as_coeff(b);
    });
}

SymPoly degeneracy_recur(Motif const &d, RecurCase c)
{
  switch (c) {
  case RecurCase::Su2: return recur_su2(d);
  case RecurCase::Su21: return recur_su21(d);
  case RecurCase::Su22: return degeneracy_recur_su22(d, MotifRecurInputs::for_species(2, 2));
  }
  throw std::invalid_argument("unsupported recursion case");
}

DecompositionList decompose_motif(Motif const &d)
{
  BorderStrip const s = motif_to_strip(d);
  auto const [outer, inner] = strip_to_skew(s);
  // The r x r e-determinant of the strip is the same polynomial as the h form
  // but much sparser, so prefer it unless the strip has fewer rows.
  if (outer.length() < s.columns()) { return schur_expand(skew_schur(outer, inner, s.boxes())); }
  return schur_expand(skew_strip(s, s.boxes()));
}

BigInt decomposition_dimension(DecompositionList const &d, int m, int n)
{
  BigInt total = 0;
  for (auto const &entry : d) { total += entry.multiplicity * super_schur(entry.shape, m, n).specialize_ones().eval_at_one(); }
  return total;
}

std::vector<MotifRecord> degeneracy_table(int N, int m, int n)
{
  if (N < 1) { throw std::invalid_argument("degeneracy_table: N >= 1 required"); }
  auto const               motifs = enumerate_motifs(N - 1);
  std::vector<MotifRecord> out(motifs.size());
  parallel_for(motifs.size(), [&](std::size_t i) {
    MotifRecord &r = out[i];
    r.motif = motifs[i];
    r.energy = motif_energy(r.motif);
    r.degeneracy_poly = degeneracy_poly(r.motif, m, n);
    r.degeneracy = r.degeneracy_poly.specialize_ones().eval_at_one();
    r.decomposition = decompose_motif(r.motif);
  });
  return out;
}

} // namespace motifkit
