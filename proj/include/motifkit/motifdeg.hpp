#pragma once

// Motif energies, degeneracy polynomials g_N(d) and hyper-multiplet
// decompositions.

#include "motifkit/shapes.hpp"
#include "motifkit/symmetric.hpp"

#include <vector>

namespace motifkit {

/// E(d) = sum_j j d_j.
int motif_energy(Motif const &d);

/// g(d): the super Schur polynomial of the border strip of d.  Requires m >= 1.
SymPoly degeneracy_poly(Motif const &d, int m, int n);

enum class RecurCase
{
  Su2,
  Su21,
  Su22
};

/// (m, n) of a recursion case.
std::pair<int, int> recur_species(RecurCase c);

/// The elementary polynomials entering the length-two motif recursions,
/// all living in the same SymPoly(m, n) ring.
struct MotifRecurInputs
{
  SymPoly e1x, e2x, e1y, e2y;

  static MotifRecurInputs for_species(int m, int n);
};

/// g(d) from the printed two-step motif recursion of the given case.
SymPoly degeneracy_recur(Motif const &d, RecurCase c);

/// The su(2|2) recursion evaluated with caller-supplied e's, e.g. with
/// e_2(y) = 0 to recover the su(2|1) case.
SymPoly degeneracy_recur_su22(Motif const &d, MotifRecurInputs const &in);

struct MotifRecord
{
  Motif             motif;
  int               energy = 0;
  SymPoly           degeneracy_poly;
  BigInt            degeneracy;
  DecompositionList decomposition;
};

/// One record per motif of length N - 1 (lexicographic); motifs whose
/// polynomial vanishes carry degeneracy 0.
std::vector<MotifRecord> degeneracy_table(int N, int m, int n);

/// Schur expansion of the ordinary skew Schur polynomial of the strip of d,
/// in as many variables as the strip has boxes.
DecompositionList decompose_motif(Motif const &d);

/// sum over the decomposition of multiplicity * S_lambda(1, 1).
BigInt decomposition_dimension(DecompositionList const &d, int m, int n);

} // namespace motifkit
