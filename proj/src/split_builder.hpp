#pragma once

#include "langlands.hpp"

namespace higgslab {

// Split-form construction data: q = 1 spectral coefficients plus one sign per
// branch point of a_p, listed in the canonical (sorted) branch point order.
struct SplitSpec {
  SpectralCoeffs sc;
  std::vector<int> signs;

  void validate() const;
  std::vector<Scalar> points() const;
};

// a_p/2 factored along the sign assignment: s_plus is the monic product over
// the +1 points, s_minus carries lead(a_p)/2 and the -1 points.
struct SignFactors {
  Poly s_plus;
  Poly s_minus;
};
SignFactors factor_signs(const SplitSpec& spec);

// Bundle-level summand bookkeeping for the built chart: W as a sum of K
// powers, the V summands W_0 + B + B^* and their degrees on a genus g curve.
struct SplitSummands {
  std::vector<int> w_powers;
  std::vector<int> w0_powers;
  int b_plus = 0;
  int b_minus = 0;
  int deg_b = 0;
  int deg_bstar = 0;
  int rank_v = 0;
  int total_degree = 0;
};
SplitSummands summand_bookkeeping(const SplitSpec& spec);

// Assembles the SO(p+1,p) chart for the sign assignment via the extension
// reconstruction, then cross-checks rank, weight and Hankel bookkeeping.
OrthHiggsChart build_split(const SplitSpec& spec, CheckList* checks = nullptr);

// b = (b_plus - b_minus)/2 after normalizing b_plus >= b_minus. Census mode
// additionally requires |D| = 4p(g-1) and 0 <= b <= 2p(g-1).
int b_invariant(const SplitSpec& spec, bool census_mode);

// Pulls the sign assignment back along a permutation of the branch points;
// the b invariant is asserted unchanged.
SplitSpec monodromy_apply(const SplitSpec& spec, const std::vector<int>& perm);

// Change-of-basis automorphism on W: the identity with the column vector
// (a_{p-1}, ..., a_1, 1) spliced into the last column.
MatPoly psi_matrix(const SpectralCoeffs& sc);

// Q_1 = psi^T (Q_W beta_F) psi, block diagonal with the W_0 pairing on top
// and -a_p in the corner. Companion frames only.
MatPoly q1_form(const CayleyTriple& ct, const SpectralCoeffs& sc);

// Deterministic comparison key for a chart, used to identify charts that are
// byte-identical rather than merely isomorphic.
std::string chart_key(const OrthHiggsChart& chart);

}  // namespace higgslab
