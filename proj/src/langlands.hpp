#pragma once

#include "checks.hpp"
#include "higgs_chart.hpp"

namespace higgslab {

// Orthogonal bundle on the auxiliary double cover zeta^2 = a_p, decomposed
// into line summands over a constant chart frame. The involution over each
// ramification point must be a Q_M-isometry of type (q-1, 1); the chart ops
// additionally need a single matrix valid in the global frame (list of size 1,
// or equal entries).
struct EquivariantBundle {
  std::vector<int> summand_degrees;
  MatScalar qm;
  std::vector<MatScalar> sigma;
  int orientation = 1;
  bool decomposable = true;
  int q() const { return qm.rows(); }
  void validate() const;
};

// Extension datum per branch point x: the image i_x of the canonical
// normalized generator of N_x = null(Q_0(x)) in W-coordinates. Points are the
// roots of a_p in canonical order.
struct ExtensionData {
  std::vector<Scalar> points;
  std::vector<std::vector<Scalar>> vectors;
  void validate(const SpectralCoeffs& sc, int w_rank) const;
};

// The rank-1 quadratic bundle (K^{-p}, a_p) of the split model.
QuadraticBundle trivial_quadratic_bundle(const SpectralCoeffs& sc);

// Invariant direct image of (M, sigma) under the double cover: block form
// diag(Q_M on the +1 eigenspace, a_p * Q_M(w, w)), weights (0,...,0,-p).
// Records the local model diag(z - x, units) verdict at every branch point.
QuadraticBundle invariant_direct_image(const EquivariantBundle& m,
                                       const SpectralCoeffs& sc,
                                       CheckList* checks = nullptr);

struct LiftResult {
  EquivariantBundle bundle;
  MatScalar frame;  // congruence with frame^t Q0 frame = direct image Gram
};
// Inverse construction: recovers a constant-frame equivariant model from a
// quadratic bundle with det(Q0) = unit * a_p, plus the congruence certificate.
LiftResult equivariant_lift(const QuadraticBundle& v0, const SpectralCoeffs& sc,
                            CheckList* checks = nullptr);

// Degree test over all sigma-invariant Q_M-isotropic coordinate subbundles.
CheckList stability_check(const EquivariantBundle& m);

// Kernel and isometry conditions for the extension datum at every branch
// point, with the derivative cross identity Q_W(beta_F'(x) i, i) = -a_p'(x).
CheckList compatibility_check(const ExtensionData& ext, const CayleyTriple& ct,
                              const QuadraticBundle& v0, const SpectralCoeffs& sc);

// Reconstructs the orthogonal chart from (W, beta_F), V_0 and the extension
// datum: free basis of the sections of (W otimes K^{-1}) oplus V_0 with first
// order poles along the prescribed lines, then Q_V, beta, gamma in that basis.
// Throws kernel/isometry violations unless the datum is compatible.
OrthHiggsChart build_extension(const CayleyTriple& ct, const QuadraticBundle& v0,
                               const ExtensionData& ext, const SpectralCoeffs& sc,
                               CheckList* checks = nullptr);

// Same pipeline with the compatibility gate skipped; reports whether the
// resulting Q_V, beta, gamma are polynomial and Q_V unimodular instead of
// throwing. Incompatible data must fail the qv_unimodular verdict.
CheckList forced_extension_probe(const CayleyTriple& ct, const QuadraticBundle& v0,
                                 const ExtensionData& ext, const SpectralCoeffs& sc);

// The two admissible vectors at x are +-s j_x with j_x spanning ker beta_F(x)
// and s^2 Q_W(j, j)(x) = a_{p-1}(x). Sign eps = +1 selects i_x = -s j_x.
ExtensionData admissible_extension(const CayleyTriple& ct, const SpectralCoeffs& sc,
                                   const std::vector<int>& signs);

// For the companion frame, i_x = tau_x * j_x with tau_x in {+1, -1}; the pair
// {tau} and {-tau} describe isomorphic bundles.
std::vector<int> tau_from_extension(const ExtensionData& ext, const CayleyTriple& ct,
                                    const SpectralCoeffs& sc);
ExtensionData extension_from_tau(const std::vector<int>& tau, const CayleyTriple& ct,
                                 const SpectralCoeffs& sc);
std::vector<int> canonical_tau(std::vector<int> tau);

// dim so(q) * (g-1) + (q-1) * degL
long long stack_dimension(int q, int g, int deg_l);

}  // namespace higgslab
