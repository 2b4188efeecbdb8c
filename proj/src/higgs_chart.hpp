#pragma once

#include "checks.hpp"
#include "spectral.hpp"

namespace higgslab {

// Chart data of an orthogonal pair (V, W): symmetric unimodular Gram
// matrices, the Higgs block beta: W -> V (a K-twist in the weight metadata)
// and its transpose gamma: V -> W determined by Q_W gamma = beta^T Q_V.
// Weights count K-powers per basis summand; they never enter the chart
// algebra, only bookkeeping identities.
struct OrthHiggsChart {
  std::vector<int> v_weights;
  std::vector<int> w_weights;
  std::vector<int> v0_weights;  // declared weights of ker(gamma)
  MatPoly qv, qw, beta, gamma;

  int p() const { return (int)w_weights.size(); }
  int q() const { return (int)v_weights.size() - (int)w_weights.size(); }
  int rank_v() const { return (int)v_weights.size(); }
  MatPoly phi() const;  // [[0, beta],[gamma, 0]] acting on V + W
  void validate_shapes() const;
};

// Restriction of Q_V to the kernel of gamma; rank q with determinant a unit
// multiple of a_p.
struct QuadraticBundle {
  std::vector<int> weights;
  MatPoly q0;
  MatPoly basis;  // columns in V-coordinates; identity when standalone
  int rank() const { return q0.rows(); }
};

// Quotient data V1 = V / ker(gamma) in a polynomial complement basis.
struct UppQuotient {
  MatPoly completion;  // [kernel | complement], unimodular
  MatPoly beta_plus;   // W -> V1
  MatPoly gamma_plus;  // V1 -> W, constant determinant
};

// Symplectic chart F = (W x K^{1/2}) + (W x K^{-1/2}) with
// Phi_F = [[0, beta_F],[Id, 0]]. Weights are stored doubled because of the
// half-integer twist.
struct SpCayley {
  std::vector<int> twice_weights;
  MatPoly omega;   // [[0, Q_W],[-Q_W, 0]]
  MatPoly beta_f;
  MatPoly phi_f;
};

// K^2-twisted triple (W, Q_W, beta_F): Q_W beta_F symmetric,
// det beta_F = (-1)^p a_p, char poly of beta_F equal to the quotient cover
// polynomial.
struct CayleyTriple {
  std::vector<int> w_weights;
  MatPoly qw;
  MatPoly beta_f;
  bool companion_frame = false;  // set by the trivialized direct image model
  int p() const { return qw.rows(); }
};

// Chart data of a symplectic pair: skew Gram matrices, same transpose rule.
struct SymplecticChart {
  std::vector<int> v_weights;
  std::vector<int> w_weights;
  MatPoly qv, qw, beta, gamma;
  MatPoly phi() const;
};

// gamma is derived from the other data; shapes and form properties checked.
OrthHiggsChart assemble_orth(std::vector<int> v_weights, std::vector<int> w_weights,
                             std::vector<int> v0_weights, MatPoly qv, MatPoly qw,
                             MatPoly beta);

// Full orthogonal verification: form symmetry and unimodularity, transpose
// relation, skew-adjointness of Phi for Q_V - Q_W, conjugation by
// diag(Id, -Id), characteristic polynomial against the model, weight sums.
CheckList verify_so(const OrthHiggsChart& chart, const SpectralCoeffs& sc);

QuadraticBundle kernel_quadratic(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                                 CheckList* checks = nullptr);

UppQuotient upp_quotient(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                         CheckList* checks = nullptr);

SpCayley cayley_symplectic(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                           CheckList* checks = nullptr);

CayleyTriple cayley_triple(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                           CheckList* checks = nullptr);

// Invariants of a triple from any source.
CheckList verify_triple(const CayleyTriple& ct, const SpectralCoeffs& sc);

// Companion-frame triple of the trivialized direct image: W has weights
// p-1, p-3, ..., -(p-1), Q_W is the Hankel table of complete homogeneous
// polynomials and beta_F the companion matrix of the quotient cover
// polynomial.
CayleyTriple pushforward_trivial(const SpectralCoeffs& sc);

CheckList verify_sp(const SymplecticChart& chart, const SpectralCoeffs& sc);

// Two copies of an orthogonal chart glued into a symplectic one; the
// structural passage used by the rank-doubling tests.
SymplecticChart doubled_symplectic(const OrthHiggsChart& chart);

}  // namespace higgslab
