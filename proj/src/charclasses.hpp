#pragma once

#include <utility>
#include <vector>

#include "field.hpp"

namespace higgslab {

// Dense GF(2) matrix, entries 0/1.
struct Z2Mat {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  Z2Mat() = default;
  Z2Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  int& at(int i, int j) { return a[(size_t)i * cols + j]; }
  int at(int i, int j) const { return a[(size_t)i * cols + j]; }
  static Z2Mat identity(int n);
  Z2Mat transpose() const;
  bool operator==(const Z2Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};
Z2Mat operator*(const Z2Mat& x, const Z2Mat& y);

using Z2Vec = std::vector<int>;
Z2Vec apply(const Z2Mat& m, const Z2Vec& x);

// Two-torsion of a Jacobian as a GF(2) symplectic space of dimension 2g in
// the standard block form [[0,I],[I,0]].
struct Z2SymplecticSpace {
  int g = 0;
  Z2Mat gram;

  static Z2SymplecticSpace standard(int g);
  int dim() const { return 2 * g; }
  void validate() const;
  int pair(const Z2Vec& x, const Z2Vec& y) const;
};

// Quadratic refinement q(x) = x^T U x of the standard pairing; U is upper
// triangular and the strict upper part is forced by polarization, so the
// refinement is exactly the choice of diagonal bits.
struct QuadraticRefinement {
  Z2SymplecticSpace space;
  Z2Mat u;

  static QuadraticRefinement arf_zero_default(const Z2SymplecticSpace& s);
  static QuadraticRefinement from_diagonal(const Z2SymplecticSpace& s,
                                           const Z2Vec& diag);
  void validate() const;
  int eval(const Z2Vec& x) const;
};

int arf_invariant(const QuadraticRefinement& q);

// #{x : q(x) = 0} by direct enumeration; the closed form is
// 2^{2g-1} + (-1)^Arf 2^{g-1}.
long long refinement_zero_count(const QuadraticRefinement& q);

// Norm map on two-torsion together with a pullback adjoint:
// <Nm x, y>_Sigma = <x, pull y>_Sbar.
struct NormMap {
  Z2Mat nm;
  Z2Mat pull;

  static NormMap coordinate_default(int g_sbar, int g_sigma);
  void validate(const Z2SymplecticSpace& sbar,
                const Z2SymplecticSpace& sigma) const;
};

// omega_1(W) = Nm(L), omega_2(W) = q_Sbar(L) + q_Sigma(Nm L).
struct OmegaClasses {
  Z2Vec w1;
  int w2 = 0;
};
OmegaClasses omega_classes(const Z2Vec& l, const QuadraticRefinement& q_sbar,
                           const QuadraticRefinement& q_sigma,
                           const NormMap& nm);

// omega_2(V) = omega_2(W) + w2_v0prime + delta. The rank q of the orthogonal
// complement bounds V_0': for q <= 2 it has rank <= 1 and w2_v0prime must
// vanish.
int omega2_V(int q, const Z2Vec& l, const QuadraticRefinement& q_sbar,
             const QuadraticRefinement& q_sigma, const NormMap& nm,
             int w2_v0prime, int delta);

// omega_2(V + W) = omega_2(V) + omega_2(W), defined only when the first
// classes agree.
int whitney_additivity_check(const Z2Vec& w1v, int w2v, const Z2Vec& w1w,
                             int w2w);

}  // namespace higgslab
