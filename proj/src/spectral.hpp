#pragma once

#include "matrix.hpp"
#include "poly.hpp"

namespace higgslab {

// Coefficient tuple (a_1, ..., a_p) of a spectral curve
// eta^q (eta^{2p} + a_1 eta^{2p-2} + ... + a_p), with ranks (p, q) and the
// base genus g used by the counting layer. Chart polynomials are free of any
// degree constraint tied to g; the two layers are deliberately decoupled.
struct SpectralCoeffs {
  int p = 0;
  int q = 0;
  int g = 2;
  std::vector<Poly> a;  // a_1 .. a_p

  Field field() const;
  const Poly& ap() const { return a.back(); }
  Poly a_coeff(int i) const;  // a_i with a_0 := 1 and a_i := 0 for i > p
  void validate() const;
};

// Full model char poly in eta.
BiPoly char_poly_model(const SpectralCoeffs& sc);
// Quotient-cover polynomial xi^p + a_1 xi^{p-1} + ... + a_p (xi = eta^2).
BiPoly quotient_cover_poly(const SpectralCoeffs& sc);

// Regularity of the spectral data: (i) a_p squarefree, (ii) a_p coprime to
// a_{p-1}, (iii) the quotient cover polynomial has nonzero discriminant.
struct RegularityReport {
  bool ap_squarefree = false;
  bool ap_coprime_prev = false;
  bool disc_nonzero = false;
  Poly discriminant;
  bool ok() const { return ap_squarefree && ap_coprime_prev && disc_nonzero; }
};
RegularityReport regularity_check(const SpectralCoeffs& sc);

// h_0 = 1, h_j = -sum_{u<j} h_u a_{j-u}: complete homogeneous symmetric
// polynomials of the roots of the quotient cover polynomial.
std::vector<Poly> complete_homogeneous(const SpectralCoeffs& sc, int upto);

struct CoverGenera {
  long long g_spectral;    // 4p^2(g-1) + 1
  long long g_quotient;    // (2p^2 - p)(g-1) + 1
  long long g_auxiliary;   // (2p+2)(g-1) + 1
  long long half_degree;   // 2p(g-1), the divisor degree entering the count
  bool rh_identity;        // (g_auxiliary - 1) - half_degree == 2(g-1)
};
CoverGenera cover_genera(int p, int g);

// Roots of a_p in the coefficient field; requires a_p squarefree and split.
std::vector<Scalar> branch_points(const SpectralCoeffs& sc);

struct CoverModel {
  BiPoly spectral;          // eta^{2p} + a_1 eta^{2p-2} + ... + a_p
  BiPoly full;              // eta^q * spectral
  BiPoly quotient;          // xi^p + ... + a_p
  BiPoly auxiliary;         // zeta^2 - a_p
  std::vector<Scalar> branch;
};
CoverModel cover_model(const SpectralCoeffs& sc);

}  // namespace higgslab
