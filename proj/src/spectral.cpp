#include "spectral.hpp"

namespace higgslab {

Field SpectralCoeffs::field() const {
  if (a.empty()) throw HlError(Errc::bad_input, "empty coefficient tuple");
  return a[0].field();
}

Poly SpectralCoeffs::a_coeff(int i) const {
  if (i == 0) return Poly::one(field());
  if (i < 0 || i > p) return Poly::zero(field());
  return a[i - 1];
}

void SpectralCoeffs::validate() const {
  if (p < 1) throw HlError(Errc::bad_input, "rank p must be positive");
  if (q < 0) throw HlError(Errc::bad_input, "rank q must be nonnegative");
  if (g < 2) throw HlError(Errc::bad_input, "base genus must be at least 2");
  if ((int)a.size() != p)
    throw HlError(Errc::bad_input, "expected p coefficient polynomials");
  Field f = field();
  for (const auto& ai : a)
    if (!(ai.field() == f)) throw HlError(Errc::bad_input, "mixed coefficient fields");
  if (ap().is_zero())
    throw HlError(Errc::zero_polynomial, "a_p must be nonzero");
}

BiPoly quotient_cover_poly(const SpectralCoeffs& sc) {
  Field f = sc.field();
  std::vector<Poly> c(sc.p + 1, Poly::zero(f));
  c[sc.p] = Poly::one(f);
  for (int i = 1; i <= sc.p; ++i) c[sc.p - i] = sc.a_coeff(i);
  return BiPoly(f, std::move(c));
}

BiPoly char_poly_model(const SpectralCoeffs& sc) {
  BiPoly even = quotient_cover_poly(sc).stretch2();
  Field f = sc.field();
  std::vector<Poly> shift(sc.q + 1, Poly::zero(f));
  shift[sc.q] = Poly::one(f);
  return even * BiPoly(f, std::move(shift));
}

RegularityReport regularity_check(const SpectralCoeffs& sc) {
  sc.validate();
  RegularityReport r;
  r.ap_squarefree = poly_squarefree(sc.ap());
  r.ap_coprime_prev = gcd(sc.ap(), sc.a_coeff(sc.p - 1)).is_unit();
  BiPoly pbar = quotient_cover_poly(sc);
  r.discriminant = resultant_aux(pbar, pbar.derivative_aux());
  r.disc_nonzero = !r.discriminant.is_zero();
  return r;
}

std::vector<Poly> complete_homogeneous(const SpectralCoeffs& sc, int upto) {
  Field f = sc.field();
  std::vector<Poly> h;
  h.reserve(upto + 1);
  h.push_back(Poly::one(f));
  for (int j = 1; j <= upto; ++j) {
    Poly s = Poly::zero(f);
    for (int u = 0; u < j; ++u) s = s + h[u] * sc.a_coeff(j - u);
    h.push_back(-s);
  }
  return h;
}

CoverGenera cover_genera(int p, int g) {
  if (p < 1 || g < 2) throw HlError(Errc::bad_input, "need p >= 1 and g >= 2");
  CoverGenera c;
  long long pp = p, gg = g;
  c.g_spectral = 4 * pp * pp * (gg - 1) + 1;
  c.g_quotient = (2 * pp * pp - pp) * (gg - 1) + 1;
  c.g_auxiliary = (2 * pp + 2) * (gg - 1) + 1;
  c.half_degree = 2 * pp * (gg - 1);
  c.rh_identity = (c.g_auxiliary - 1) - c.half_degree == 2 * (gg - 1);
  return c;
}

std::vector<Scalar> branch_points(const SpectralCoeffs& sc) {
  sc.validate();
  if (!poly_squarefree(sc.ap()))
    throw HlError(Errc::bad_input, "a_p must be squarefree");
  return field_roots(sc.ap());
}

CoverModel cover_model(const SpectralCoeffs& sc) {
  CoverModel m;
  m.quotient = quotient_cover_poly(sc);
  m.spectral = m.quotient.stretch2();
  m.full = char_poly_model(sc);
  Field f = sc.field();
  std::vector<Poly> zc = {-sc.ap(), Poly::zero(f), Poly::one(f)};
  m.auxiliary = BiPoly(f, std::move(zc));
  m.branch = branch_points(sc);
  return m;
}

}  // namespace higgslab
