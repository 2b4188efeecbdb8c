#include "charclasses.hpp"

namespace higgslab {

namespace {

int norm_bit(int b) { return b & 1; }

void check_bits(const Z2Vec& v, const char* what) {
  for (int b : v)
    if (b != 0 && b != 1) throw HlError(Errc::bad_input, std::string(what) + " must be 0/1");
}

}  // namespace

Z2Mat Z2Mat::identity(int n) {
  Z2Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Z2Mat Z2Mat::transpose() const {
  Z2Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Z2Mat operator*(const Z2Mat& x, const Z2Mat& y) {
  if (x.cols != y.rows) throw HlError(Errc::shape_mismatch, "GF(2) product shapes");
  Z2Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (!x.at(i, k)) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) ^= y.at(k, j);
    }
  return r;
}

Z2Vec apply(const Z2Mat& m, const Z2Vec& x) {
  if ((int)x.size() != m.cols)
    throw HlError(Errc::shape_mismatch, "GF(2) vector length");
  Z2Vec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] ^= m.at(i, j) & norm_bit(x[j]);
  return r;
}

Z2SymplecticSpace Z2SymplecticSpace::standard(int g) {
  if (g < 0) throw HlError(Errc::bad_input, "negative genus");
  Z2SymplecticSpace s;
  s.g = g;
  s.gram = Z2Mat(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    s.gram.at(i, g + i) = 1;
    s.gram.at(g + i, i) = 1;
  }
  return s;
}

void Z2SymplecticSpace::validate() const {
  if (gram.rows != 2 * g || gram.cols != 2 * g)
    throw HlError(Errc::shape_mismatch, "pairing must be 2g x 2g");
  if (!(gram == standard(g).gram))
    throw HlError(Errc::unsupported, "pairing must be in the standard block form");
}

int Z2SymplecticSpace::pair(const Z2Vec& x, const Z2Vec& y) const {
  Z2Vec gy = apply(gram, y);
  if (x.size() != gy.size()) throw HlError(Errc::shape_mismatch, "pairing lengths");
  int r = 0;
  for (size_t i = 0; i < x.size(); ++i) r ^= norm_bit(x[i]) & gy[i];
  return r;
}

QuadraticRefinement QuadraticRefinement::arf_zero_default(const Z2SymplecticSpace& s) {
  return from_diagonal(s, Z2Vec(s.dim(), 0));
}

QuadraticRefinement QuadraticRefinement::from_diagonal(const Z2SymplecticSpace& s,
                                                       const Z2Vec& diag) {
  s.validate();
  check_bits(diag, "diagonal");
  if ((int)diag.size() != s.dim())
    throw HlError(Errc::shape_mismatch, "diagonal length must be 2g");
  QuadraticRefinement q;
  q.space = s;
  q.u = Z2Mat(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    q.u.at(i, i) = diag[i];
    for (int j = i + 1; j < s.dim(); ++j) q.u.at(i, j) = s.gram.at(i, j);
  }
  return q;
}

void QuadraticRefinement::validate() const {
  space.validate();
  if (u.rows != space.dim() || u.cols != space.dim())
    throw HlError(Errc::shape_mismatch, "refinement matrix must be 2g x 2g");
  for (int i = 0; i < u.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (u.at(i, j)) throw HlError(Errc::bad_input, "refinement matrix must be upper triangular");
  // polarization q(x+y)+q(x)+q(y) = x^T (U+U^T) y forces U+U^T = gram
  Z2Mat sym = u;
  Z2Mat ut = u.transpose();
  for (int i = 0; i < u.rows; ++i)
    for (int j = 0; j < u.cols; ++j) sym.at(i, j) ^= ut.at(i, j);
  if (!(sym == space.gram))
    throw HlError(Errc::degenerate_form, "polarization does not match the pairing");
}

int QuadraticRefinement::eval(const Z2Vec& x) const {
  if ((int)x.size() != space.dim())
    throw HlError(Errc::shape_mismatch, "vector length must be 2g");
  int r = 0;
  for (int i = 0; i < u.rows; ++i) {
    if (!norm_bit(x[i])) continue;
    for (int j = i; j < u.cols; ++j) r ^= u.at(i, j) & norm_bit(x[j]);
  }
  return r;
}

int arf_invariant(const QuadraticRefinement& q) {
  q.validate();
  int g = q.space.g;
  int r = 0;
  for (int i = 0; i < g; ++i) {
    Z2Vec a(q.space.dim(), 0), b(q.space.dim(), 0);
    a[i] = 1;
    b[g + i] = 1;
    r ^= q.eval(a) & q.eval(b);
  }
  return r;
}

long long refinement_zero_count(const QuadraticRefinement& q) {
  q.validate();
  int n = q.space.dim();
  if (n > 24) throw HlError(Errc::unsupported, "enumeration limited to 2g <= 24");
  long long zeros = 0;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    Z2Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = (int)(mask >> i & 1);
    zeros += q.eval(x) == 0;
  }
  return zeros;
}

NormMap NormMap::coordinate_default(int g_sbar, int g_sigma) {
  if (g_sbar < g_sigma || g_sigma < 0)
    throw HlError(Errc::bad_input, "norm default needs g_sbar >= g_sigma >= 0");
  Z2Mat proj(g_sigma, g_sbar);
  for (int i = 0; i < g_sigma; ++i) proj.at(i, i) = 1;
  NormMap out;
  out.nm = Z2Mat(2 * g_sigma, 2 * g_sbar);
  out.pull = Z2Mat(2 * g_sbar, 2 * g_sigma);
  for (int i = 0; i < g_sigma; ++i) {
    out.nm.at(i, i) = 1;
    out.nm.at(g_sigma + i, g_sbar + i) = 1;
    out.pull.at(i, i) = 1;
    out.pull.at(g_sbar + i, g_sigma + i) = 1;
  }
  return out;
}

void NormMap::validate(const Z2SymplecticSpace& sbar,
                       const Z2SymplecticSpace& sigma) const {
  sbar.validate();
  sigma.validate();
  if (nm.rows != sigma.dim() || nm.cols != sbar.dim() ||
      pull.rows != sbar.dim() || pull.cols != sigma.dim())
    throw HlError(Errc::shape_mismatch, "norm/pullback shapes");
  // <Nm x, y>_Sigma = <x, pull y>_Sbar as the matrix identity
  // Nm^T J_Sigma = J_Sbar pull
  if (!(nm.transpose() * sigma.gram == sbar.gram * pull))
    throw HlError(Errc::degenerate_form, "norm map is not adjoint to the pullback");
}

OmegaClasses omega_classes(const Z2Vec& l, const QuadraticRefinement& q_sbar,
                           const QuadraticRefinement& q_sigma,
                           const NormMap& nm) {
  q_sbar.validate();
  q_sigma.validate();
  nm.validate(q_sbar.space, q_sigma.space);
  check_bits(l, "L");
  if ((int)l.size() != q_sbar.space.dim())
    throw HlError(Errc::shape_mismatch, "L must live in the double cover torsion");
  OmegaClasses out;
  out.w1 = apply(nm.nm, l);
  out.w2 = q_sbar.eval(l) ^ q_sigma.eval(out.w1);
  return out;
}

int omega2_V(int q, const Z2Vec& l, const QuadraticRefinement& q_sbar,
             const QuadraticRefinement& q_sigma, const NormMap& nm,
             int w2_v0prime, int delta) {
  if (q < 1) throw HlError(Errc::bad_input, "q must be at least 1");
  if ((w2_v0prime != 0 && w2_v0prime != 1) || (delta != 0 && delta != 1))
    throw HlError(Errc::bad_input, "class bits must be 0/1");
  if (q <= 2 && w2_v0prime == 1)
    throw HlError(Errc::rank_error,
                  "V_0' has rank <= 1 for q <= 2, so omega_2(V_0') = 0");
  OmegaClasses w = omega_classes(l, q_sbar, q_sigma, nm);
  return w.w2 ^ w2_v0prime ^ delta;
}

int whitney_additivity_check(const Z2Vec& w1v, int w2v, const Z2Vec& w1w,
                             int w2w) {
  check_bits(w1v, "w1(V)");
  check_bits(w1w, "w1(W)");
  if ((w2v & ~1) || (w2w & ~1))
    throw HlError(Errc::bad_input, "second classes must be 0/1");
  if (w1v != w1w)
    throw HlError(Errc::first_class_mismatch,
                  "first classes of the summands must agree");
  return w2v ^ w2w;
}

}  // namespace higgslab
