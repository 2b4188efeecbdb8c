#include "higgs_chart.hpp"

#include <numeric>

namespace higgslab {

namespace {

bool symmetric(const MatPoly& m) { return m.transpose() == m; }
bool skew(const MatPoly& m) { return m.transpose() == -m; }

int weight_sum(const std::vector<int>& w) {
  return std::accumulate(w.begin(), w.end(), 0);
}

// d == unit * target as polynomials
bool unit_multiple(const Poly& d, const Poly& target) {
  if (d.is_zero() || target.is_zero()) return false;
  if (d.deg() != target.deg()) return false;
  return d * target.lc() == target * d.lc();
}

MatPoly glue_phi(Field f, int n, int p, const MatPoly& beta, const MatPoly& gamma) {
  MatPoly phi(f, n + p, n + p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) phi.at(i, n + j) = beta.at(i, j);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < n; ++j) phi.at(n + i, j) = gamma.at(i, j);
  return phi;
}

}  // namespace

MatPoly OrthHiggsChart::phi() const {
  return glue_phi(qv.field(), rank_v(), p(), beta, gamma);
}

void OrthHiggsChart::validate_shapes() const {
  int n = rank_v(), pp = p();
  if (pp < 1 || q() < 0)
    throw HlError(Errc::bad_input, "need rank W >= 1 and rank V >= rank W");
  if (qv.rows() != n || qv.cols() != n || qw.rows() != pp || qw.cols() != pp ||
      beta.rows() != n || beta.cols() != pp || gamma.rows() != pp || gamma.cols() != n)
    throw HlError(Errc::shape_mismatch, "chart matrix shapes");
  if ((int)v0_weights.size() != q())
    throw HlError(Errc::shape_mismatch, "kernel weight list size");
}

MatPoly SymplecticChart::phi() const {
  return glue_phi(qv.field(), (int)v_weights.size(), (int)w_weights.size(), beta, gamma);
}

OrthHiggsChart assemble_orth(std::vector<int> v_weights, std::vector<int> w_weights,
                             std::vector<int> v0_weights, MatPoly qv, MatPoly qw,
                             MatPoly beta) {
  OrthHiggsChart c;
  c.v_weights = std::move(v_weights);
  c.w_weights = std::move(w_weights);
  int p = (int)c.w_weights.size(), q = (int)c.v_weights.size() - p;
  if (v0_weights.empty() && q > 0) {
    // default kernel weight convention: rank-split q-1 zeros and one -p
    v0_weights.assign(q, 0);
    v0_weights.back() = -p;
  }
  c.v0_weights = std::move(v0_weights);
  c.qv = std::move(qv);
  c.qw = std::move(qw);
  c.beta = std::move(beta);
  if (!symmetric(c.qv) || !symmetric(c.qw))
    throw HlError(Errc::bad_input, "Gram matrices must be symmetric");
  if (!is_unimodular(c.qv) || !is_unimodular(c.qw))
    throw HlError(Errc::degenerate_form, "Gram matrices must be unimodular");
  c.gamma = inverse_unimodular(c.qw) * c.beta.transpose() * c.qv;
  c.validate_shapes();
  return c;
}

CheckList verify_so(const OrthHiggsChart& chart, const SpectralCoeffs& sc) {
  chart.validate_shapes();
  sc.validate();
  CheckList out;
  Field f = chart.qv.field();
  int n = chart.rank_v(), p = chart.p();
  if (p != sc.p || chart.q() != sc.q)
    throw HlError(Errc::shape_mismatch, "chart ranks do not match spectral data");
  if (sc.q == 0)
    throw HlError(Errc::unsupported, "rank W = rank V charts are out of scope");

  out.add("qv_symmetric", symmetric(chart.qv));
  out.add("qw_symmetric", symmetric(chart.qw));
  out.add("qv_unimodular", is_unimodular(chart.qv), "det Q_V = " + det(chart.qv).str());
  out.add("qw_unimodular", is_unimodular(chart.qw), "det Q_W = " + det(chart.qw).str());
  out.add("transpose_relation", chart.qw * chart.gamma == chart.beta.transpose() * chart.qv);

  MatPoly phi = chart.phi();
  MatPoly g = MatPoly::block_diag(chart.qv, -chart.qw);
  out.add("skew_adjoint", (phi.transpose() * g + g * phi).is_zero());

  MatPoly f_inv = MatPoly::block_diag(MatPoly::identity(f, n), -MatPoly::identity(f, p));
  out.add("involution_conjugation", f_inv * phi * f_inv == -phi);

  BiPoly cp = char_poly(phi);
  BiPoly model = char_poly_model(sc);
  out.add("char_poly_model", cp == model,
          "char poly " + cp.str() + " vs model " + model.str());

  out.add("weight_balance", weight_sum(chart.v_weights) == weight_sum(chart.w_weights),
          "sum w(V) != sum w(W)");
  return out;
}

QuadraticBundle kernel_quadratic(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                                 CheckList* checks) {
  chart.validate_shapes();
  sc.validate();
  MatPoly k = saturated_kernel(chart.gamma);
  if (k.cols() != chart.q())
    throw HlError(Errc::rank_error, "kernel of gamma has rank " +
                                        std::to_string(k.cols()) + ", expected " +
                                        std::to_string(chart.q()));
  QuadraticBundle v0;
  v0.weights = chart.v0_weights;
  v0.basis = k;
  v0.q0 = k.transpose() * chart.qv * k;
  Poly d = det(v0.q0);
  record_or_throw(checks, Errc::determinant_mismatch, "q0_det_matches_ap",
          unit_multiple(d, sc.ap()),
          "det Q_0 = " + d.str() + ", a_p = " + sc.ap().str());
  record_or_throw(checks, Errc::bad_input, "v0_weight_sum",
          weight_sum(v0.weights) == -chart.p(),
          "kernel weights must sum to -p");
  return v0;
}

UppQuotient upp_quotient(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                         CheckList* checks) {
  chart.validate_shapes();
  sc.validate();
  Field f = chart.qv.field();
  int n = chart.rank_v(), q = chart.q(), p = chart.p();
  MatPoly k = saturated_kernel(chart.gamma);
  if (k.cols() != q)
    throw HlError(Errc::rank_error, "kernel of gamma has unexpected rank");
  UppQuotient u;
  u.completion = unimodular_completion(k);
  MatPoly x = inverse_unimodular(u.completion) * chart.beta;
  u.beta_plus = x.submatrix(q, n, 0, p);
  u.gamma_plus = chart.gamma * u.completion.submatrix(0, n, q, n);
  Poly d = det(u.gamma_plus);
  record_or_throw(checks, Errc::degenerate_form, "gamma_plus_constant_unit",
          d.is_unit(), "det gamma_+ = " + d.str());
  MatPoly phi_plus = glue_phi(f, p, p, u.beta_plus, u.gamma_plus);
  BiPoly model = quotient_cover_poly(sc).stretch2();
  BiPoly cp = char_poly(phi_plus);
  record_or_throw(checks, Errc::determinant_mismatch, "quotient_char_poly", cp == model,
          "char poly " + cp.str() + " vs model " + model.str());
  return u;
}

namespace {

MatPoly triple_beta_f(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                      CheckList* checks) {
  UppQuotient u = upp_quotient(chart, sc, checks);
  return u.gamma_plus * u.beta_plus;
}

}  // namespace

SpCayley cayley_symplectic(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                           CheckList* checks) {
  Field f = chart.qv.field();
  int p = chart.p();
  SpCayley s;
  for (int w : chart.w_weights) s.twice_weights.push_back(2 * w + 1);
  for (int w : chart.w_weights) s.twice_weights.push_back(2 * w - 1);
  s.beta_f = triple_beta_f(chart, sc, checks);
  MatPoly zero(f, p, p);
  s.omega = MatPoly::vcat(MatPoly::hcat(zero, chart.qw),
                          MatPoly::hcat(-chart.qw, zero));
  s.phi_f = glue_phi(f, p, p, s.beta_f, MatPoly::identity(f, p));
  record_or_throw(checks, Errc::degenerate_form, "omega_skew", skew(s.omega), "");
  record_or_throw(checks, Errc::degenerate_form, "omega_unimodular", is_unimodular(s.omega),
          "det omega = " + det(s.omega).str());
  record_or_throw(checks, Errc::degenerate_form, "omega_summands_isotropic",
          s.omega.submatrix(0, p, 0, p).is_zero() &&
              s.omega.submatrix(p, 2 * p, p, 2 * p).is_zero(),
          "");
  record_or_throw(checks, Errc::degenerate_form, "phi_f_skew_adjoint",
          (s.phi_f.transpose() * s.omega + s.omega * s.phi_f).is_zero(),
          "Q_W beta_F fails to be symmetric");
  return s;
}

CayleyTriple cayley_triple(const OrthHiggsChart& chart, const SpectralCoeffs& sc,
                           CheckList* checks) {
  CayleyTriple ct;
  ct.w_weights = chart.w_weights;
  ct.qw = chart.qw;
  ct.beta_f = triple_beta_f(chart, sc, checks);
  ct.companion_frame = false;
  CheckList inv = verify_triple(ct, sc);
  if (checks) checks->merge(inv);
  else if (!inv.ok())
    for (const auto& c : inv.checks)
      if (!c.pass) throw HlError(Errc::determinant_mismatch, c.name + ": " + c.detail);
  return ct;
}

CheckList verify_triple(const CayleyTriple& ct, const SpectralCoeffs& sc) {
  sc.validate();
  CheckList out;
  int p = ct.p();
  if (p != sc.p || ct.beta_f.rows() != p || ct.beta_f.cols() != p)
    throw HlError(Errc::shape_mismatch, "triple shape");
  out.add("qw_symmetric", symmetric(ct.qw));
  out.add("qw_unimodular", is_unimodular(ct.qw), "det Q_W = " + det(ct.qw).str());
  MatPoly qb = ct.qw * ct.beta_f;
  out.add("qw_betaf_symmetric", symmetric(qb), "Q_W beta_F not symmetric");
  Poly d = det(ct.beta_f);
  Poly expect = p % 2 == 0 ? sc.ap() : -sc.ap();
  out.add("betaf_det", d == expect,
          "det beta_F = " + d.str() + ", expected " + expect.str());
  BiPoly cp = char_poly(ct.beta_f);
  BiPoly model = quotient_cover_poly(sc);
  out.add("betaf_char_poly", cp == model,
          "char poly " + cp.str("xi") + " vs model " + model.str("xi"));
  return out;
}

CayleyTriple pushforward_trivial(const SpectralCoeffs& sc) {
  sc.validate();
  Field f = sc.field();
  int p = sc.p;
  CayleyTriple ct;
  for (int i = 0; i < p; ++i) ct.w_weights.push_back(p - 1 - 2 * i);
  auto h = complete_homogeneous(sc, p - 1);
  ct.qw = MatPoly(f, p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i + j >= p - 1) ct.qw.at(i, j) = h[i + j - (p - 1)];
  ct.beta_f = MatPoly(f, p, p);
  for (int i = 1; i < p; ++i) ct.beta_f.at(i, i - 1) = Poly::one(f);
  for (int i = 0; i < p; ++i) ct.beta_f.at(i, p - 1) = -sc.a_coeff(p - i);
  ct.companion_frame = true;
  return ct;
}

CheckList verify_sp(const SymplecticChart& chart, const SpectralCoeffs& sc) {
  sc.validate();
  CheckList out;
  Field f = chart.qv.field();
  int nv = (int)chart.v_weights.size(), nw = (int)chart.w_weights.size();
  if (nv != 2 * (sc.p + sc.q) || nw != 2 * sc.p)
    throw HlError(Errc::shape_mismatch, "symplectic chart ranks");
  if (chart.qv.rows() != nv || chart.qw.rows() != nw ||
      chart.beta.rows() != nv || chart.beta.cols() != nw ||
      chart.gamma.rows() != nw || chart.gamma.cols() != nv)
    throw HlError(Errc::shape_mismatch, "symplectic chart matrix shapes");

  out.add("qv_skew", skew(chart.qv));
  out.add("qw_skew", skew(chart.qw));
  out.add("qv_unimodular", is_unimodular(chart.qv), "det Q_V = " + det(chart.qv).str());
  out.add("qw_unimodular", is_unimodular(chart.qw), "det Q_W = " + det(chart.qw).str());
  out.add("transpose_relation", chart.qw * chart.gamma == chart.beta.transpose() * chart.qv);

  MatPoly phi = chart.phi();
  MatPoly g = MatPoly::block_diag(chart.qv, -chart.qw);
  out.add("skew_adjoint", (phi.transpose() * g + g * phi).is_zero());

  MatPoly f_inv = MatPoly::block_diag(MatPoly::identity(f, nv), -MatPoly::identity(f, nw));
  out.add("involution_conjugation", f_inv * phi * f_inv == -phi);

  BiPoly quot = quotient_cover_poly(sc).stretch2();
  BiPoly model = quot * quot;
  {
    std::vector<Poly> shift(2 * sc.q + 1, Poly::zero(f));
    shift[2 * sc.q] = Poly::one(f);
    model = model * BiPoly(f, std::move(shift));
  }
  BiPoly cp = char_poly(phi);
  out.add("char_poly_model", cp == model,
          "char poly " + cp.str() + " vs model " + model.str());
  return out;
}

SymplecticChart doubled_symplectic(const OrthHiggsChart& chart) {
  chart.validate_shapes();
  Field f = chart.qv.field();
  int n = chart.rank_v(), p = chart.p();
  SymplecticChart s;
  s.v_weights = chart.v_weights;
  s.v_weights.insert(s.v_weights.end(), chart.v_weights.begin(), chart.v_weights.end());
  s.w_weights = chart.w_weights;
  s.w_weights.insert(s.w_weights.end(), chart.w_weights.begin(), chart.w_weights.end());
  MatPoly zv(f, n, n), zw(f, p, p);
  s.qv = MatPoly::vcat(MatPoly::hcat(zv, chart.qv), MatPoly::hcat(-chart.qv, zv));
  s.qw = MatPoly::vcat(MatPoly::hcat(zw, chart.qw), MatPoly::hcat(-chart.qw, zw));
  s.beta = MatPoly::block_diag(chart.beta, chart.beta);
  s.gamma = MatPoly::block_diag(chart.gamma, chart.gamma);
  return s;
}

}  // namespace higgslab
