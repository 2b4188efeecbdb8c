#include "langlands.hpp"

#include <algorithm>

namespace higgslab {

namespace {

bool unit_multiple(const Poly& d, const Poly& target) {
  if (d.is_zero() || target.is_zero()) return false;
  if (d.deg() != target.deg()) return false;
  return d * target.lc() == target * d.lc();
}

MatScalar col_from(Field f, const std::vector<Scalar>& v) {
  MatScalar m(f, (int)v.size(), 1);
  for (int i = 0; i < (int)v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

MatScalar cols_from(Field f, int rows, const std::vector<std::vector<Scalar>>& vs) {
  MatScalar m(f, rows, (int)vs.size());
  for (int j = 0; j < (int)vs.size(); ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = vs[j][i];
  return m;
}

std::vector<Scalar> null_direction(const MatScalar& a, const std::string& what) {
  auto ns = null_space(a);
  if (ns.size() != 1)
    throw HlError(Errc::rank_error, what + ": null space has dimension " +
                                        std::to_string(ns.size()) + ", expected 1");
  return ns[0];
}

// the single involution valid in the global constant frame
MatScalar common_sigma(const EquivariantBundle& m, size_t points) {
  if (m.sigma.size() != 1 && m.sigma.size() != points)
    throw HlError(Errc::shape_mismatch,
                  "involution list must have one entry or one per branch point");
  for (const MatScalar& a : m.sigma)
    if (a != m.sigma.front())
      throw HlError(Errc::unsupported,
                    "involutions differing across branch points have no constant frame");
  return m.sigma.front();
}

// canonical generator of null(Q_0(x)), scaled so (Q_0(n,n)/a_p)(x) = 1
MatScalar normalized_generator(const QuadraticBundle& v0, const SpectralCoeffs& sc,
                               const Scalar& x) {
  MatScalar v = col_from(v0.q0.field(), null_direction(eval_mat(v0.q0, x), "Q_0(x)"));
  MatPoly vp = scalar_to_poly(v);
  Poly s = (vp.transpose() * v0.q0 * vp).at(0, 0);
  Scalar num = s.derivative().eval(x);
  Scalar den = sc.ap().derivative().eval(x);
  if (den.is_zero())
    throw HlError(Errc::degenerate_form, "a_p needs a simple zero at " + x.str());
  if (num.is_zero())
    throw HlError(Errc::degenerate_form,
                  "Q_0 normalization ratio vanishes at " + x.str());
  Scalar t = (den / num).sqrt();  // not_split_scalar when absent
  return v.map([&](const Scalar& e) { return e * t; });
}

}  // namespace

void EquivariantBundle::validate() const {
  Field f = qm.field();
  int n = qm.rows();
  if (n < 1 || qm.cols() != n)
    throw HlError(Errc::shape_mismatch, "Q_M must be square of rank >= 1");
  if (qm.transpose() != qm)
    throw HlError(Errc::bad_input, "Q_M must be symmetric");
  if (det(qm).is_zero())
    throw HlError(Errc::degenerate_form, "Q_M must be nondegenerate");
  if ((int)summand_degrees.size() != n)
    throw HlError(Errc::shape_mismatch, "summand degree list size");
  if (orientation != 1 && orientation != -1)
    throw HlError(Errc::bad_input, "orientation must be +1 or -1");
  if (sigma.empty())
    throw HlError(Errc::bad_input, "at least one involution required");
  MatScalar id = MatScalar::identity(f, n);
  for (const MatScalar& a : sigma) {
    if (a.rows() != n || a.cols() != n)
      throw HlError(Errc::shape_mismatch, "involution shape");
    if (a * a != id)
      throw HlError(Errc::bad_input, "sigma action must square to the identity");
    if (a.transpose() * qm * a != qm)
      throw HlError(Errc::bad_input, "sigma action must be a Q_M isometry");
    if (rank(a - id) != 1)
      throw HlError(Errc::type_mismatch, "involution must have type (q-1,1)");
  }
}

void ExtensionData::validate(const SpectralCoeffs& sc, int w_rank) const {
  auto branch = branch_points(sc);
  if (points != branch)
    throw HlError(Errc::bad_input,
                  "extension points must be the roots of a_p in canonical order");
  if (vectors.size() != points.size())
    throw HlError(Errc::shape_mismatch, "one vector per branch point required");
  for (const auto& v : vectors)
    if ((int)v.size() != w_rank)
      throw HlError(Errc::shape_mismatch, "extension vectors must have length p");
}

QuadraticBundle trivial_quadratic_bundle(const SpectralCoeffs& sc) {
  sc.validate();
  Field f = sc.field();
  QuadraticBundle v0;
  v0.weights = {-sc.p};
  v0.q0 = MatPoly(f, 1, 1);
  v0.q0.at(0, 0) = sc.ap();
  v0.basis = MatPoly::identity(f, 1);
  return v0;
}

QuadraticBundle invariant_direct_image(const EquivariantBundle& m,
                                       const SpectralCoeffs& sc, CheckList* checks) {
  m.validate();
  sc.validate();
  if (m.q() != sc.q)
    throw HlError(Errc::shape_mismatch, "rank of M must equal q");
  Field f = m.qm.field();
  auto branch = branch_points(sc);
  if (branch.empty())
    throw HlError(Errc::bad_input, "a_p must be nonconstant");
  MatScalar a = common_sigma(m, branch.size());
  int q = m.q();
  MatScalar id = MatScalar::identity(f, q);
  MatScalar u = cols_from(f, q, null_space(a - id));
  MatScalar w = cols_from(f, q, null_space(a + id));
  if (u.cols() != q - 1 || w.cols() != 1)
    throw HlError(Errc::internal, "involution eigenspace dimensions");
  if (!(u.transpose() * m.qm * w).is_zero())
    throw HlError(Errc::internal, "eigenspaces must be Q_M orthogonal");
  MatScalar gplus = u.transpose() * m.qm * u;
  Scalar cw = (w.transpose() * m.qm * w).at(0, 0);

  QuadraticBundle v0;
  v0.weights.assign(q, 0);
  v0.weights.back() = -sc.p;
  MatPoly tail(f, 1, 1);
  tail.at(0, 0) = sc.ap() * cw;
  v0.q0 = MatPoly::block_diag(scalar_to_poly(gplus), tail);
  v0.basis = scalar_to_poly(MatScalar::hcat(u, w));

  Poly d = det(v0.q0);
  record_or_throw(checks, Errc::determinant_mismatch, "q0_det_matches_ap",
                  unit_multiple(d, sc.ap()),
                  "det Q_0 = " + d.str() + ", a_p = " + sc.ap().str());
  Congruence cong = congruent_diagonalize(gplus);
  bool units = !cw.is_zero();
  for (const Scalar& e : cong.diagonal) units = units && !e.is_zero();
  Poly dap = sc.ap().derivative();
  for (const Scalar& x : branch) {
    bool simple = sc.ap().eval(x).is_zero() && !dap.eval(x).is_zero();
    record_or_throw(checks, Errc::degenerate_form, "local_model[" + x.str() + "]",
                    units && simple,
                    "adapted frame is not diag(z - x, units) at " + x.str());
  }
  return v0;
}

LiftResult equivariant_lift(const QuadraticBundle& v0, const SpectralCoeffs& sc,
                            CheckList* checks) {
  sc.validate();
  Field f = v0.q0.field();
  int q = v0.q0.rows();
  if (q < 1 || v0.q0.cols() != q)
    throw HlError(Errc::shape_mismatch, "Q_0 must be square");
  if (v0.q0.transpose() != v0.q0)
    throw HlError(Errc::bad_input, "Q_0 must be symmetric");
  if (sc.ap().deg() < 1)
    throw HlError(Errc::bad_input, "a_p must be nonconstant");
  Poly d = det(v0.q0);
  if (!unit_multiple(d, sc.ap()))
    throw HlError(Errc::determinant_mismatch,
                  "det Q_0 = " + d.str() + " is not a unit multiple of a_p");
  auto branch = branch_points(sc);

  std::vector<Scalar> dir;
  for (const Scalar& x : branch) {
    auto nd = null_direction(eval_mat(v0.q0, x), "Q_0(x)");
    if (dir.empty()) dir = nd;
    else if (nd != dir)
      throw HlError(Errc::unsupported,
                    "null directions vary across branch points; no constant frame");
  }
  if (checks) checks->add("null_direction_constant", true);
  MatScalar v = col_from(f, dir);

  MatPoly qv_col = v0.q0 * scalar_to_poly(v);
  MatScalar w0(f, q, 1);
  for (int i = 0; i < q; ++i) {
    const Poly& e = qv_col.at(i, 0);
    if (!e.divisible_by(sc.ap()))
      throw HlError(Errc::unsupported, "Q_0 v is not divisible by a_p");
    Poly r = e.is_zero() ? Poly::zero(f) : e.exact_div(sc.ap());
    if (!r.is_constant())
      throw HlError(Errc::unsupported, "Q_0 v / a_p is not constant");
    w0.at(i, 0) = r.constant_term();
  }
  Scalar c = (v.transpose() * w0).at(0, 0);
  if (c.is_zero())
    throw HlError(Errc::degenerate_form, "null direction pairs to zero");

  MatScalar u = cols_from(f, q, null_space(w0.transpose()));
  if (u.cols() != q - 1)
    throw HlError(Errc::internal, "complement dimension");
  MatPoly g = scalar_to_poly(u).transpose() * v0.q0 * scalar_to_poly(u);
  MatScalar gc(f, q - 1, q - 1);
  for (int i = 0; i < q - 1; ++i)
    for (int j = 0; j < q - 1; ++j) {
      if (!g.at(i, j).is_constant())
        throw HlError(Errc::unsupported,
                      "invariant Gram block is not constant in this frame");
      gc.at(i, j) = g.at(i, j).constant_term();
    }
  if (q > 1 && det(gc).is_zero())
    throw HlError(Errc::degenerate_form, "invariant Gram block degenerates");
  if (checks) checks->add("gram_block_constant", true);

  LiftResult out;
  MatScalar tail(f, 1, 1);
  tail.at(0, 0) = c;
  out.bundle.qm = MatScalar::block_diag(gc, tail);
  out.bundle.summand_degrees.assign(q, 0);
  MatScalar invol = MatScalar::identity(f, q);
  invol.at(q - 1, q - 1) = -Scalar::one(f);
  out.bundle.sigma = {invol};
  out.bundle.orientation = 1;
  out.bundle.decomposable = true;
  out.bundle.validate();
  out.frame = MatScalar::hcat(u, v);

  MatPoly lhs = scalar_to_poly(out.frame).transpose() * v0.q0 * scalar_to_poly(out.frame);
  MatPoly rtail(f, 1, 1);
  rtail.at(0, 0) = sc.ap() * c;
  MatPoly rhs = MatPoly::block_diag(scalar_to_poly(gc), rtail);
  record_or_throw(checks, Errc::internal, "roundtrip_congruence", lhs == rhs,
                  "frame congruence does not reproduce the direct image Gram");
  return out;
}

CheckList stability_check(const EquivariantBundle& m) {
  m.validate();
  if (!m.decomposable)
    throw HlError(Errc::indecomposable,
                  "stability is only decided for decomposable models");
  CheckList out;
  int q = m.q();
  bool stable = true;
  int found = 0;
  for (unsigned mask = 1; mask < (1u << q); ++mask) {
    bool invariant = true;
    for (const MatScalar& a : m.sigma)
      for (int j = 0; j < q && invariant; ++j) {
        if (!(mask >> j & 1)) continue;
        for (int i = 0; i < q; ++i)
          if (!(mask >> i & 1) && !a.at(i, j).is_zero()) { invariant = false; break; }
      }
    if (!invariant) continue;
    bool isotropic = true;
    for (int i = 0; i < q && isotropic; ++i)
      for (int j = 0; j < q; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !m.qm.at(i, j).is_zero()) {
          isotropic = false;
          break;
        }
    if (!isotropic) continue;
    ++found;
    long long deg = 0;
    std::string which;
    for (int j = 0; j < q; ++j)
      if (mask >> j & 1) {
        deg += m.summand_degrees[j];
        which += (which.empty() ? "" : ",") + std::to_string(j);
      }
    bool pass = deg <= 0;
    stable = stable && pass;
    out.add("isotropic_degree[" + which + "]", pass, "degree " + std::to_string(deg));
  }
  if (found == 0) out.add("no_invariant_isotropics", true);
  out.add("stable", stable);
  return out;
}

CheckList compatibility_check(const ExtensionData& ext, const CayleyTriple& ct,
                              const QuadraticBundle& v0, const SpectralCoeffs& sc) {
  sc.validate();
  if (ct.p() != sc.p)
    throw HlError(Errc::shape_mismatch, "triple rank must equal p");
  ext.validate(sc, ct.p());
  Field f = ct.qw.field();
  CheckList out;
  MatPoly dbeta = ct.beta_f.map([](const Poly& e) { return e.derivative(); });
  Poly dap = sc.ap().derivative();
  for (size_t k = 0; k < ext.points.size(); ++k) {
    const Scalar& x = ext.points[k];
    normalized_generator(v0, sc, x);  // the normalization must exist over the field
    MatScalar i = col_from(f, ext.vectors[k]);
    MatScalar bfx = eval_mat(ct.beta_f, x);
    out.add("kernel_condition[" + x.str() + "]", (bfx * i).is_zero(),
            "beta_F(x) i_x != 0");
    MatScalar qwx = eval_mat(ct.qw, x);
    Scalar pair = (i.transpose() * qwx * i).at(0, 0);
    Scalar target = sc.a_coeff(sc.p - 1).eval(x);
    out.add("isometry_condition[" + x.str() + "]", pair == target,
            "Q_W(i,i) = " + pair.str() + " but a_{p-1}(x) = " + target.str());
    MatScalar di = eval_mat(dbeta, x) * i;
    Scalar cross = (di.transpose() * qwx * i).at(0, 0);
    Scalar want = -dap.eval(x);
    out.add("isometry_cross_identity[" + x.str() + "]", cross == want,
            "Q_W(beta_F'(x) i, i) = " + cross.str() + " but -a_p'(x) = " + want.str());
  }
  return out;
}

namespace {

struct RawExtension {
  MatRat qv, beta, gamma;
  ModuleBasis mb;
};

RawExtension extension_normal_form(const CayleyTriple& ct, const QuadraticBundle& v0,
                                   const ExtensionData& ext, const SpectralCoeffs& sc) {
  Field f = ct.qw.field();
  int p = ct.p(), q = v0.q0.rows(), n = p + q;
  MatPoly qv_prime = MatPoly::block_diag(ct.qw * ct.beta_f, v0.q0);

  MatRat gens(f, n, n + (int)ext.points.size());
  for (int i = 0; i < n; ++i) gens.at(i, i) = RatFunc::one(f);
  for (size_t k = 0; k < ext.points.size(); ++k) {
    MatScalar nhat = normalized_generator(v0, sc, ext.points[k]);
    Poly pole = Poly::linear_root(ext.points[k]);
    for (int i = 0; i < p; ++i)
      gens.at(i, n + (int)k) = RatFunc(Poly::constant(-ext.vectors[k][i]), pole);
    for (int i = 0; i < q; ++i)
      gens.at(p + i, n + (int)k) = RatFunc(Poly::constant(nhat.at(i, 0)), pole);
  }

  RawExtension raw;
  raw.mb = smith_hermite_basis(gens);
  if (raw.mb.basis.cols() != n)
    throw HlError(Errc::rank_error, "section module is not free of rank p + q");
  const MatRat& b = raw.mb.basis;
  raw.qv = b.transpose() * to_rat(qv_prime) * b;
  MatPoly incl = MatPoly::vcat(MatPoly::identity(f, p), MatPoly(f, q, p));
  raw.beta = solve(b, to_rat(incl));
  MatPoly proj = MatPoly::hcat(ct.beta_f, MatPoly(f, p, q));
  raw.gamma = to_rat(proj) * b;
  return raw;
}

std::vector<int> extension_weights(const CayleyTriple& ct, const QuadraticBundle& v0) {
  std::vector<int> w;
  for (int x : ct.w_weights) w.push_back(x - 1);
  for (int x : v0.weights) w.push_back(-x);
  return w;
}

}  // namespace

OrthHiggsChart build_extension(const CayleyTriple& ct, const QuadraticBundle& v0,
                               const ExtensionData& ext, const SpectralCoeffs& sc,
                               CheckList* checks) {
  CheckList compat = compatibility_check(ext, ct, v0, sc);
  if (checks) checks->merge(compat);
  if (!compat.ok()) {
    for (const auto& c : compat.checks) {
      if (c.pass) continue;
      Errc code = c.name.rfind("kernel_condition", 0) == 0 ? Errc::kernel_violation
                                                           : Errc::isometry_violation;
      throw HlError(code, c.name + ": " + c.detail);
    }
  }
  RawExtension raw = extension_normal_form(ct, v0, ext, sc);
  OrthHiggsChart chart;
  chart.w_weights = ct.w_weights;
  chart.v_weights = extension_weights(ct, v0);
  chart.v0_weights = v0.weights;
  chart.qw = ct.qw;
  chart.qv = to_poly(raw.qv);      // holomorphy_failure signals a bug here
  chart.beta = to_poly(raw.beta);
  chart.gamma = to_poly(raw.gamma);
  if (!is_unimodular(chart.qv))
    throw HlError(Errc::nonunimodular,
                  "Q_V determinant " + det(chart.qv).str() + " is not a unit");
  CheckList so = verify_so(chart, sc);
  if (checks) checks->merge(so);
  else if (!so.ok())
    for (const auto& c : so.checks)
      if (!c.pass) throw HlError(Errc::internal, c.name + ": " + c.detail);
  return chart;
}

CheckList forced_extension_probe(const CayleyTriple& ct, const QuadraticBundle& v0,
                                 const ExtensionData& ext, const SpectralCoeffs& sc) {
  sc.validate();
  ext.validate(sc, ct.p());
  CheckList out;
  RawExtension raw = extension_normal_form(ct, v0, ext, sc);
  auto polynomial = [](const MatRat& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_polynomial()) return false;
    return true;
  };
  bool qv_poly = polynomial(raw.qv);
  out.add("qv_entries_polynomial", qv_poly);
  out.add("beta_entries_polynomial", polynomial(raw.beta));
  out.add("gamma_entries_polynomial", polynomial(raw.gamma));
  RatFunc d = det(raw.qv);
  bool unimod = qv_poly && d.is_polynomial() && d.num().is_unit();
  out.add("qv_unimodular", unimod, "det Q_V = " + d.str());
  return out;
}

ExtensionData admissible_extension(const CayleyTriple& ct, const SpectralCoeffs& sc,
                                   const std::vector<int>& signs) {
  sc.validate();
  if (ct.p() != sc.p)
    throw HlError(Errc::shape_mismatch, "triple rank must equal p");
  Field f = ct.qw.field();
  int p = ct.p();
  auto branch = branch_points(sc);
  if (signs.size() != branch.size())
    throw HlError(Errc::bad_input, "one sign per branch point required");
  for (int s : signs)
    if (s != 1 && s != -1)
      throw HlError(Errc::bad_input, "signs must be +1 or -1");
  ExtensionData ext;
  ext.points = branch;
  for (size_t k = 0; k < branch.size(); ++k) {
    const Scalar& x = branch[k];
    std::vector<Scalar> j;
    if (ct.companion_frame) {
      for (int i = 0; i < p; ++i) j.push_back(sc.a_coeff(p - 1 - i).eval(x));
    } else {
      j = null_direction(eval_mat(ct.beta_f, x), "beta_F(x)");
    }
    MatScalar jc = col_from(f, j);
    Scalar qjj = (jc.transpose() * eval_mat(ct.qw, x) * jc).at(0, 0);
    if (qjj.is_zero())
      throw HlError(Errc::degenerate_form,
                    "kernel vector is isotropic at " + x.str());
    Scalar ratio = sc.a_coeff(p - 1).eval(x) / qjj;
    Scalar s = ratio.is_one() ? Scalar::one(f) : ratio.sqrt();
    Scalar lead = signs[k] == 1 ? -s : s;
    std::vector<Scalar> i;
    for (const Scalar& e : j) i.push_back(e * lead);
    ext.vectors.push_back(std::move(i));
  }
  return ext;
}

std::vector<int> tau_from_extension(const ExtensionData& ext, const CayleyTriple& ct,
                                    const SpectralCoeffs& sc) {
  sc.validate();
  if (!ct.companion_frame)
    throw HlError(Errc::unsupported, "tau data is defined for the companion frame");
  ext.validate(sc, ct.p());
  int p = ct.p();
  std::vector<int> tau;
  for (size_t k = 0; k < ext.points.size(); ++k) {
    const Scalar& x = ext.points[k];
    std::vector<Scalar> j;
    for (int i = 0; i < p; ++i) j.push_back(sc.a_coeff(p - 1 - i).eval(x));
    bool plus = ext.vectors[k] == j;
    std::vector<Scalar> nj;
    for (const Scalar& e : j) nj.push_back(-e);
    bool minus = ext.vectors[k] == nj;
    if (!plus && !minus)
      throw HlError(Errc::bad_input,
                    "extension vector at " + x.str() + " is not +-j_x");
    tau.push_back(plus ? 1 : -1);
  }
  return tau;
}

ExtensionData extension_from_tau(const std::vector<int>& tau, const CayleyTriple& ct,
                                 const SpectralCoeffs& sc) {
  sc.validate();
  if (!ct.companion_frame)
    throw HlError(Errc::unsupported, "tau data is defined for the companion frame");
  int p = ct.p();
  auto branch = branch_points(sc);
  if (tau.size() != branch.size())
    throw HlError(Errc::bad_input, "one tau per branch point required");
  ExtensionData ext;
  ext.points = branch;
  for (size_t k = 0; k < branch.size(); ++k) {
    if (tau[k] != 1 && tau[k] != -1)
      throw HlError(Errc::bad_input, "tau entries must be +1 or -1");
    std::vector<Scalar> i;
    for (int t = 0; t < p; ++t) {
      Scalar e = sc.a_coeff(p - 1 - t).eval(branch[k]);
      i.push_back(tau[k] == 1 ? e : -e);
    }
    ext.vectors.push_back(std::move(i));
  }
  return ext;
}

std::vector<int> canonical_tau(std::vector<int> tau) {
  for (int t : tau)
    if (t != 1 && t != -1)
      throw HlError(Errc::bad_input, "tau entries must be +1 or -1");
  if (!tau.empty() && tau.front() == -1)
    for (int& t : tau) t = -t;
  return tau;
}

long long stack_dimension(int q, int g, int deg_l) {
  if (q < 1 || g < 2 || deg_l < 1)
    throw HlError(Errc::bad_input, "need q >= 1, g >= 2, degL >= 1");
  return (long long)q * (q - 1) / 2 * (g - 1) + (long long)(q - 1) * deg_l;
}

}  // namespace higgslab
