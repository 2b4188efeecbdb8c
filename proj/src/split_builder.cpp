#include "split_builder.hpp"

#include <sstream>

namespace higgslab {

namespace {

int count_plus(const std::vector<int>& signs) {
  int n = 0;
  for (int s : signs) n += s == 1;
  return n;
}

}  // namespace

void SplitSpec::validate() const {
  sc.validate();
  if (sc.q != 1)
    throw HlError(Errc::unsupported, "split construction requires q = 1");
  size_t nd = branch_points(sc).size();
  if (signs.size() != nd)
    throw HlError(Errc::shape_mismatch, "one sign per branch point expected");
  for (int s : signs)
    if (s != 1 && s != -1) throw HlError(Errc::bad_input, "signs must be +1 or -1");
}

std::vector<Scalar> SplitSpec::points() const { return branch_points(sc); }

SignFactors factor_signs(const SplitSpec& spec) {
  spec.validate();
  Field f = spec.sc.field();
  std::vector<Scalar> d = spec.points();
  SignFactors out{Poly::one(f), Poly::constant(spec.sc.ap().lc() / Scalar(f, 2))};
  for (size_t k = 0; k < d.size(); ++k) {
    Poly lin = Poly::linear_root(d[k]);
    if (spec.signs[k] == 1)
      out.s_plus = out.s_plus * lin;
    else
      out.s_minus = out.s_minus * lin;
  }
  Poly half_ap = spec.sc.ap() * Scalar(f, 2).inverse();
  if (out.s_plus * out.s_minus != half_ap)
    throw HlError(Errc::internal, "sign factorization does not multiply back");
  return out;
}

SplitSummands summand_bookkeeping(const SplitSpec& spec) {
  spec.validate();
  SplitSummands ss;
  int p = spec.sc.p, g = spec.sc.g;
  for (int w = p - 1; w >= -(p - 1); w -= 2) ss.w_powers.push_back(w);
  for (int w = p - 2; w >= -(p - 2); w -= 2) ss.w0_powers.push_back(w);
  ss.b_plus = count_plus(spec.signs);
  ss.b_minus = (int)spec.signs.size() - ss.b_plus;
  ss.deg_b = ss.b_plus - 2 * p * (g - 1);
  ss.deg_bstar = ss.b_minus - 2 * p * (g - 1);
  ss.rank_v = p + 1;
  ss.total_degree = ss.deg_b + ss.deg_bstar;
  return ss;
}

OrthHiggsChart build_split(const SplitSpec& spec, CheckList* checks) {
  factor_signs(spec);
  if (checks) checks->add("product_identity", true, "");

  CayleyTriple ct = pushforward_trivial(spec.sc);
  int p = spec.sc.p;
  bool hankel = true;
  for (int i = 0; i < p && hankel; ++i)
    for (int j = 0; j < p && hankel; ++j) {
      if (i + j < p - 1)
        hankel = ct.qw.at(i, j).is_zero();
      else if (i + j == p - 1)
        hankel = ct.qw.at(i, j) == Poly::one(ct.qw.at(i, j).field());
    }
  record_or_throw(checks, Errc::internal, "hankel_pattern", hankel);

  QuadraticBundle v0 = trivial_quadratic_bundle(spec.sc);
  ExtensionData ext = admissible_extension(ct, spec.sc, spec.signs);
  OrthHiggsChart chart = build_extension(ct, v0, ext, spec.sc, checks);

  SplitSummands ss = summand_bookkeeping(spec);
  record_or_throw(checks, Errc::rank_error, "summand_rank",
                  chart.rank_v() == ss.rank_v);
  record_or_throw(checks, Errc::internal, "w_summands",
                  ct.w_weights == ss.w_powers);
  int wsum = 0;
  for (int w : chart.v_weights) wsum += w;
  record_or_throw(checks, Errc::internal, "weight_sum", wsum == 0);
  return chart;
}

int b_invariant(const SplitSpec& spec, bool census_mode) {
  spec.validate();
  int p = spec.sc.p, g = spec.sc.g;
  int nd = (int)spec.signs.size();
  if (census_mode && nd != 4 * p * (g - 1))
    throw HlError(Errc::bad_input, "census mode expects |D| = 4p(g-1)");
  int bp = count_plus(spec.signs), bm = nd - bp;
  if (bp < bm) std::swap(bp, bm);
  if ((bp - bm) % 2 != 0)
    throw HlError(Errc::parity_error, "sign counts differ by an odd amount");
  int b = (bp - bm) / 2;
  if (census_mode && b > 2 * p * (g - 1))
    throw HlError(Errc::bad_input, "b exceeds 2p(g-1)");
  return b;
}

SplitSpec monodromy_apply(const SplitSpec& spec, const std::vector<int>& perm) {
  spec.validate();
  size_t nd = spec.signs.size();
  if (perm.size() != nd)
    throw HlError(Errc::shape_mismatch, "permutation size mismatch");
  std::vector<bool> seen(nd, false);
  for (int k : perm) {
    if (k < 0 || (size_t)k >= nd || seen[k])
      throw HlError(Errc::bad_input, "not a permutation");
    seen[k] = true;
  }
  SplitSpec out = spec;
  for (size_t i = 0; i < nd; ++i) out.signs[i] = spec.signs[perm[i]];
  if (count_plus(out.signs) != count_plus(spec.signs))
    throw HlError(Errc::internal, "permutation changed the sign counts");
  return out;
}

MatPoly psi_matrix(const SpectralCoeffs& sc) {
  sc.validate();
  Field f = sc.field();
  int p = sc.p;
  MatPoly psi = MatPoly::identity(f, p);
  for (int i = 0; i + 1 < p; ++i)
    psi.at(i, p - 1) = psi.at(i, p - 1) + sc.a_coeff(p - 1 - i);
  return psi;
}

MatPoly q1_form(const CayleyTriple& ct, const SpectralCoeffs& sc) {
  if (!ct.companion_frame)
    throw HlError(Errc::unsupported, "q1 form is defined on the companion frame");
  MatPoly psi = psi_matrix(sc);
  return psi.transpose() * (ct.qw * ct.beta_f) * psi;
}

std::string chart_key(const OrthHiggsChart& chart) {
  std::ostringstream os;
  auto dump_weights = [&os](const std::vector<int>& ws) {
    for (int w : ws) os << w << ',';
    os << '|';
  };
  auto dump_mat = [&os](const MatPoly& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) os << m.at(i, j).str() << ';';
    os << '|';
  };
  dump_weights(chart.v_weights);
  dump_weights(chart.w_weights);
  dump_weights(chart.v0_weights);
  dump_mat(chart.qv);
  dump_mat(chart.qw);
  dump_mat(chart.beta);
  dump_mat(chart.gamma);
  return os.str();
}

}  // namespace higgslab
