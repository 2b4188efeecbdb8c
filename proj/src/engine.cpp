#include "engine.hpp"

#include <cstdint>
#include <functional>
#include <future>
#include <set>
#include <utility>

#include "sampling.hpp"

namespace higgslab {

namespace {

constexpr const char* kVersion = "1.0.0";

Z2Mat z2mat_from_json(const Json& j) {
  if (!j.is_array()) throw HlError(Errc::bad_input, "bit matrix must be an array");
  int rows = (int)j.size();
  int cols = rows ? (int)z2vec_from_json(j.at(0)).size() : 0;
  Z2Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    Z2Vec row = z2vec_from_json(j.at(i));
    if ((int)row.size() != cols) throw HlError(Errc::bad_input, "ragged bit matrix");
    for (int k = 0; k < cols; ++k) m.at(i, k) = row[k];
  }
  return m;
}

Field config_field(const Json& config) {
  if (config.contains("field")) return field_from_json(config.at("field"));
  return Field::default_prime();
}

std::uint64_t config_seed(const Json& config) {
  if (!config.contains("seed")) return 0;
  return (std::uint64_t)require_int(config, "seed");
}

// ---- command bodies -------------------------------------------------------

void cmd_construct_split(const Json& config, Field f, CheckList& cl, Json& art) {
  SplitSpec spec;
  spec.sc = sc_from_json(f, require_key(config, "sc"));
  spec.signs = split_signs_from_json(spec.sc, require_key(config, "signs"));
  SignFactors sf = factor_signs(spec);
  OrthHiggsChart chart = build_split(spec, &cl);
  SplitSummands ss = summand_bookkeeping(spec);
  art["chart"] = chart_to_json(chart);
  art["s_plus"] = poly_to_json(sf.s_plus);
  art["s_minus"] = poly_to_json(sf.s_minus);
  int plus = 0;
  for (int s : spec.signs) plus += s > 0;
  if (((int)spec.signs.size() - 2 * plus) % 2 == 0)
    art["b"] = b_invariant(spec, false);
  art["b_plus"] = ss.b_plus;
  art["b_minus"] = ss.b_minus;
  art["w_powers"] = ss.w_powers;
  art["w0_powers"] = ss.w0_powers;
  art["char_poly"] = bipoly_to_json(char_poly(chart.phi()));
}

void cmd_build_extension(const Json& config, Field f, CheckList& cl, Json& art) {
  SpectralCoeffs sc = sc_from_json(f, require_key(config, "sc"));
  CayleyTriple ct = pushforward_trivial(sc);
  QuadraticBundle v0 = config.contains("v0")
                           ? quadratic_bundle_from_json(f, config.at("v0"))
                           : trivial_quadratic_bundle(sc);
  ExtensionData ext;
  if (config.contains("tau")) {
    std::vector<int> tau;
    for (const Json& t : config.at("tau")) tau.push_back(t.get<int>());
    ext = extension_from_tau(tau, ct, sc);
  } else {
    ext = extension_from_json(f, require_key(config, "extension"));
  }
  OrthHiggsChart chart = build_extension(ct, v0, ext, sc, &cl);
  art["chart"] = chart_to_json(chart);
  art["extension"] = extension_to_json(ext);
  art["char_poly"] = bipoly_to_json(char_poly(chart.phi()));
}

void cmd_verify(const Json& config, Field f, CheckList& cl, Json& art) {
  SpectralCoeffs sc = sc_from_json(f, require_key(config, "sc"));
  OrthHiggsChart chart = chart_from_json(f, require_key(config, "chart"));
  cl.merge(verify_so(chart, sc));
  art["char_poly"] = bipoly_to_json(char_poly(chart.phi()));
  art["rank_v"] = chart.rank_v();
}

void cmd_cayley(const Json& config, Field f, CheckList& cl, Json& art) {
  SpectralCoeffs sc = sc_from_json(f, require_key(config, "sc"));
  OrthHiggsChart chart = chart_from_json(f, require_key(config, "chart"));
  QuadraticBundle v0 = kernel_quadratic(chart, sc, &cl);
  CayleyTriple ct = cayley_triple(chart, sc, &cl);
  SpCayley sp = cayley_symplectic(chart, sc, &cl);
  art["v0"] = quadratic_bundle_to_json(v0);
  art["qw"] = mat_poly_to_json(ct.qw);
  art["beta_f"] = mat_poly_to_json(ct.beta_f);
  art["det_beta_f"] = poly_to_json(det(ct.beta_f));
  art["twice_weights"] = sp.twice_weights;
  art["omega"] = mat_poly_to_json(sp.omega);
  art["phi_f"] = mat_poly_to_json(sp.phi_f);
}

void cmd_direct_image(const Json& config, Field f, CheckList& cl, Json& art) {
  SpectralCoeffs sc = sc_from_json(f, require_key(config, "sc"));
  if (config.contains("bundle")) {
    EquivariantBundle m = bundle_from_json(f, config.at("bundle"));
    QuadraticBundle v0 = invariant_direct_image(m, sc, &cl);
    art["v0"] = quadratic_bundle_to_json(v0);
    return;
  }
  if (!config.contains("v0"))
    throw HlError(Errc::bad_input, "direct-image needs 'bundle' or 'v0'");
  QuadraticBundle v0 = quadratic_bundle_from_json(f, config.at("v0"));
  LiftResult lift = equivariant_lift(v0, sc, &cl);
  QuadraticBundle round = invariant_direct_image(lift.bundle, sc, nullptr);
  MatPoly frame = scalar_to_poly(lift.frame);
  cl.add("roundtrip_exact", frame.transpose() * v0.q0 * frame == round.q0, "");
  art["bundle"] = bundle_to_json(lift.bundle);
  art["frame"] = mat_scalar_to_json(lift.frame);
  art["roundtrip_q0"] = mat_poly_to_json(round.q0);
}

void cmd_charclass(const Json& config, Field, CheckList& cl, Json& art) {
  int g_sbar = (int)require_int(config, "g_sbar");
  int g_sigma = (int)require_int(config, "g_sigma");
  Z2SymplecticSpace sbar = Z2SymplecticSpace::standard(g_sbar);
  Z2SymplecticSpace sigma = Z2SymplecticSpace::standard(g_sigma);
  Z2Vec sbar_diag(2 * g_sbar, 0), sigma_diag(2 * g_sigma, 0);
  if (config.contains("q_sbar_diag")) sbar_diag = z2vec_from_json(config.at("q_sbar_diag"));
  if (config.contains("q_sigma_diag")) sigma_diag = z2vec_from_json(config.at("q_sigma_diag"));
  QuadraticRefinement q_sbar = QuadraticRefinement::from_diagonal(sbar, sbar_diag);
  QuadraticRefinement q_sigma = QuadraticRefinement::from_diagonal(sigma, sigma_diag);
  NormMap nm = NormMap::coordinate_default(g_sbar, g_sigma);
  if (config.contains("nm")) {
    nm.nm = z2mat_from_json(config.at("nm"));
    nm.pull = z2mat_from_json(require_key(config, "pull"));
  }
  nm.validate(sbar, sigma);
  cl.add("norm_adjoint", true, "");

  Z2Vec l = z2vec_from_json(require_key(config, "L"));
  int q = (int)require_int(config, "q");
  int w2v0 = config.contains("w2_v0prime") ? (int)require_int(config, "w2_v0prime") : 0;
  int delta = config.contains("delta") ? (int)require_int(config, "delta") : 0;

  OmegaClasses w = omega_classes(l, q_sbar, q_sigma, nm);
  int w2v = omega2_V(q, l, q_sbar, q_sigma, nm, w2v0, delta);
  art["arf_sbar"] = arf_invariant(q_sbar);
  art["arf_sigma"] = arf_invariant(q_sigma);
  art["w1_w"] = z2vec_to_json(w.w1);
  art["w2_w"] = w.w2;
  art["w2_v"] = w2v;
  art["whitney_sum"] = whitney_additivity_check(w.w1, w2v, w.w1, w.w2);
  cl.add("whitney_consistent", ((w2v ^ w.w2) == (w2v0 ^ delta)), "");
}

void cmd_census(const Json& config, Field, CheckList& cl, Json& art, bool parallel) {
  std::vector<int> ps, qs, gs;
  for (const Json& v : require_key(config, "p")) ps.push_back(v.get<int>());
  for (const Json& v : require_key(config, "q")) qs.push_back(v.get<int>());
  for (const Json& v : require_key(config, "g")) gs.push_back(v.get<int>());

  std::vector<CensusRow> rows;
  if (parallel) {
    std::vector<std::future<std::vector<CensusRow>>> futs;
    for (int p : ps)
      for (int q : qs)
        for (int g : gs)
          futs.push_back(std::async(std::launch::async, [p, q, g] {
            return census_grid({p}, {q}, {g});
          }));
    for (auto& fu : futs)
      for (CensusRow& r : fu.get()) rows.push_back(std::move(r));
  } else {
    rows = census_grid(ps, qs, gs);
  }
  bool consistent = true;
  for (const CensusRow& r : rows) consistent = consistent && r.rh_ok && r.exponent_ok;
  cl.add("rows_consistent", consistent, "");
  art["rows"] = census_rows_to_json(rows);
  art["csv"] = census_rows_to_csv(rows);
}

// ---- selftest suites ------------------------------------------------------

CheckList suite_golden(Field f) {
  CheckList cl;
  SplitSpec spec;
  spec.sc.p = 1;
  spec.sc.q = 1;
  spec.sc.g = 2;
  spec.sc.a = {Poly::X(f)};
  spec.signs = {1};
  OrthHiggsChart c = build_split(spec);
  bool frozen = c.qv.at(0, 0).is_zero() && c.qv.at(0, 1) == Poly::one(f) &&
                c.qv.at(1, 1) == Poly::X(f) && c.beta.at(0, 0) == Poly::X(f) &&
                c.beta.at(1, 0) == -Poly::one(f) &&
                c.gamma.at(0, 0) == -Poly::one(f) && c.gamma.at(0, 1).is_zero();
  cl.add("golden_matrices", frozen, "");
  cl.add("golden_char_poly", char_poly(c.phi()) == char_poly_model(spec.sc), "");

  CayleyTriple ct = pushforward_trivial(spec.sc);
  QuadraticBundle v0 = trivial_quadratic_bundle(spec.sc);
  ExtensionData flip = extension_from_tau({1}, ct, spec.sc);
  OrthHiggsChart cf = build_extension(ct, v0, flip, spec.sc);
  cl.add("golden_flip", cf.qv.at(0, 1) == -Poly::one(f) &&
                            cf.beta.at(1, 0) == Poly::one(f), "");

  ExtensionData bad;
  bad.points = {Scalar::zero(f)};
  bad.vectors = {{Scalar(f, -2)}};
  bool probe_flags = false;
  CheckList probe = forced_extension_probe(ct, v0, bad, spec.sc);
  for (const CheckResult& c2 : probe.checks)
    if (c2.name == "qv_unimodular") probe_flags = !c2.pass;
  cl.add("golden_forced_probe", probe_flags, "");
  bool threw = false;
  try {
    build_extension(ct, v0, bad, spec.sc);
  } catch (const HlError& e) {
    threw = e.code == Errc::isometry_violation;
  }
  cl.add("golden_violation_throws", threw, "");

  MatPoly d(f, 2, 2);
  d.at(0, 0) = Poly::X(f) * Poly::X(f);
  d.at(1, 1) = Poly::X(f);
  std::vector<Poly> sm = smith_invariants(d);
  cl.add("smith_chain",
         sm.size() == 2 && sm[1].divisible_by(sm[0]) &&
             sm[0] * sm[1] == Poly::X(f) * Poly::X(f) * Poly::X(f), "");

  SpectralCoeffs hsc;
  hsc.p = 2;
  hsc.q = 1;
  hsc.g = 2;
  hsc.a = {Poly::from_ints(f, {-1, -1}), Poly::X(f)};  // roots z and 1
  cl.add("h_table_frozen",
         complete_homogeneous(hsc, 2)[2] == Poly::from_ints(f, {1, 1, 1}), "");

  SpectralCoeffs qsc;
  qsc.p = 2;
  qsc.q = 1;
  qsc.g = 2;
  qsc.a = {Poly::one(f), Poly::from_ints(f, {-1, 0, 1})};
  CayleyTriple qct = pushforward_trivial(qsc);
  MatPoly q1 = q1_form(qct, qsc);
  cl.add("q1_frozen_p2",
         q1.at(0, 0) == Poly::one(f) && q1.at(0, 1).is_zero() &&
             q1.at(1, 0).is_zero() && q1.at(1, 1) == -qsc.ap(), "");
  return cl;
}

CheckList suite_torsor(Field f) {
  CheckList cl;
  SplitSpec base;
  base.sc.p = 1;
  base.sc.q = 1;
  base.sc.g = 2;
  base.sc.a = {Poly::X(f) * Poly::from_ints(f, {-1, 1}) * Poly::from_ints(f, {1, 1})};
  base.signs = {1, 1, 1};
  std::set<std::string> canon;
  bool all_ok = true;
  BiPoly model = char_poly_model(base.sc);
  for (int mask = 0; mask < 8; ++mask) {
    SplitSpec spec = base;
    for (int k = 0; k < 3; ++k) spec.signs[k] = mask >> k & 1 ? 1 : -1;
    SplitSpec flipped = spec;
    for (int& s : flipped.signs) s = -s;
    OrthHiggsChart c = build_split(spec);
    all_ok = all_ok && char_poly(c.phi()) == model;
    canon.insert(std::min(chart_key(c), chart_key(build_split(flipped))));
  }
  cl.add("torsor_all_verify", all_ok, "");
  cl.add("torsor_four_classes", canon.size() == 4, "");

  SplitSpec bs;
  bs.sc.p = 1;
  bs.sc.q = 1;
  bs.sc.g = 2;
  bs.sc.a = {Poly::X(f) * Poly::from_ints(f, {-1, 1}) * Poly::from_ints(f, {1, 1}) *
             Poly::from_ints(f, {-2, 1})};
  bs.signs = {1, 1, 1, 1};
  cl.add("b_census_allplus", b_invariant(bs, true) == 2, "");
  return cl;
}

CheckList suite_random_split(Field f, std::uint64_t seed) {
  CheckList cl;
  Rng rng(seed ^ 0x5eed5eedULL);
  bool ok = true;
  for (int p = 1; p <= 2 && ok; ++p)
    for (int t = 0; t < 2 && ok; ++t) {
      SplitSpec spec;
      spec.sc = random_regular_sc(rng, f, p, 1, 2, 4, true);
      for (size_t k = 0; k < branch_points(spec.sc).size(); ++k)
        spec.signs.push_back(rng.coin() ? 1 : -1);
      CheckList inner;
      OrthHiggsChart c = build_split(spec, &inner);
      ok = inner.ok() && verify_so(c, spec.sc).ok();
    }
  cl.add("random_split_builds", ok, "");
  return cl;
}

CheckList suite_equivariant(Field f) {
  CheckList cl;
  SpectralCoeffs sc;
  sc.p = 1;
  sc.q = 2;
  sc.g = 2;
  sc.a = {Poly::X(f)};
  EquivariantBundle m;
  m.qm = MatScalar(f, 2, 2);
  m.qm.at(0, 1) = Scalar::one(f);
  m.qm.at(1, 0) = Scalar::one(f);
  m.sigma = {m.qm};
  m.summand_degrees = {0, 0};
  QuadraticBundle v0 = invariant_direct_image(m, sc, nullptr);
  bool frozen = v0.q0.at(0, 0) == Poly::constant(Scalar(f, 2)) &&
                v0.q0.at(1, 1) == Poly::X(f) * Scalar(f, -2);
  cl.add("swap_direct_image", frozen, "");
  LiftResult lift = equivariant_lift(v0, sc, nullptr);
  QuadraticBundle round = invariant_direct_image(lift.bundle, sc, nullptr);
  MatPoly frame = scalar_to_poly(lift.frame);
  cl.add("swap_lift_roundtrip",
         frame.transpose() * v0.q0 * frame == round.q0, "");
  return cl;
}

CheckList suite_newton(Field f, std::uint64_t seed) {
  CheckList cl;
  Rng rng(seed ^ 0x8eedULL);
  for (int p = 1; p <= 2; ++p) {
    SpectralCoeffs sc = random_regular_sc(rng, f, p, 1, 2, 3, true);
    CayleyTriple ct = pushforward_trivial(sc);
    bool ok = true;
    int fibers = 0;
    for (long long x0 = 0; x0 < 400 && fibers < 2; ++x0) {
      Scalar z0(f, x0);
      std::vector<Scalar> cs;
      for (int k = 0; k <= p; ++k) cs.push_back(sc.a_coeff(p - k).eval(z0));
      Poly fiber(f, cs);
      if (!poly_squarefree(fiber)) continue;
      std::vector<Scalar> roots;
      try {
        roots = field_roots(fiber);
      } catch (const HlError&) {
        continue;
      }
      ++fibers;
      Poly dfib = fiber.derivative();
      for (int i = 0; i < p && ok; ++i)
        for (int j = 0; j < p && ok; ++j) {
          Scalar sum = Scalar::zero(f);
          for (const Scalar& r : roots) {
            Scalar pw = Scalar::one(f);
            for (int e = 0; e < i + j; ++e) pw = pw * r;
            sum = sum + pw / dfib.eval(r);
          }
          ok = ct.qw.at(i, j).eval(z0) == sum;
        }
    }
    cl.add("duality_oracle_p" + std::to_string(p), ok && fibers >= 1, "");
  }
  return cl;
}

CheckList suite_census() {
  CheckList cl;
  CoverGenera cg = cover_genera(2, 2);
  cl.add("genera_17_7", cg.g_spectral == 17 && cg.g_quotient == 7, "");
  cl.add("fiber_128", fiber_order(1, 2, 2).component_order == 128, "");
  cl.add("prym_3", fiber_order(1, 2, 2).prym_dim == 3, "");
  cl.add("torsor_8", torsor_order(1, 2) == 8, "");
  cl.add("stack_dim_3", stack_dimension(2, 2, 2) == 3, "");
  GothenCounts gc = gothen_counts(2);
  cl.add("gothen_48", gc.total == 48 && gc.hitchin_like == 16 &&
                          gc.middle == 2 && gc.paired == 30, "");
  cl.add("gothen_194", gothen_counts(3).total == 194, "");
  cl.add("fiber_2_21", fiber_order(2, 1, 2).component_order == BigInt(1) << 21, "");
  cl.add("stack_dim_14", stack_dimension(3, 3, 4) == 14, "");
  cl.add("stack_dim_q1_zero", stack_dimension(1, 2, 5) == 0, "");
  bool ident = true;
  for (int p = 1; p <= 20; ++p)
    for (int g = 2; g <= 20; ++g) ident = ident && exponent_identity(p, g);
  cl.add("exponent_identity_grid", ident, "");
  return cl;
}

CheckList suite_gf2() {
  CheckList cl;
  bool polar = true, zeros = true;
  for (int g = 1; g <= 2; ++g) {
    Z2SymplecticSpace s = Z2SymplecticSpace::standard(g);
    int n = 2 * g;
    for (long long dm = 0; dm < (1LL << n); ++dm) {
      Z2Vec diag(n);
      for (int i = 0; i < n; ++i) diag[i] = (int)(dm >> i & 1);
      QuadraticRefinement q = QuadraticRefinement::from_diagonal(s, diag);
      int arf = arf_invariant(q);
      zeros = zeros && refinement_zero_count(q) ==
                           (1LL << (n - 1)) + (arf ? -1 : 1) * (1LL << (g - 1));
      for (long long xm = 0; xm < (1LL << n) && polar; ++xm)
        for (long long ym = 0; ym < (1LL << n) && polar; ++ym) {
          Z2Vec x(n), y(n), xy(n);
          for (int i = 0; i < n; ++i) {
            x[i] = (int)(xm >> i & 1);
            y[i] = (int)(ym >> i & 1);
            xy[i] = x[i] ^ y[i];
          }
          polar = (q.eval(xy) ^ q.eval(x) ^ q.eval(y)) == s.pair(x, y);
        }
    }
  }
  cl.add("gf2_polarization", polar, "");
  cl.add("gf2_zero_counts", zeros, "");

  NormMap nm = NormMap::coordinate_default(2, 1);
  Z2SymplecticSpace sbar = Z2SymplecticSpace::standard(2);
  Z2SymplecticSpace sigma = Z2SymplecticSpace::standard(1);
  bool formula = true;
  for (long long lm = 0; lm < 16 && formula; ++lm) {
    Z2Vec l(4);
    for (int i = 0; i < 4; ++i) l[i] = (int)(lm >> i & 1);
    QuadraticRefinement qb = QuadraticRefinement::arf_zero_default(sbar);
    QuadraticRefinement qs = QuadraticRefinement::arf_zero_default(sigma);
    OmegaClasses w = omega_classes(l, qb, qs, nm);
    for (int v0 : {0, 1})
      for (int d : {0, 1})
        formula = formula &&
                  (omega2_V(3, l, qb, qs, nm, v0, d) ^ w.w2) == (v0 ^ d);
  }
  cl.add("gf2_formula_sweep", formula, "");

  QuadraticRefinement marked =
      QuadraticRefinement::from_diagonal(sbar, {0, 1, 0, 0});
  QuadraticRefinement qs0 = QuadraticRefinement::arf_zero_default(sigma);
  OmegaClasses ow = omega_classes({0, 1, 0, 0}, marked, qs0, nm);
  cl.add("omega_kernel_example", ow.w1 == Z2Vec{0, 0} && ow.w2 == 1, "");
  return cl;
}

void cmd_selftest(const Json& config, Field f, CheckList& cl, Json& art,
                  bool parallel) {
  std::uint64_t seed = config_seed(config);
  using Suite = std::function<CheckList()>;
  std::vector<std::pair<std::string, Suite>> suites = {
      {"golden", [f] { return suite_golden(f); }},
      {"torsor", [f] { return suite_torsor(f); }},
      {"random_split", [f, seed] { return suite_random_split(f, seed); }},
      {"equivariant", [f] { return suite_equivariant(f); }},
      {"newton", [f, seed] { return suite_newton(f, seed); }},
      {"census", [] { return suite_census(); }},
      {"gf2", [] { return suite_gf2(); }},
  };
  std::vector<CheckList> results(suites.size());
  if (parallel) {
    std::vector<std::future<CheckList>> futs;
    for (auto& s : suites)
      futs.push_back(std::async(std::launch::async, s.second));
    for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < suites.size(); ++i) results[i] = suites[i].second();
  }
  Json summary;
  for (size_t i = 0; i < suites.size(); ++i) {
    cl.merge(results[i]);
    int passed = 0;
    for (const CheckResult& c : results[i].checks) passed += c.pass;
    Json s;
    s["checks"] = results[i].checks.size();
    s["passed"] = passed;
    summary[suites[i].first] = std::move(s);
  }
  art["suites"] = std::move(summary);
}

}  // namespace

const char* engine_version() { return kVersion; }

RunResult run_command(const std::string& command, const Json& config,
                      bool parallel) {
  RunResult out;
  Json& rep = out.report;
  rep["tool"] = "higgslab";
  rep["version"] = kVersion;
  rep["command"] = command;
  rep["seed"] = config_seed(config);
  rep["timing"] = "excluded for determinism";

  CheckList cl;
  Json art;
  try {
    Field f = config_field(config);
    rep["field"] = field_to_json(f);
    if (command == "construct-split")
      cmd_construct_split(config, f, cl, art);
    else if (command == "build-extension")
      cmd_build_extension(config, f, cl, art);
    else if (command == "verify")
      cmd_verify(config, f, cl, art);
    else if (command == "cayley")
      cmd_cayley(config, f, cl, art);
    else if (command == "direct-image")
      cmd_direct_image(config, f, cl, art);
    else if (command == "charclass")
      cmd_charclass(config, f, cl, art);
    else if (command == "census")
      cmd_census(config, f, cl, art, parallel);
    else if (command == "selftest")
      cmd_selftest(config, f, cl, art, parallel);
    else
      throw HlError(Errc::bad_input, "unknown command '" + command + "'");

    rep["checks"] = checks_to_json(cl);
    rep["artifacts"] = std::move(art);
    if (cl.ok()) {
      rep["status"] = "pass";
      out.exit_code = 0;
    } else {
      rep["status"] = "fail";
      for (const CheckResult& c : cl.checks)
        if (!c.pass) {
          Json fail;
          fail["code"] = "VerificationFailed";
          fail["check"] = c.name;
          fail["detail"] = c.detail;
          rep["failure"] = std::move(fail);
          break;
        }
      out.exit_code = 1;
    }
  } catch (const HlError& e) {
    rep["checks"] = checks_to_json(cl);
    rep["status"] = "fail";
    Json fail;
    fail["code"] = errc_name(e.code);
    std::string detail = e.what();
    std::string prefix = std::string(errc_name(e.code)) + ": ";
    if (detail.rfind(prefix, 0) == 0) detail = detail.substr(prefix.size());
    fail["detail"] = detail;
    rep["failure"] = std::move(fail);
    out.exit_code = errc_is_verification(e.code) ? 1 : 2;
  } catch (const std::exception& e) {
    rep["status"] = "fail";
    Json fail;
    fail["code"] = "BadInput";
    fail["detail"] = e.what();
    rep["failure"] = std::move(fail);
    out.exit_code = 2;
  }
  return out;
}

RunResult run_command_text(const std::string& command,
                           const std::string& config_text, bool parallel) {
  Json config;
  try {
    config = Json::parse(config_text);
  } catch (const std::exception& e) {
    RunResult out;
    out.report["tool"] = "higgslab";
    out.report["version"] = kVersion;
    out.report["command"] = command;
    out.report["status"] = "fail";
    Json fail;
    fail["code"] = "BadInput";
    fail["detail"] = std::string("config is not valid JSON: ") + e.what();
    out.report["failure"] = std::move(fail);
    out.exit_code = 2;
    return out;
  }
  return run_command(command, config, parallel);
}

}  // namespace higgslab
