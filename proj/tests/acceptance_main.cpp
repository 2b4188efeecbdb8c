// Acceptance gate: one line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "engine.hpp"
#include "langlands.hpp"
#include "sampling.hpp"

using namespace higgslab;

namespace {

int failures = 0;

void report(int idx, const std::string& text, bool pass) {
  std::printf("[%s] %d. %s\n", pass ? "PASS" : "FAIL", idx, text.c_str());
  if (!pass) ++failures;
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// -- 1: golden one-point split ----------------------------------------------

bool golden_one_field(Field f) {
  SplitSpec spec;
  spec.sc.p = 1;
  spec.sc.q = 1;
  spec.sc.g = 2;
  spec.sc.a = {Poly::X(f)};
  spec.signs = {1};
  OrthHiggsChart c = build_split(spec);
  bool ok = c.qv.at(0, 0).is_zero() && c.qv.at(0, 1) == Poly::one(f) &&
            c.qv.at(1, 0) == Poly::one(f) && c.qv.at(1, 1) == Poly::X(f) &&
            c.beta.at(0, 0) == Poly::X(f) && c.beta.at(1, 0) == -Poly::one(f) &&
            c.gamma.at(0, 0) == -Poly::one(f) && c.gamma.at(0, 1).is_zero();
  ok = ok && verify_so(c, spec.sc).ok();
  ok = ok && char_poly(c.phi()) == char_poly_model(spec.sc);
  return ok;
}

bool crit1(double* secs) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = golden_one_field(Field::default_prime()) && golden_one_field(Field::rationals());
  *secs = seconds(t0);
  return ok && *secs < 1.0;
}

// -- 2: random split builds across p = 1, 2, 3 ------------------------------

bool crit2(double* secs) {
  auto t0 = std::chrono::steady_clock::now();
  Field f = Field::default_prime();
  Rng rng(20260823);
  bool ok = true;
  int builds = 0;
  for (int t = 0; t < 21 && ok; ++t) {
    int p = t % 3 + 1;
    SpectralCoeffs sc = random_regular_sc(rng, f, p, 1, 2, (int)rng.range(1, 8), true);
    SplitSpec spec;
    spec.sc = sc;
    for (size_t k = 0; k < branch_points(sc).size(); ++k)
      spec.signs.push_back(rng.coin() ? 1 : -1);
    CheckList cl;
    OrthHiggsChart c = build_split(spec, &cl);
    ok = ok && cl.ok() && verify_so(c, sc).ok() &&
         char_poly(c.phi()) == char_poly_model(sc);
    CheckList kc;
    QuadraticBundle v0 = kernel_quadratic(c, sc, &kc);
    Poly ap = sc.ap();
    ok = ok && kc.ok() && v0.weights == std::vector<int>{-p} &&
         v0.q0.rows() == 1 &&
         v0.q0.at(0, 0) * ap.lc() == ap * v0.q0.at(0, 0).lc();
    CheckList cc;
    CayleyTriple ct = cayley_triple(c, sc, &cc);
    Poly want = p % 2 ? -ap : ap;
    ok = ok && cc.ok() && det(ct.beta_f) == want;
    ++builds;
  }
  *secs = seconds(t0);
  return ok && builds >= 20 && *secs < 30.0;
}

// -- 3: root-sum oracles -----------------------------------------------------

Poly brute_h(const std::vector<Poly>& roots, int m) {
  Field f = roots.front().field();
  if (m == 0) return Poly::one(f);
  int p = (int)roots.size();
  Poly total = Poly::zero(f);
  std::vector<int> idx(m, 0);
  while (true) {
    Poly prod = Poly::one(f);
    for (int i : idx) prod = prod * roots[i];
    total = total + prod;
    int k = m - 1;
    while (k >= 0 && idx[k] == p - 1) --k;
    if (k < 0) break;
    int v = idx[k] + 1;
    for (int j = k; j < m; ++j) idx[j] = v;
  }
  return total;
}

bool crit3() {
  Field f = Field::default_prime();
  Rng rng(33);
  bool ok = true;
  // complete homogeneous sums vs direct multiset expansion over known roots
  for (int p = 1; p <= 4 && ok; ++p)
    for (int trial = 0; trial < 3 && ok; ++trial) {
      std::vector<Poly> roots;
      for (int i = 0; i < p; ++i) roots.push_back(random_poly_upto(rng, f, 1));
      std::vector<Poly> cs = {Poly::one(f)};
      for (const Poly& r : roots) {
        std::vector<Poly> nxt(cs.size() + 1, Poly::zero(f));
        for (size_t i = 0; i < cs.size(); ++i) {
          nxt[i + 1] = nxt[i + 1] + cs[i];
          nxt[i] = nxt[i] - cs[i] * r;
        }
        cs = nxt;
      }
      SpectralCoeffs sc;
      sc.p = p;
      sc.q = 1;
      sc.g = 2;
      for (int i = 1; i <= p; ++i) sc.a.push_back(cs[p - i]);
      std::vector<Poly> h = complete_homogeneous(sc, 6);
      for (int j = 0; j <= 6; ++j) ok = ok && h[j] == brute_h(roots, j);
    }
  // pairing of the pushforward frame vs residues at split fibers
  for (int p = 1; p <= 3 && ok; ++p) {
    SpectralCoeffs sc = random_regular_sc(rng, f, p, 1, 2, 3, true);
    CayleyTriple ct = pushforward_trivial(sc);
    int fibers = 0;
    for (long long x0 = 0; x0 < 600 && fibers < 3; ++x0) {
      Scalar z0(f, x0);
      std::vector<Scalar> fib;
      for (int k = 0; k <= p; ++k) fib.push_back(sc.a_coeff(p - k).eval(z0));
      Poly fiber(f, fib);
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
    ok = ok && fibers >= 1;
  }
  return ok;
}

// -- 4: scaled extension vectors --------------------------------------------

bool crit4() {
  Field f = Field::default_prime();
  Rng rng(44);
  bool ok = true;
  for (int t = 0; t < 20 && ok; ++t) {
    int p = t % 2 + 1;
    SpectralCoeffs sc = random_regular_sc(rng, f, p, 1, 2, (int)rng.range(1, 4), true);
    CayleyTriple ct = pushforward_trivial(sc);
    QuadraticBundle v0 = trivial_quadratic_bundle(sc);
    std::vector<int> signs;
    for (size_t k = 0; k < branch_points(sc).size(); ++k)
      signs.push_back(rng.coin() ? 1 : -1);
    ExtensionData good = admissible_extension(ct, sc, signs);
    try {
      build_extension(ct, v0, good, sc);
    } catch (const HlError&) {
      ok = false;  // false reject
    }
    ExtensionData bad = good;
    size_t which = (size_t)rng.below(bad.vectors.size());
    Scalar c(f, rng.range(2, 1000001));  // c^2 != 1
    for (Scalar& s : bad.vectors[which]) s = s * c;
    bool rejected = false;
    try {
      build_extension(ct, v0, bad, sc);
    } catch (const HlError& e) {
      rejected = e.code == Errc::isometry_violation;
    }
    bool nonunimodular = false;
    for (const CheckResult& cr : forced_extension_probe(ct, v0, bad, sc).checks)
      if (cr.name == "qv_unimodular") nonunimodular = !cr.pass;
    ok = ok && rejected && nonunimodular;
  }
  return ok;
}

// -- 5: three-point sign torsor ---------------------------------------------

bool crit5() {
  Field f = Field::default_prime();
  SplitSpec base;
  base.sc.p = 1;
  base.sc.q = 1;
  base.sc.g = 2;
  base.sc.a = {Poly::X(f) * Poly::from_ints(f, {-1, 1}) * Poly::from_ints(f, {1, 1})};
  base.signs = {1, 1, 1};
  BiPoly model = char_poly_model(base.sc);
  std::set<std::string> canon;
  std::vector<Poly> smith_ref;
  bool ok = true;
  for (int mask = 0; mask < 8; ++mask) {
    SplitSpec spec = base;
    for (int k = 0; k < 3; ++k) spec.signs[k] = mask >> k & 1 ? 1 : -1;
    SplitSpec flip = spec;
    for (int& s : flip.signs) s = -s;
    OrthHiggsChart c = build_split(spec);
    ok = ok && char_poly(c.phi()) == model;
    std::vector<Poly> smith = smith_invariants(c.beta);
    if (mask == 0)
      smith_ref = smith;
    else
      ok = ok && smith == smith_ref;
    canon.insert(std::min(chart_key(c), chart_key(build_split(flip))));
  }
  return ok && canon.size() == 4;
}

// -- 6: closed-form counts ---------------------------------------------------

bool crit6() {
  CoverGenera cg = cover_genera(2, 2);
  bool ok = cg.g_spectral == 17 && cg.g_quotient == 7;
  ok = ok && fiber_order(1, 2, 2).component_order == 128;
  ok = ok && torsor_order(1, 2) == 8;
  ok = ok && stack_dimension(2, 2, 2) == 3;
  GothenCounts gc = gothen_counts(2);
  ok = ok && gc.total == 48 && gc.hitchin_like == 16 && gc.middle == 2 && gc.paired == 30;
  for (int p = 1; p <= 20; ++p)
    for (int g = 2; g <= 20; ++g) ok = ok && exponent_identity(p, g);
  return ok;
}

// -- 7: equivariant lift round trips ----------------------------------------

bool crit7() {
  Field f = Field::default_prime();
  Rng rng(77);
  bool ok = true;
  int trips = 0;
  for (int t = 0; t < 54 && ok; ++t) {
    int q = t % 3 + 1;
    SpectralCoeffs sc = random_regular_sc(rng, f, 1, q, 2, (int)rng.range(1, 4), true);
    MatScalar g = random_symmetric_nondegenerate(rng, f, q - 1);
    MatScalar c1(f, 1, 1);
    c1.at(0, 0) = random_nonzero_scalar(rng, f);
    MatScalar qm = MatScalar::block_diag(g, c1);
    MatScalar invol = MatScalar::identity(f, q);
    invol.at(q - 1, q - 1) = -Scalar::one(f);
    // scramble by a constant congruence so the eigenframe is hidden
    MatScalar tmat(f, q, q);
    do {
      for (int i = 0; i < q; ++i)
        for (int k = 0; k < q; ++k) tmat.at(i, k) = random_scalar(rng, f);
    } while (det(tmat) == Scalar::zero(f));
    MatScalar tinv =
        eval_mat(inverse_unimodular(scalar_to_poly(tmat)), Scalar::zero(f));
    EquivariantBundle m;
    m.qm = tmat.transpose() * qm * tmat;
    m.sigma = {tinv * invol * tmat};
    m.summand_degrees = std::vector<int>(q, 0);
    CheckList direct_checks;
    QuadraticBundle v0 = invariant_direct_image(m, sc, &direct_checks);
    CheckList lift_checks;
    LiftResult lift = equivariant_lift(v0, sc, &lift_checks);
    QuadraticBundle round = invariant_direct_image(lift.bundle, sc, nullptr);
    MatPoly frame = scalar_to_poly(lift.frame);
    ok = ok && direct_checks.ok() && lift_checks.ok() &&
         frame.transpose() * v0.q0 * frame == round.q0;
    ++trips;
  }
  return ok && trips >= 50;
}

// -- 8: mod-2 refinements ----------------------------------------------------

bool crit8() {
  bool ok = true;
  for (int g = 1; g <= 3 && ok; ++g) {
    Z2SymplecticSpace s = Z2SymplecticSpace::standard(g);
    int n = 2 * g;
    for (long long dm = 0; dm < (1LL << n) && ok; ++dm) {
      Z2Vec diag(n);
      for (int i = 0; i < n; ++i) diag[i] = (int)(dm >> i & 1);
      QuadraticRefinement q = QuadraticRefinement::from_diagonal(s, diag);
      int arf = arf_invariant(q);
      ok = refinement_zero_count(q) ==
           (1LL << (n - 1)) + (arf ? -1 : 1) * (1LL << (g - 1));
      for (long long xm = 0; xm < (1LL << n) && ok; ++xm)
        for (long long ym = 0; ym < (1LL << n) && ok; ++ym) {
          Z2Vec x(n), y(n), xy(n);
          for (int i = 0; i < n; ++i) {
            x[i] = (int)(xm >> i & 1);
            y[i] = (int)(ym >> i & 1);
            xy[i] = x[i] ^ y[i];
          }
          ok = (q.eval(xy) ^ q.eval(x) ^ q.eval(y)) == s.pair(x, y);
        }
    }
  }
  // additivity of the second class over every input at small genus
  std::vector<std::pair<int, int>> shapes = {{1, 1}, {2, 1}, {2, 2}};
  for (auto [gb, gs] : shapes) {
    Z2SymplecticSpace sbar = Z2SymplecticSpace::standard(gb);
    Z2SymplecticSpace sigma = Z2SymplecticSpace::standard(gs);
    NormMap nm = NormMap::coordinate_default(gb, gs);
    int nb = 2 * gb, ns = 2 * gs;
    for (long long db = 0; db < (1LL << nb) && ok; ++db)
      for (long long ds = 0; ds < (1LL << ns) && ok; ++ds) {
        Z2Vec diag_b(nb), diag_s(ns);
        for (int i = 0; i < nb; ++i) diag_b[i] = (int)(db >> i & 1);
        for (int i = 0; i < ns; ++i) diag_s[i] = (int)(ds >> i & 1);
        QuadraticRefinement qb = QuadraticRefinement::from_diagonal(sbar, diag_b);
        QuadraticRefinement qs = QuadraticRefinement::from_diagonal(sigma, diag_s);
        for (long long lm = 0; lm < (1LL << nb) && ok; ++lm) {
          Z2Vec l(nb);
          for (int i = 0; i < nb; ++i) l[i] = (int)(lm >> i & 1);
          OmegaClasses w = omega_classes(l, qb, qs, nm);
          for (int v0 : {0, 1})
            for (int d : {0, 1}) {
              int wv = omega2_V(3, l, qb, qs, nm, v0, d);
              ok = ok && (wv ^ w.w2) == (v0 ^ d) &&
                   whitney_additivity_check(w.w1, wv, w.w1, w.w2) == (v0 ^ d);
            }
        }
      }
  }
  return ok;
}

// -- 9: byte-identical selftest ---------------------------------------------

bool crit9() {
  Json cfg;
  cfg["seed"] = 2026;
  RunResult a = run_command("selftest", cfg, false);
  RunResult b = run_command("selftest", cfg, false);
  RunResult c = run_command("selftest", cfg, true);
  return a.exit_code == 0 && a.report.dump(2) == b.report.dump(2) &&
         a.report.dump(2) == c.report.dump(2);
}

template <typename Fn>
bool guarded(Fn fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    std::printf("       unexpected exception: %s\n", e.what());
    return false;
  }
}

}  // namespace

int main() {
  double t1 = 0, t2 = 0;
  char buf[160];

  bool p1 = guarded([&] { return crit1(&t1); });
  std::snprintf(buf, sizeof buf,
                "golden one-point split chart reconstructs exactly (%.3fs)", t1);
  report(1, buf, p1);

  bool p2 = guarded([&] { return crit2(&t2); });
  std::snprintf(buf, sizeof buf,
                "random split builds verify for p in {1,2,3} (%.2fs)", t2);
  report(2, buf, p2);

  report(3, "homogeneous sums and duality pairings match root-sum oracles",
         guarded([] { return crit3(); }));
  report(4, "scaled extension vectors are rejected; honest ones accepted",
         guarded([] { return crit4(); }));
  report(5, "three-point sign torsor gives exactly four canonical charts",
         guarded([] { return crit5(); }));
  report(6, "closed-form counts and exponent identities hold",
         guarded([] { return crit6(); }));
  report(7, "equivariant lifts round trip with local models at branch points",
         guarded([] { return crit7(); }));
  report(8, "mod-2 refinements: polarization, zero counts, additivity",
         guarded([] { return crit8(); }));
  report(9, "selftest reports are byte-identical for a fixed seed",
         guarded([] { return crit9(); }));

  if (failures) {
    std::printf("ACCEPTANCE: %d of 9 criteria failed\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all 9 criteria pass\n");
  return 0;
}
