#include "split_builder.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "sampling.hpp"

using namespace higgslab;

namespace {

SplitSpec make_spec(Field, int p, std::vector<Poly> a, std::vector<int> signs) {
  SplitSpec spec;
  spec.sc.p = p;
  spec.sc.q = 1;
  spec.sc.g = 2;
  spec.sc.a = std::move(a);
  spec.signs = std::move(signs);
  return spec;
}

std::string canonical_key(const SplitSpec& spec) {
  SplitSpec flipped = spec;
  for (int& s : flipped.signs) s = -s;
  return std::min(chart_key(build_split(spec)), chart_key(build_split(flipped)));
}

}  // namespace

TEST_CASE("factor_signs splits a_p/2 along the sign assignment") {
  for (Field f : {Field::default_prime(), Field::rationals()}) {
    CAPTURE(f.modulus);
    SplitSpec all_plus = make_spec(f, 1, {Poly::X(f)}, {1});
    SignFactors sf = factor_signs(all_plus);
    CHECK(sf.s_plus == Poly::X(f));
    CHECK(sf.s_minus == Poly::constant(Scalar(f, 2).inverse()));

    // a_1 = z^2 - 1, + at root 1 and - at root -1
    Poly a1 = Poly::from_ints(f, {-1, 0, 1});
    SplitSpec mixed = make_spec(f, 1, {a1}, {1, 1});
    std::vector<Scalar> pts = mixed.points();
    REQUIRE(pts.size() == 2);
    for (size_t k = 0; k < 2; ++k)
      mixed.signs[k] = pts[k] == Scalar::one(f) ? 1 : -1;
    SignFactors mf = factor_signs(mixed);
    CHECK(mf.s_plus == Poly::from_ints(f, {-1, 1}));
    CHECK(mf.s_minus == Poly::from_ints(f, {1, 1}) * Scalar(f, 2).inverse());
    CHECK(mf.s_plus * mf.s_minus == a1 * Scalar(f, 2).inverse());
  }
}

TEST_CASE("factor_signs validation") {
  Field f = Field::default_prime();
  SplitSpec spec = make_spec(f, 1, {Poly::X(f)}, {1, 1});
  CHECK_THROWS_AS(factor_signs(spec), HlError);  // too many signs
  spec.signs = {2};
  CHECK_THROWS_AS(factor_signs(spec), HlError);  // not a sign
  SplitSpec q2 = make_spec(f, 1, {Poly::X(f)}, {1});
  q2.sc.q = 2;
  try {
    factor_signs(q2);
    CHECK(false);
  } catch (const HlError& e) {
    CHECK(e.code == Errc::unsupported);
  }
  // non-split a_p
  SplitSpec irr = make_spec(f, 1, {Poly::from_ints(f, {-2, 0, 1})}, {1, 1});
  if (f.modulus != 0) {
    try {
      factor_signs(irr);
      CHECK(false);
    } catch (const HlError& e) {
      CHECK(e.code == Errc::not_split);
    }
  }
}

TEST_CASE("build_split reproduces the golden chart") {
  for (Field f : {Field::default_prime(), Field::rationals()}) {
    SplitSpec spec = make_spec(f, 1, {Poly::X(f)}, {1});
    CheckList cl;
    OrthHiggsChart chart = build_split(spec, &cl);
    for (const auto& c : cl.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    CHECK(chart.qv.at(0, 0).is_zero());
    CHECK(chart.qv.at(0, 1) == Poly::one(f));
    CHECK(chart.qv.at(1, 1) == Poly::X(f));
    CHECK(chart.beta.at(0, 0) == Poly::X(f));
    CHECK(chart.beta.at(1, 0) == -Poly::one(f));
    CHECK(chart.gamma.at(0, 0) == -Poly::one(f));
    CHECK(chart.gamma.at(0, 1).is_zero());
  }
}

TEST_CASE("p = 2 split build end to end") {
  Field f = Field::default_prime();
  // a1 = 1, a2 = z^2 - 1: regular, branch points +-1
  SplitSpec spec = make_spec(f, 2, {Poly::one(f), Poly::from_ints(f, {-1, 0, 1})}, {1, -1});
  REQUIRE(regularity_check(spec.sc).ok());
  CheckList cl;
  OrthHiggsChart chart = build_split(spec, &cl);
  CHECK(cl.ok());
  CHECK(chart.rank_v() == 3);
  CHECK(char_poly(chart.phi()) == char_poly_model(spec.sc));
  QuadraticBundle v0 = kernel_quadratic(chart, spec.sc, nullptr);
  CHECK(v0.rank() == 1);
  CHECK(v0.weights == std::vector<int>{-2});
  Poly ratio_num = v0.q0.at(0, 0);
  CHECK(ratio_num.divisible_by(spec.sc.ap()));
  CHECK(ratio_num.exact_div(spec.sc.ap()).is_unit());
}

TEST_CASE("random split builds pass all checks") {
  Field f = Field::default_prime();
  Rng rng(401);
  for (int p = 1; p <= 3; ++p) {
    SpectralCoeffs sc = random_regular_sc(rng, f, p, 1, 2, 4, true);
    SplitSpec spec;
    spec.sc = sc;
    for (size_t k = 0; k < branch_points(sc).size(); ++k)
      spec.signs.push_back(rng.coin() ? 1 : -1);
    CheckList cl;
    OrthHiggsChart chart = build_split(spec, &cl);
    CHECK(cl.ok());
    CHECK(verify_so(chart, sc).ok());
    CayleyTriple round = cayley_triple(chart, sc, nullptr);
    Poly want = sc.ap();
    if (p % 2 == 1) want = -want;
    CHECK(det(round.beta_f) == want);
  }
}

TEST_CASE("global sign flip changes bytes but not invariants") {
  Field f = Field::default_prime();
  Poly a1 = Poly::X(f) * Poly::from_ints(f, {-1, 1});
  SplitSpec spec = make_spec(f, 1, {a1}, {1, -1});
  SplitSpec flip = spec;
  for (int& s : flip.signs) s = -s;
  OrthHiggsChart c1 = build_split(spec);
  OrthHiggsChart c2 = build_split(flip);
  CHECK(chart_key(c1) != chart_key(c2));
  CHECK(char_poly(c1.phi()) == char_poly(c2.phi()));
  CHECK(b_invariant(spec, false) == b_invariant(flip, false));
  CHECK(smith_invariants(c1.beta) == smith_invariants(c2.beta));
}

TEST_CASE("b invariant values and failure modes") {
  Field f = Field::default_prime();
  Poly a4 = Poly::X(f);
  for (long long r : {1, 2, 3}) a4 = a4 * Poly::linear_root(Scalar(f, r));
  SplitSpec spec = make_spec(f, 1, {a4}, {1, 1, 1, -1});
  CHECK(b_invariant(spec, false) == 1);
  CHECK(b_invariant(spec, true) == 1);  // |D| = 4 = 4p(g-1)
  spec.signs = {1, 1, 1, 1};
  CHECK(b_invariant(spec, true) == 2);  // Hitchin-like extreme 2p(g-1)
  spec.signs = {1, -1, 1, -1};
  CHECK(b_invariant(spec, true) == 0);
  spec.signs = {-1, -1, 1, -1};  // normalization swaps the roles
  CHECK(b_invariant(spec, false) == 1);

  Poly a3 = Poly::X(f) * Poly::from_ints(f, {-1, 1}) * Poly::from_ints(f, {1, 1});
  SplitSpec odd = make_spec(f, 1, {a3}, {1, 1, -1});
  try {
    b_invariant(odd, false);
    CHECK(false);
  } catch (const HlError& e) {
    CHECK(e.code == Errc::parity_error);
  }
  try {
    b_invariant(odd, true);  // census mode rejects |D| != 4p(g-1) first
    CHECK(false);
  } catch (const HlError& e) {
    CHECK(e.code == Errc::bad_input);
  }
}

TEST_CASE("monodromy permutes signs and preserves b") {
  Field f = Field::default_prime();
  Poly a4 = Poly::X(f);
  for (long long r : {1, 2, 3}) a4 = a4 * Poly::linear_root(Scalar(f, r));
  SplitSpec spec = make_spec(f, 1, {a4}, {1, 1, -1, -1});

  SplitSpec swapped = monodromy_apply(spec, {1, 0, 2, 3});
  CHECK(swapped.signs == std::vector<int>{1, 1, -1, -1});
  SplitSpec cross = monodromy_apply(spec, {2, 1, 0, 3});
  CHECK(cross.signs == std::vector<int>{-1, 1, 1, -1});
  CHECK(monodromy_apply(spec, {0, 1, 2, 3}).signs == spec.signs);
  CHECK_THROWS_AS(monodromy_apply(spec, {0, 0, 2, 3}), HlError);
  CHECK_THROWS_AS(monodromy_apply(spec, {0, 1}), HlError);

  // orbit of (+,+,-,-) under S_4 is the full b = 0 level set, size C(4,2)
  std::set<std::vector<int>> orbit;
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    SplitSpec moved = monodromy_apply(spec, perm);
    CHECK(b_invariant(moved, true) == 0);
    orbit.insert(moved.signs);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(orbit.size() == 6);
}

TEST_CASE("psi matrix and the Q1 block form, frozen for small p") {
  Field f = Field::default_prime();
  SUBCASE("p = 1") {
    SpectralCoeffs sc;
    sc.p = 1;
    sc.q = 1;
    sc.g = 2;
    sc.a = {Poly::X(f)};
    CHECK(psi_matrix(sc) == MatPoly::identity(f, 1));
    MatPoly q1 = q1_form(pushforward_trivial(sc), sc);
    CHECK(q1.at(0, 0) == -Poly::X(f));
  }
  SUBCASE("p = 2") {
    SpectralCoeffs sc;
    sc.p = 2;
    sc.q = 1;
    sc.g = 2;
    sc.a = {Poly::one(f), Poly::from_ints(f, {-1, 0, 1})};
    MatPoly psi = psi_matrix(sc);
    CHECK(psi.at(0, 1) == sc.a[0]);  // a_1 in the last column
    CHECK(psi.at(1, 1) == Poly::one(f));
    MatPoly q1 = q1_form(pushforward_trivial(sc), sc);
    CHECK(q1.at(0, 0) == Poly::one(f));
    CHECK(q1.at(0, 1).is_zero());
    CHECK(q1.at(1, 0).is_zero());
    CHECK(q1.at(1, 1) == -sc.a[1]);
  }
  SUBCASE("p = 3") {
    SpectralCoeffs sc;
    sc.p = 3;
    sc.q = 1;
    sc.g = 2;
    Poly a1 = Poly::from_ints(f, {0, 1});
    Poly a2 = Poly::from_ints(f, {1, 0, 1});
    Poly a3 = Poly::from_ints(f, {-1, 0, 0, 1});
    sc.a = {a1, a2, a3};
    CayleyTriple ct = pushforward_trivial(sc);
    MatPoly q1 = q1_form(ct, sc);
    CHECK(q1.at(0, 0).is_zero());
    CHECK(q1.at(0, 1) == Poly::one(f));
    CHECK(q1.at(1, 1) == -a1);
    CHECK(q1.at(2, 2) == -a3);
    CHECK(q1.at(0, 2).is_zero());
    CHECK(q1.at(1, 2).is_zero());
    CHECK(q1.at(2, 0).is_zero());
    CHECK(q1.at(2, 1).is_zero());
    // the reframed last basis vector maps to -a_3 times the first
    MatPoly image = ct.beta_f * psi_matrix(sc);
    CHECK(image.at(0, 2) == -a3);
    CHECK(image.at(1, 2).is_zero());
    CHECK(image.at(2, 2).is_zero());
  }
}

TEST_CASE("Q1 upper block matches the complete homogeneous table") {
  Field f = Field::default_prime();
  Rng rng(509);
  for (int p = 2; p <= 4; ++p) {
    SpectralCoeffs sc = random_regular_sc(rng, f, p, 1, 2, 3, false);
    MatPoly q1 = q1_form(pushforward_trivial(sc), sc);
    std::vector<Poly> h = complete_homogeneous(sc, 2 * p - 4 >= 0 ? 2 * p - 4 : 0);
    for (int i = 0; i + 1 < p; ++i)
      for (int j = 0; j + 1 < p; ++j) {
        Poly want = i + j >= p - 2 ? h[i + j + 2 - p] : Poly::zero(f);
        CHECK(q1.at(i, j) == want);
      }
    CHECK(q1.at(p - 1, p - 1) == -sc.ap());
    for (int i = 0; i + 1 < p; ++i) {
      CHECK(q1.at(i, p - 1).is_zero());
      CHECK(q1.at(p - 1, i).is_zero());
    }
  }
}

TEST_CASE("literal theorem Gram matrix is the documented pitfall") {
  // Reading the displayed V pairing as a chart matrix gives det ~ a_p^2,
  // which is not unimodular; the honest chart comes out of build_split.
  Field f = Field::default_prime();
  SplitSpec spec = make_spec(f, 2, {Poly::one(f), Poly::from_ints(f, {-1, 0, 1})}, {1, 1});
  MatPoly q1 = q1_form(pushforward_trivial(spec.sc), spec.sc);
  MatPoly w0_block = q1.submatrix(0, 1, 0, 1);
  Poly half_ap = spec.sc.ap() * Scalar(f, 2).inverse();
  MatPoly hyper(f, 2, 2);
  hyper.at(0, 1) = half_ap;
  hyper.at(1, 0) = half_ap;
  MatPoly literal = MatPoly::block_diag(w0_block, hyper);
  CHECK_FALSE(is_unimodular(literal));
  Poly d = det(literal);
  Poly ap2 = spec.sc.ap() * spec.sc.ap();
  CHECK(d.divisible_by(ap2));
  CHECK(d.exact_div(ap2).is_unit());

  OrthHiggsChart honest = build_split(spec);
  CHECK(is_unimodular(honest.qv));
}

TEST_CASE("torsor: eight sign vectors, four canonical outputs") {
  Field f = Field::default_prime();
  Poly a1 = Poly::X(f) * Poly::from_ints(f, {-1, 1}) * Poly::from_ints(f, {1, 1});
  SplitSpec base = make_spec(f, 1, {a1}, {1, 1, 1});

  std::set<std::string> canon;
  std::set<std::string> smith_beta;
  BiPoly model = char_poly_model(base.sc);
  for (int mask = 0; mask < 8; ++mask) {
    SplitSpec spec = base;
    for (int k = 0; k < 3; ++k) spec.signs[k] = mask >> k & 1 ? 1 : -1;
    OrthHiggsChart chart = build_split(spec);
    CHECK(char_poly(chart.phi()) == model);
    std::string sm;
    for (const Poly& s : smith_invariants(chart.beta)) sm += s.str() + ";";
    smith_beta.insert(sm);
    canon.insert(canonical_key(spec));
  }
  CHECK(canon.size() == 4);
  CHECK(smith_beta.size() == 1);
}
