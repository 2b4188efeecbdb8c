#include "higgs_chart.hpp"

#include <doctest.h>

#include "sampling.hpp"

using namespace higgslab;

namespace {

SpectralCoeffs golden_sc(Field f) {
  SpectralCoeffs sc;
  sc.p = 1;
  sc.q = 1;
  sc.g = 2;
  sc.a = {Poly::X(f)};
  return sc;
}

// Q_V = [[0,1],[1,z]], Q_W = [1], beta = (z,-1)^t over weights V:(-1,1) W:(0)
OrthHiggsChart golden_chart(Field f) {
  MatPoly qv(f, 2, 2);
  qv.at(0, 1) = Poly::one(f);
  qv.at(1, 0) = Poly::one(f);
  qv.at(1, 1) = Poly::X(f);
  MatPoly qw(f, 1, 1);
  qw.at(0, 0) = Poly::one(f);
  MatPoly beta(f, 2, 1);
  beta.at(0, 0) = Poly::X(f);
  beta.at(1, 0) = -Poly::one(f);
  return assemble_orth({-1, 1}, {0}, {}, qv, qw, beta);
}

bool all_pass(const CheckList& cl) { return cl.ok(); }

}  // namespace

TEST_CASE("assemble and verify the golden rank (2,1) chart") {
  for (Field f : {Field::default_prime(), Field::rationals()}) {
    CAPTURE(f.modulus);
    OrthHiggsChart c = golden_chart(f);
    CHECK(c.p() == 1);
    CHECK(c.q() == 1);
    CHECK(c.v0_weights == std::vector<int>{-1});
    // gamma = Q_W^{-1} beta^t Q_V = (-1, 0)
    CHECK(c.gamma.at(0, 0) == -Poly::one(f));
    CHECK(c.gamma.at(0, 1) == Poly::zero(f));

    CheckList cl = verify_so(c, golden_sc(f));
    for (const auto& chk : cl.checks) {
      CAPTURE(chk.name);
      CAPTURE(chk.detail);
      CHECK(chk.pass);
    }
    CHECK(all_pass(cl));
  }
}

TEST_CASE("assemble rejects malformed Gram matrices") {
  Field f = Field::default_prime();
  MatPoly qv(f, 2, 2);
  qv.at(0, 1) = Poly::one(f);  // asymmetric
  MatPoly qw = MatPoly::identity(f, 1);
  MatPoly beta(f, 2, 1);
  beta.at(0, 0) = Poly::one(f);
  CHECK_THROWS_AS(assemble_orth({-1, 1}, {0}, {}, qv, qw, beta), HlError);

  MatPoly qv2(f, 2, 2);  // symmetric but det = -z^2 is not a unit
  qv2.at(0, 1) = Poly::X(f);
  qv2.at(1, 0) = Poly::X(f);
  try {
    assemble_orth({-1, 1}, {0}, {}, qv2, qw, beta);
    CHECK(false);
  } catch (const HlError& e) {
    CHECK(e.code == Errc::degenerate_form);
  }
}

TEST_CASE("verify_so flags a chart whose char poly misses the model") {
  Field f = Field::default_prime();
  OrthHiggsChart c = golden_chart(f);
  SpectralCoeffs sc = golden_sc(f);
  sc.a = {Poly::from_ints(f, {1, 1})};  // a_1 = z + 1 while the chart encodes z
  CheckList cl = verify_so(c, sc);
  bool char_ok = true;
  for (const auto& chk : cl.checks)
    if (chk.name == "char_poly_model") char_ok = chk.pass;
  CHECK_FALSE(char_ok);
  CHECK_FALSE(cl.ok());
}

TEST_CASE("kernel quadratic bundle of the golden chart") {
  for (Field f : {Field::default_prime(), Field::rationals()}) {
    OrthHiggsChart c = golden_chart(f);
    SpectralCoeffs sc = golden_sc(f);
    CheckList cl;
    QuadraticBundle v0 = kernel_quadratic(c, sc, &cl);
    CHECK(all_pass(cl));
    CHECK(v0.rank() == 1);
    CHECK(v0.basis.at(0, 0) == Poly::zero(f));
    CHECK(v0.basis.at(1, 0) == Poly::one(f));
    CHECK(v0.q0.at(0, 0) == Poly::X(f));
    CHECK(v0.weights == std::vector<int>{-1});
    // strict mode passes silently
    CHECK_NOTHROW(kernel_quadratic(c, sc, nullptr));
  }
}

TEST_CASE("kernel quadratic reports a determinant mismatch in both modes") {
  Field f = Field::default_prime();
  OrthHiggsChart c = golden_chart(f);
  SpectralCoeffs sc = golden_sc(f);
  sc.a = {Poly::from_ints(f, {0, 0, 1})};  // a_1 = z^2, det Q_0 = z stays
  CheckList cl;
  kernel_quadratic(c, sc, &cl);
  CHECK_FALSE(cl.ok());
  try {
    kernel_quadratic(c, sc, nullptr);
    CHECK(false);
  } catch (const HlError& e) {
    CHECK(e.code == Errc::determinant_mismatch);
    CHECK(errc_is_verification(e.code));
  }
}

TEST_CASE("quotient chart of the golden chart") {
  for (Field f : {Field::default_prime(), Field::rationals()}) {
    OrthHiggsChart c = golden_chart(f);
    SpectralCoeffs sc = golden_sc(f);
    CheckList cl;
    UppQuotient u = upp_quotient(c, sc, &cl);
    CHECK(all_pass(cl));
    // completion starts with the kernel column and is unimodular
    CHECK(u.completion.rows() == 2);
    CHECK(u.completion.at(0, 0) == Poly::zero(f));
    CHECK(u.completion.at(1, 0) == Poly::one(f));
    CHECK(is_unimodular(u.completion));
    // beta_F = gamma_+ beta_+ is frame independent and equals -z
    MatPoly bf = u.gamma_plus * u.beta_plus;
    CHECK(bf.rows() == 1);
    CHECK(bf.at(0, 0) == -Poly::X(f));
    CHECK(det(u.gamma_plus).is_unit());
  }
}

TEST_CASE("Cayley triple of the golden chart") {
  Field f = Field::default_prime();
  OrthHiggsChart c = golden_chart(f);
  SpectralCoeffs sc = golden_sc(f);
  CheckList cl;
  CayleyTriple ct = cayley_triple(c, sc, &cl);
  CHECK(all_pass(cl));
  CHECK(ct.w_weights == std::vector<int>{0});
  CHECK(ct.beta_f.at(0, 0) == -Poly::X(f));
  CHECK_FALSE(ct.companion_frame);
  CHECK(det(ct.beta_f) == -Poly::X(f));  // (-1)^p a_p with p = 1

  CheckList again = verify_triple(ct, sc);
  CHECK(all_pass(again));
}

TEST_CASE("Cayley symplectic structure of the golden chart") {
  Field f = Field::default_prime();
  OrthHiggsChart c = golden_chart(f);
  SpectralCoeffs sc = golden_sc(f);
  CheckList cl;
  SpCayley s = cayley_symplectic(c, sc, &cl);
  CHECK(all_pass(cl));
  CHECK(s.twice_weights == std::vector<int>{1, -1});
  // omega = [[0,1],[-1,0]]
  CHECK(s.omega.at(0, 1) == Poly::one(f));
  CHECK(s.omega.at(1, 0) == -Poly::one(f));
  CHECK(s.omega.at(0, 0).is_zero());
  // phi_F = [[0,-z],[1,0]]
  CHECK(s.phi_f.at(0, 1) == -Poly::X(f));
  CHECK(s.phi_f.at(1, 0) == Poly::one(f));
  CHECK(char_poly(s.phi_f) == quotient_cover_poly(sc).stretch2());
}

TEST_CASE("companion frame for p = 2 has the Hankel pairing") {
  Field f = Field::default_prime();
  SpectralCoeffs sc;
  sc.p = 2;
  sc.q = 1;
  sc.g = 2;
  Poly a1 = Poly::X(f);
  Poly a2 = Poly::from_ints(f, {1, 0, 1});  // z^2 + 1
  sc.a = {a1, a2};
  REQUIRE(regularity_check(sc).ok());

  CayleyTriple ct = pushforward_trivial(sc);
  CHECK(ct.companion_frame);
  CHECK(ct.w_weights == std::vector<int>{1, -1});
  // Q_W = [[0,1],[1,-a1]]
  CHECK(ct.qw.at(0, 0).is_zero());
  CHECK(ct.qw.at(0, 1) == Poly::one(f));
  CHECK(ct.qw.at(1, 0) == Poly::one(f));
  CHECK(ct.qw.at(1, 1) == -a1);
  // beta_F = [[0,-a2],[1,-a1]]
  CHECK(ct.beta_f.at(0, 0).is_zero());
  CHECK(ct.beta_f.at(0, 1) == -a2);
  CHECK(ct.beta_f.at(1, 0) == Poly::one(f));
  CHECK(ct.beta_f.at(1, 1) == -a1);
  CHECK(det(ct.beta_f) == a2);  // (-1)^2 a_2

  CheckList cl = verify_triple(ct, sc);
  for (const auto& chk : cl.checks) {
    CAPTURE(chk.name);
    CAPTURE(chk.detail);
    CHECK(chk.pass);
  }
}

TEST_CASE("companion frame for p = 3, frozen layout") {
  Field f = Field::default_prime();
  Rng rng(11);
  SpectralCoeffs sc = random_regular_sc(rng, f, 3, 1, 2, 5, false);
  Poly a1 = sc.a[0], a2 = sc.a[1], a3 = sc.a[2];
  CayleyTriple ct = pushforward_trivial(sc);
  CHECK(ct.w_weights == std::vector<int>{2, 0, -2});
  // Q_W = [[0,0,1],[0,1,-a1],[1,-a1,a1^2-a2]]
  CHECK(ct.qw.at(0, 2) == Poly::one(f));
  CHECK(ct.qw.at(1, 1) == Poly::one(f));
  CHECK(ct.qw.at(1, 2) == -a1);
  CHECK(ct.qw.at(2, 2) == a1 * a1 - a2);
  CHECK(ct.qw.at(0, 0).is_zero());
  CHECK(ct.qw.at(0, 1).is_zero());
  // companion last column (-a3, -a2, -a1)
  CHECK(ct.beta_f.at(0, 2) == -a3);
  CHECK(ct.beta_f.at(1, 2) == -a2);
  CHECK(ct.beta_f.at(2, 2) == -a1);
  CHECK(ct.beta_f.at(1, 0) == Poly::one(f));
  CHECK(ct.beta_f.at(2, 1) == Poly::one(f));
  CHECK(verify_triple(ct, sc).ok());
}

TEST_CASE("companion pairing matches the root sum duality oracle") {
  // At a fiber where the quotient cover splits with distinct roots r_k, the
  // pairing of xi^i and xi^j must be sum_k r_k^{i+j} / pbar'(r_k).
  Field f = Field::default_prime();
  Rng rng(23);
  for (int p = 1; p <= 3; ++p) {
    for (int trial = 0; trial < 6; ++trial) {
      SpectralCoeffs sc = random_regular_sc(rng, f, p, 1, 2, 4, false);
      CayleyTriple ct = pushforward_trivial(sc);
      int found = 0;
      for (long long x0 = 0; x0 < 400 && found < 2; ++x0) {
        Scalar z0(f, x0);
        std::vector<Scalar> cs;
        for (int i = 0; i <= p; ++i) cs.push_back(sc.a_coeff(p - i).eval(z0));
        Poly fiber(f, cs);  // pbar specialized at z0, variable xi
        if (!poly_squarefree(fiber)) continue;
        std::vector<Scalar> roots;
        try {
          roots = field_roots(fiber);
        } catch (const HlError&) {
          continue;
        }
        ++found;
        Poly dfiber = fiber.derivative();
        for (int i = 0; i < p; ++i)
          for (int j = 0; j < p; ++j) {
            Scalar sum = Scalar::zero(f);
            for (const Scalar& r : roots) {
              Scalar pw = Scalar::one(f);
              for (int e = 0; e < i + j; ++e) pw = pw * r;
              sum = sum + pw / dfiber.eval(r);
            }
            CAPTURE(p);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(ct.qw.at(i, j).eval(z0) == sum);
          }
      }
      CHECK(found > 0);
    }
  }
}

TEST_CASE("branch fiber kernel vector of the companion frame") {
  Field f = Field::default_prime();
  Rng rng(37);
  for (int p = 1; p <= 3; ++p) {
    for (int trial = 0; trial < 8; ++trial) {
      SpectralCoeffs sc = random_regular_sc(rng, f, p, 1, 2, 4, true);
      CayleyTriple ct = pushforward_trivial(sc);
      for (const Scalar& x : branch_points(sc)) {
        // jhat = (a_{p-1}, ..., a_1, 1) evaluated at the branch point
        MatScalar jhat(f, p, 1);
        for (int i = 0; i < p; ++i) jhat.at(i, 0) = sc.a_coeff(p - 1 - i).eval(x);
        MatScalar bf = eval_mat(ct.beta_f, x);
        CHECK((bf * jhat).is_zero());
        MatScalar qx = eval_mat(ct.qw, x);
        MatScalar pair = jhat.transpose() * qx * jhat;
        CHECK(pair.at(0, 0) == sc.a_coeff(p - 1).eval(x));
      }
    }
  }
}

TEST_CASE("doubled chart verifies as a symplectic chart") {
  for (Field f : {Field::default_prime(), Field::rationals()}) {
    OrthHiggsChart c = golden_chart(f);
    SpectralCoeffs sc = golden_sc(f);
    SymplecticChart s = doubled_symplectic(c);
    CHECK(s.v_weights.size() == 4);
    CHECK(s.w_weights.size() == 2);
    CheckList cl = verify_sp(s, sc);
    for (const auto& chk : cl.checks) {
      CAPTURE(chk.name);
      CAPTURE(chk.detail);
      CHECK(chk.pass);
    }
  }
}

TEST_CASE("verify_so rejects mismatched ranks outright") {
  Field f = Field::default_prime();
  OrthHiggsChart c = golden_chart(f);
  SpectralCoeffs sc;
  sc.p = 2;
  sc.q = 1;
  sc.g = 2;
  sc.a = {Poly::X(f), Poly::from_ints(f, {1, 1})};
  CHECK_THROWS_AS(verify_so(c, sc), HlError);
}
