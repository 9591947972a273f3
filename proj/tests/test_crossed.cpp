#include <doctest.h>

#include <cmath>
#include <random>

#include "qs3/crossed.hpp"
#include "qs3/rewrite.hpp"
#include "test_util.hpp"

using namespace qs3;

namespace {
constexpr double kTheta = 0.37;
}

TEST_CASE("crossed product normal form") {
  cplx mu = std::polar(1.0, kTwoPi * kTheta);
  CrossedElement s = CrossedElement::shift(Side::Plus, kTheta);
  CrossedElement u = CrossedElement::rotation(Side::Plus, kTheta);

  // s+ u = mu u s+
  CrossedElement prod = s * u;
  auto terms = prod.terms();
  REQUIRE(terms.size() == 1);
  CHECK(std::abs(terms.at({1, 1, 0}) - mu) < 1e-15);

  // s+* s+ = 1
  CrossedElement isom = adjoint(s) * s;
  CHECK(approx_equal(isom, CrossedElement::one(Side::Plus, kTheta)));

  // 1 - s+s+* is a projection
  CrossedElement proj = CrossedElement::one(Side::Plus, kTheta) -
                        CrossedElement::monomial(Side::Plus, kTheta, 0, 1, 1);
  CHECK(approx_equal(proj * proj, proj));

  CrossedElement minus = CrossedElement::shift(Side::Minus, kTheta);
  CHECK_THROWS_AS(crossed_multiply(s, minus), std::invalid_argument);
}

TEST_CASE("symbol maps") {
  cplx mu = std::polar(1.0, kTwoPi * kTheta);

  // pi1(u^2 s+) = y^2 x = mu^{-2} x y^2
  CrossedElement e = CrossedElement::monomial(Side::Plus, kTheta, 2, 1, 0);
  TorusElement img = pi1(e);
  auto terms = img.terms();
  REQUIRE(terms.size() == 1);
  CHECK(std::abs(terms.at({1, 2}) - std::pow(mu, -2)) < 1e-15);

  // pi1(1 - s+s+*) = 0
  CrossedElement proj = CrossedElement::one(Side::Plus, kTheta) -
                        CrossedElement::monomial(Side::Plus, kTheta, 0, 1, 1);
  CHECK(pi1(proj).is_zero());

  // pi2(v) = x
  TorusElement x = pi2(CrossedElement::rotation(Side::Minus, kTheta));
  REQUIRE(x.terms().size() == 1);
  CHECK(std::abs(x.terms().at({1, 0}) - cplx(1.0)) < 1e-15);

  CHECK_THROWS_AS(pi1(CrossedElement::one(Side::Minus, kTheta)), std::invalid_argument);
  CHECK_THROWS_AS(pi2(CrossedElement::one(Side::Plus, kTheta)), std::invalid_argument);
}

TEST_CASE("pi1 and pi2 are algebra maps") {
  std::mt19937_64 rng(17);
  AlgebraPresentation plus = AlgebraPresentation::crossed_plus(kTheta);
  AlgebraPresentation minus = AlgebraPresentation::crossed_minus(kTheta);
  for (int i = 0; i < 50; ++i) {
    CrossedElement a(testutil::random_element(plus, rng, 5));
    CrossedElement b(testutil::random_element(plus, rng, 5));
    CHECK(approx_equal(pi1(a * b), torus_multiply(pi1(a), pi1(b)), 1e-10));
    CrossedElement c(testutil::random_element(minus, rng, 5));
    CrossedElement d(testutil::random_element(minus, rng, 5));
    CHECK(approx_equal(pi2(c * d), torus_multiply(pi2(c), pi2(d)), 1e-10));
  }
}

TEST_CASE("h on generators and small products") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(kTheta);
  cplx mu = std::polar(1.0, kTwoPi * kTheta);

  NCElement s = NCElement::generator(pres, 0);
  FiberPair hs = h_image(s);
  CHECK(hs.fiber_check());
  CHECK(approx_equal(hs.plus, CrossedElement::shift(Side::Plus, kTheta)));
  CHECK(approx_equal(hs.minus, CrossedElement::rotation(Side::Minus, kTheta)));

  // h(st) = (s+u, v t-); both symbols are xy
  NCElement st = multiply(s, NCElement::generator(pres, 1));
  FiberPair hst = h_image(st);
  CHECK(hst.fiber_check());
  auto plus_terms = hst.plus.terms();
  REQUIRE(plus_terms.size() == 1);
  CHECK(std::abs(plus_terms.at({1, 1, 0}) - mu) < 1e-14);
  auto minus_terms = hst.minus.terms();
  REQUIRE(minus_terms.size() == 1);
  CHECK(std::abs(minus_terms.at({1, 1, 0}) - cplx(1.0)) < 1e-14);
  TorusElement xy = torus_multiply(TorusElement::monomial(kTheta, 1, 0),
                                   TorusElement::monomial(kTheta, 0, 1));
  CHECK(approx_equal(pi1(hst.plus), xy));

  FiberPair hone = h_image(NCElement::one(pres));
  CHECK(approx_equal(hone.plus, CrossedElement::one(Side::Plus, kTheta)));
  CHECK(approx_equal(hone.minus, CrossedElement::one(Side::Minus, kTheta)));
}

TEST_CASE("h is a *-homomorphism") {
  std::mt19937_64 rng(23);
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(kTheta);
  for (int i = 0; i < 100; ++i) {
    NCElement e1 = testutil::random_element(pres, rng, 4);
    NCElement e2 = testutil::random_element(pres, rng, 4);
    FiberPair lhs = h_image(multiply(e1, e2));
    FiberPair rhs = h_image(e1) * h_image(e2);
    CHECK(approx_equal(lhs.plus, rhs.plus, 1e-9));
    CHECK(approx_equal(lhs.minus, rhs.minus, 1e-9));
    FiberPair star = h_image(adjoint(e1));
    FiberPair star2 = h_image(e1).adjoint();
    CHECK(approx_equal(star.plus, star2.plus, 1e-9));
    CHECK(approx_equal(star.minus, star2.minus, 1e-9));
    CHECK(lhs.fiber_check(1e-9));
  }
}

TEST_CASE("j_c on matrix units") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(kTheta);
  using MU = MatrixUnitElement;

  // E_00 (x) 1 lands on A_1 = 1 - ss*
  NCElement a1 = jc_image(MU::basis(MU::Summand::Left, 0, 0, 0), kTheta);
  REQUIRE(a1.terms().size() == 1);
  CHECK(std::abs(a1.coeff(Monomial{0, 0, 0, Proj::First, 1}) - cplx(1.0)) < 1e-14);

  // E_12 (x) w agrees with the product s (1-ss*) t s*^2
  NCElement e12 = jc_image(MU::basis(MU::Summand::Left, 1, 2, 1), kTheta);
  NCElement s = NCElement::generator(pres, 0);
  NCElement t = NCElement::generator(pres, 1);
  NCElement byhand = multiply(
      multiply(multiply(s, NCElement::one(pres) - multiply(s, adjoint(s))), t),
      multiply(adjoint(s), adjoint(s)));
  CHECK(approx_equal(e12, byhand, 1e-12));

  // multiplicativity: jc(E_ij (x) w^n) jc(E_kl (x) w^m) = delta_jk jc(E_il (x) w^{n+m})
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l)
          for (int n : {0, 1})
            for (int m : {-1, 1}) {
              NCElement prod = multiply(jc_image(MU::basis(MU::Summand::Left, i, j, n), kTheta),
                                        jc_image(MU::basis(MU::Summand::Left, k, l, m), kTheta));
              if (j == k) {
                CHECK(approx_equal(prod,
                                   jc_image(MU::basis(MU::Summand::Left, i, l, n + m), kTheta),
                                   1e-11));
              } else {
                CHECK(prod.is_zero(1e-11));
              }
            }

  // adjoints swap the indices and invert the circle power
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      NCElement lhs = adjoint(jc_image(MU::basis(MU::Summand::Right, i, j, 1), kTheta));
      NCElement rhs = jc_image(MU::basis(MU::Summand::Right, j, i, -1), kTheta);
      CHECK(approx_equal(lhs, rhs, 1e-12));
    }

  // linearity
  MU combo;
  combo.add(MU::Summand::Left, 0, 1, 0, cplx(2.0, 1.0));
  combo.add(MU::Summand::Right, 1, 0, 1, cplx(0.0, -3.0));
  NCElement sum = jc_image(combo, kTheta);
  NCElement parts = cplx(2.0, 1.0) * jc_image(MU::basis(MU::Summand::Left, 0, 1, 0), kTheta) +
                    cplx(0.0, -3.0) * jc_image(MU::basis(MU::Summand::Right, 1, 0, 1), kTheta);
  CHECK(approx_equal(sum, parts, 1e-13));
}

TEST_CASE("j_d on matrix units") {
  using MU = MatrixUnitElement;
  // (0, w (x) E_00) -> (0, (1 - t-t-*) v)
  FiberPair jd = jd_image(MU::basis(MU::Summand::Right, 0, 0, 1), kTheta);
  CHECK(jd.plus.is_zero());
  auto terms = jd.minus.terms();
  REQUIRE(terms.size() == 2);
  CHECK(std::abs(terms.at({1, 0, 0}) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(terms.at({1, 1, 1}) + cplx(1.0)) < 1e-14);

  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int n : {-2, 0, 2}) {
        CHECK(jd_image(MU::basis(MU::Summand::Left, i, j, n), kTheta).fiber_check());
        CHECK(jd_image(MU::basis(MU::Summand::Right, i, j, n), kTheta).fiber_check());
      }
}

TEST_CASE("matrix-unit criterion for both families") {
  std::function<NCElement(int, int)> es = [](int i, int j) {
    return sphere_matrix_unit(kTheta, i, j);
  };
  std::function<NCElement(int, int)> ws = [](int i, int j) {
    return sphere_matrix_unit_w(kTheta, i, j);
  };
  CHECK(lemma_gen_check<NCElement>(es, ws, 3));

  std::function<CrossedElement(int, int)> ec = [](int i, int j) {
    return crossed_matrix_unit(kTheta, i, j);
  };
  std::function<CrossedElement(int, int)> wc = [](int i, int j) {
    return crossed_matrix_unit_w(kTheta, i, j);
  };
  CHECK(lemma_gen_check<CrossedElement>(ec, wc, 3));

  // corrupting one unit breaks condition (1)
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(kTheta);
  std::function<NCElement(int, int)> corrupted = [&](int i, int j) {
    if (i == 0 && j == 1) return NCElement::zero(pres);
    return sphere_matrix_unit(kTheta, i, j);
  };
  CHECK_FALSE(lemma_gen_check<NCElement>(corrupted, ws, 1));
}

TEST_CASE("plus-minus swap is a normal-form-preserving isomorphism") {
  std::mt19937_64 rng(29);
  AlgebraPresentation plus = AlgebraPresentation::crossed_plus(kTheta);
  for (int i = 0; i < 100; ++i) {
    CrossedElement a(testutil::random_element(plus, rng, 5));
    CrossedElement b(testutil::random_element(plus, rng, 5));
    CHECK(approx_equal(swap_side(a * b), swap_side(a) * swap_side(b), 1e-10));
    CHECK(approx_equal(swap_side(swap_side(a)), a, 1e-12));
    CHECK(approx_equal(swap_side(adjoint(a)), adjoint(swap_side(a)), 1e-10));
    // coefficient-preserving on basis monomials
    for (const auto& [mjl, c] : a.terms()) {
      auto [m, j, l] = mjl;
      CHECK(std::abs(swap_side(a).terms().at({-m, j, l}) - c) < 1e-12);
    }
  }
}

TEST_CASE("short exact sequence evidence") {
  SesReport rep = ses_exactness_check(0.3, SesBounds{});
  CHECK(rep.phi_c_jc_zero);
  CHECK(rep.phi_d_jd_zero);
  CHECK(rep.quotient_torus_relations);
  CHECK(rep.jc_expected_rank == 18);
  CHECK(rep.jc_rank == 18);
  CHECK(rep.pass);

  // phi_c o j_c = 0 spot check, directly
  using MU = MatrixUnitElement;
  for (int n : {-2, -1, 0, 1, 2}) {
    CHECK(phi_c(jc_image(MU::basis(MU::Summand::Left, 3, 2, n), 0.3)).is_zero());
    CHECK(phi_c(jc_image(MU::basis(MU::Summand::Right, 1, 3, n), 0.3)).is_zero());
  }
}

TEST_CASE("torus elements multiply with the rotation phase") {
  cplx mu = std::polar(1.0, kTwoPi * kTheta);
  TorusElement x = TorusElement::monomial(kTheta, 1, 0);
  TorusElement y = TorusElement::monomial(kTheta, 0, 1);
  TorusElement yx = torus_multiply(y, x);
  REQUIRE(yx.terms().size() == 1);
  CHECK(std::abs(yx.terms().at({1, 1}) - std::conj(mu)) < 1e-15);
}
