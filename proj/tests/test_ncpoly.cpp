#include <doctest.h>

#include <complex>
#include <random>

#include "qs3/element.hpp"
#include "qs3/rewrite.hpp"
#include "test_util.hpp"

using namespace qs3;

namespace {

Monomial mono(int alpha, int beta, Proj proj = Proj::None, int k = 0) {
  Monomial m;
  m.alpha = alpha;
  m.beta = beta;
  m.proj = proj;
  m.k = k;
  return m;
}

}  // namespace

TEST_CASE("a*a normalizes to 1 - pA") {
  for (double p : {0.5, 0.3, 0.9}) {
    AlgebraPresentation pres = AlgebraPresentation::sphere_pq(p, 0.3, 0.37);
    NCElement a = NCElement::generator(pres, 0);
    NCElement prod = multiply(adjoint(a), a);
    CHECK(prod.terms().size() == 2);
    CHECK(std::abs(prod.coeff(Monomial::unit()) - cplx(1.0)) < 1e-14);
    CHECK(std::abs(prod.coeff(mono(0, 0, Proj::First, 1)) - cplx(-p)) < 1e-14);
  }
}

TEST_CASE("one is the multiplicative unit") {
  std::mt19937_64 rng(7);
  for (const AlgebraPresentation& pres : testutil::sample_presentations()) {
    NCElement one = NCElement::one(pres);
    for (int i = 0; i < 20; ++i) {
      NCElement e = testutil::random_element(pres, rng);
      CHECK(approx_equal(multiply(one, e), e));
      CHECK(approx_equal(multiply(e, one), e));
    }
  }
}

TEST_CASE("ab = mu ba at theta = 1/4") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_pq(0.5, 0.5, 0.25);
  cplx mu = pres.mu();
  CHECK(std::abs(mu - cplx(0.0, 1.0)) < 1e-15);
  NCElement a = NCElement::generator(pres, 0);
  NCElement b = NCElement::generator(pres, 1);
  NCElement ab = multiply(a, b);
  NCElement ba = multiply(b, a);
  CHECK(approx_equal(ab, mu * ba));
}

TEST_CASE("A_k B_l vanish in the 00-sphere") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.37);
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      NCElement prod = multiply(NCElement::projector(pres, 0, k),
                                NCElement::projector(pres, 1, l));
      CHECK(prod.is_zero());
    }
}

TEST_CASE("adjoint basics") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_pq(0.5, 0.3, 0.37);
  NCElement a = NCElement::generator(pres, 0);
  NCElement astar = adjoint(a);
  CHECK(astar.terms().size() == 1);
  CHECK(std::abs(astar.coeff(mono(-1, 0)) - cplx(1.0)) < 1e-15);

  cplx lam(0.4, -1.7);
  NCElement scaled = lam * NCElement::one(pres);
  CHECK(std::abs(adjoint(scaled).coeff(Monomial::unit()) - std::conj(lam)) < 1e-15);
}

TEST_CASE("adjoint is an involution on random elements") {
  std::mt19937_64 rng(11);
  for (const AlgebraPresentation& pres : testutil::sample_presentations()) {
    for (int i = 0; i < 100; ++i) {
      NCElement e = testutil::random_element(pres, rng);
      CHECK(approx_equal(adjoint(adjoint(e)), e, 1e-10));
    }
  }
}

TEST_CASE("adjoint is anti-multiplicative") {
  std::mt19937_64 rng(13);
  for (const AlgebraPresentation& pres : testutil::sample_presentations()) {
    for (int i = 0; i < 25; ++i) {
      NCElement e1 = testutil::random_element(pres, rng, 4);
      NCElement e2 = testutil::random_element(pres, rng, 4);
      CHECK(approx_equal(adjoint(multiply(e1, e2)), multiply(adjoint(e2), adjoint(e1)), 1e-10));
    }
  }
}

// Paper reduction s t t*^2 = s t* - s t* B_2 (the l > k case of the span
// proof, k = 1, l = 2); the operator oracle in test_repn cross-checks it.
TEST_CASE("normal form of s t t* t*") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.37);
  NCElement nf = normal_form(parse_word(pres, "s t t* t*"), pres);
  CHECK(nf.terms().size() == 2);
  CHECK(std::abs(nf.coeff(mono(1, -1)) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(nf.coeff(mono(1, -1, Proj::Second, 2)) - cplx(-1.0)) < 1e-14);
}

TEST_CASE("normal form of s s*") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.5);
  NCElement nf = normal_form(parse_word(pres, "s s*"), pres);
  CHECK(nf.terms().size() == 2);
  CHECK(std::abs(nf.coeff(Monomial::unit()) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(nf.coeff(mono(0, 0, Proj::First, 1)) - cplx(-1.0)) < 1e-15);
}

TEST_CASE("normal form of z* z z in the quantum disc") {
  // z*z = 1 - qZ and Zz = qzZ give z*zz = z - q^2 zZ.
  AlgebraPresentation pres = AlgebraPresentation::disc(0.5);
  NCElement nf = normal_form(parse_word(pres, "z* z z"), pres);
  CHECK(nf.terms().size() == 2);
  CHECK(std::abs(nf.coeff(mono(1, 0)) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(nf.coeff(mono(1, 0, Proj::First, 1)) - cplx(-0.25)) < 1e-14);
}

TEST_CASE("defining relations normalize to zero") {
  for (const AlgebraPresentation& pres : testutil::sample_presentations()) {
    for (const RelationWords& rel : defining_relations(pres)) {
      NCElement acc(pres);
      for (const auto& [c, w] : rel.combo) acc += c * normal_form(w, pres);
      CAPTURE(pres.to_string());
      CAPTURE(rel.name);
      CHECK(acc.is_zero(1e-13));
    }
  }
}

TEST_CASE("check_identity matches the A_k/B_k identities") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.37);
  CHECK(check_identity(pres, "A_{k+1}=sA_ks*+A_1", 5));
  CHECK(check_identity(pres, "AkBl_zero", 4));
  CHECK(check_identity(pres, "[t,A_k]=0", 5));
  for (const std::string& id : known_identities()) CHECK(check_identity(pres, id, 4));
  CHECK_THROWS_AS(check_identity(pres, "no_such_identity", 3), std::invalid_argument);
  CHECK_THROWS_AS(check_identity(pres, "AkBl_zero", 0), std::invalid_argument);
  // identities on the indexed slots need the parameter to vanish
  AlgebraPresentation pq = AlgebraPresentation::sphere_pq(0.5, 0.5, 0.37);
  CHECK_THROWS_AS(check_identity(pq, "AkBl_zero", 2), std::invalid_argument);
}

TEST_CASE("basis monomial counts") {
  // independent enumeration of the indexed-basis side conditions
  {
    AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.37);
    std::vector<Monomial> basis = basis_monomials(pres, Bounds{1, 1, 1});
    int plain = 0, a_k = 0, b_k = 0;
    int expect_plain = 0, expect_a = 0, expect_b = 0;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b) {
        ++expect_plain;
        if (a > -1) ++expect_a;
        if (b > -1) ++expect_b;
      }
    for (const Monomial& m : basis) {
      if (m.proj == Proj::None) ++plain;
      if (m.proj == Proj::First) ++a_k;
      if (m.proj == Proj::Second) ++b_k;
    }
    CHECK(plain == expect_plain);
    CHECK(plain == 9);
    CHECK(a_k == expect_a);
    CHECK(a_k == 6);
    CHECK(b_k == expect_b);
    CHECK(b_k == 6);
    CHECK(basis.size() == 21);
  }
  {
    AlgebraPresentation pres = AlgebraPresentation::sphere_pq(0.5, 0.5, 0.37);
    std::vector<Monomial> basis = basis_monomials(pres, Bounds{0, 0, 0});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Monomial::unit());
  }
  {
    AlgebraPresentation pres = AlgebraPresentation::disc(0.5);
    CHECK(basis_monomials(pres, Bounds{1, 0, 1}).size() == 6);
  }
}

TEST_CASE("monomials violating side conditions are rejected") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.37);
  CHECK_FALSE(monomial_valid(pres, mono(-1, 0, Proj::First, 1)));  // s* A_1 = 0
  CHECK(monomial_valid(pres, mono(0, 0, Proj::First, 1)));
  CHECK_FALSE(monomial_valid(pres, mono(0, -2, Proj::Second, 2)));
  CHECK(monomial_valid(pres, mono(0, -1, Proj::Second, 2)));
  CHECK_THROWS_AS(NCElement::monomial(pres, mono(-1, 0, Proj::First, 1)),
                  std::invalid_argument);
}

TEST_CASE("mismatched presentations are a usage error") {
  AlgebraPresentation p1 = AlgebraPresentation::sphere_00(0.2);
  AlgebraPresentation p2 = AlgebraPresentation::sphere_00(0.3);
  CHECK_THROWS_AS(multiply(NCElement::one(p1), NCElement::one(p2)), std::invalid_argument);
}

TEST_CASE("rewriting is confluent under randomized rule order") {
  std::mt19937_64 rng(20240501);
  for (const AlgebraPresentation& pres : testutil::sample_presentations()) {
    int words = pres.name == AlgebraName::SpherePQ || pres.name == AlgebraName::Sphere00
                    ? 500
                    : 150;
    for (int i = 0; i < words; ++i) {
      Word w = testutil::random_word(pres, rng, 8);
      NCElement det = normal_form(w, pres);
      NCElement rnd = normal_form_randomized(w, pres, rng());
      CAPTURE(pres.to_string());
      CAPTURE(word_to_string(pres, w));
      REQUIRE(approx_equal(det, rnd, 1e-10));
    }
  }
}

TEST_CASE("multiply agrees with concatenation") {
  std::mt19937_64 rng(99);
  for (const AlgebraPresentation& pres : testutil::sample_presentations()) {
    for (int i = 0; i < 25; ++i) {
      Word w1 = testutil::random_word(pres, rng, 6);
      Word w2 = testutil::random_word(pres, rng, 6);
      Word cat = w1;
      cat.insert(cat.end(), w2.begin(), w2.end());
      NCElement lhs = multiply(normal_form(w1, pres), normal_form(w2, pres));
      NCElement rhs = normal_form(cat, pres);
      REQUIRE(approx_equal(lhs, rhs, 1e-10));
    }
  }
}

TEST_CASE("multiplication is associative up to tolerance") {
  std::mt19937_64 rng(5);
  for (const AlgebraPresentation& pres : testutil::sample_presentations()) {
    for (int i = 0; i < 10; ++i) {
      NCElement e1 = testutil::random_element(pres, rng, 3);
      NCElement e2 = testutil::random_element(pres, rng, 3);
      NCElement e3 = testutil::random_element(pres, rng, 3);
      CHECK(approx_equal(multiply(multiply(e1, e2), e3), multiply(e1, multiply(e2, e3)),
                         1e-9));
    }
  }
}

TEST_CASE("A-monomials annihilate B-monomials in SpherePQ") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_pq(0.5, 0.3, 0.37);
  for (int m = 1; m <= 3; ++m)
    for (int mp = 1; mp <= 3; ++mp) {
      NCElement prod = multiply(NCElement::monomial(pres, mono(1, -2, Proj::First, m)),
                                NCElement::monomial(pres, mono(-1, 1, Proj::Second, mp)));
      CHECK(prod.is_zero(1e-12));
    }
}

TEST_CASE("canonical serialization") {
  AlgebraPresentation pres = AlgebraPresentation::sphere_pq(0.5, 0.3, 0.0);
  NCElement e = multiply(adjoint(NCElement::generator(pres, 0)), NCElement::generator(pres, 0));
  CHECK(e.to_string() == "1+0i * a_{0} b_{0} + -0.5+0i * a_{0} b_{0} A^{1}");

  AlgebraPresentation cp = AlgebraPresentation::crossed_plus(0.25);
  NCElement m = NCElement::monomial(cp, Monomial{2, 1, -3, Proj::None, 0}, cplx(0.5, -0.25));
  CHECK(m.to_string() == "0.5-0.25i * u^-3 s+^2 s+*^1");
}
