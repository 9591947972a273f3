#include <doctest.h>

#include <cmath>

#include "qs3/isomap.hpp"
#include "qs3/rewrite.hpp"

using namespace qs3;

TEST_CASE("series coefficients telescope") {
  for (double p : {0.0, 0.1, 0.3, 0.5, 0.7, 0.95})
    for (int K : {1, 5, 20, 40, 120}) {
      SeriesCoeffs c = SeriesCoeffs::make(p, 0.3, K);
      CHECK(std::abs(c.partial_sum_p() - std::sqrt(1.0 - std::pow(p, K))) <= 1e-12);
      CHECK(std::abs(c.partial_sum_q() - std::sqrt(1.0 - std::pow(0.3, K))) <= 1e-12);
      for (double v : c.p_k) CHECK(v >= 0.0);
    }
  CHECK_THROWS_AS(SeriesCoeffs::make(0.5, 0.5, 0), std::invalid_argument);
}

TEST_CASE("default K ties the tail to the tolerance") {
  for (double p : {0.1, 0.3, 0.5, 0.7}) {
    int K = SeriesCoeffs::default_K(p);
    CHECK(1.0 - std::sqrt(1.0 - std::pow(p, K)) < 1e-8);
    CHECK(K <= 200);
  }
  CHECK(SeriesCoeffs::default_K(0.0) == 1);
  CHECK(SeriesCoeffs::default_K(0.99) == 200);
}

TEST_CASE("f(a) collapses to the isometry at p = 0") {
  Cutoff c{12, 6};
  RepSpec rep00 = RepSpec::rho(0.0, 0.0, 0.31);
  SeriesCoeffs coeffs = SeriesCoeffs::make(0.0, 0.0, 10);
  TruncatedOperator fa = f_image(0, coeffs, rep00, c);
  TruncatedOperator s = build_generator(rep00, gen_letter(0), c);
  CHECK(largest_singular_value((fa - s).matrix()) <= 1e-15);
}

TEST_CASE("f(a) under rho at 0 reproduces rho at p (intertwining, entry-exact)") {
  const double p = 0.5, theta = 0.4;
  const int K = 40;
  Cutoff c{16, 6};
  RepSpec rep00 = RepSpec::rho(0.0, 0.0, theta);
  RepSpec repp = RepSpec::rho(p, 0.3, theta);
  SeriesCoeffs coeffs = SeriesCoeffs::make(p, 0.3, K);
  TruncatedOperator fa = f_image(0, coeffs, rep00, c);
  TruncatedOperator a = build_generator(repp, gen_letter(0), c);
  // column (0, n): entry sqrt(1 - 0.5^{n+1}) at row (0, n+1), n + 1 <= K
  for (int n = 0; n + 1 < 16; ++n) {
    cplx got = fa.entry(fa.index(0, n + 1), fa.index(0, n));
    CHECK(std::abs(got - cplx(std::sqrt(1.0 - std::pow(p, n + 1)))) <= 1e-12);
  }
  // all entries agree with rho_p(a) wherever both indices are in range
  for (int col = 0; col < fa.dim(); ++col)
    for (SpMat::InnerIterator it(fa.matrix(), col); it; ++it)
      CHECK(std::abs(it.value() - a.entry(it.row(), col)) <= 1e-12);
}

TEST_CASE("f is a *-map at truncation") {
  const double p = 0.5, theta = 0.27;
  const int K = 24;
  Cutoff c{14, 6};
  RepSpec rep00 = RepSpec::rho(0.0, 0.0, theta);
  SeriesCoeffs coeffs = SeriesCoeffs::make(p, p, K);
  TruncatedOperator fa = f_image(0, coeffs, rep00, c);
  // the adjoint series sum_k p_k s^k s*^{k+1} evaluated term by term
  TruncatedOperator fastar = TruncatedOperator::zero(c, true);
  for (int k = 0; k < K; ++k) {
    Word w;
    for (int i = 0; i < k; ++i) w.push_back(gen_letter(0));
    for (int i = 0; i < k + 1; ++i) w.push_back(gen_letter(0, true));
    TruncatedOperator term = evaluate_word(rep00, w, c);
    term *= coeffs.p_k[k];
    fastar = fastar + term;
  }
  fastar.clamp_reach(3);
  CHECK(interior_norm(fastar - fa.adjoint()) <= 1e-12);
}

TEST_CASE("g(s) normalizes the weighted shift") {
  const double p = 0.5, q = 0.3, theta = 0.4;
  Cutoff c{12, 6};
  RepSpec rep = RepSpec::rho(p, q, theta);
  TruncatedOperator gs = g_image(0, rep, c);
  cplx mu = std::polar(1.0, kTwoPi * theta);
  for (int m = -6; m <= 6; ++m)
    for (int n = 0; n + 1 < 12; ++n) {
      cplx got = gs.entry(gs.index(m, n + 1), gs.index(m, n));
      CHECK(std::abs(got - std::pow(mu, m)) <= 1e-13);
    }
  TruncatedOperator id = TruncatedOperator::identity(c, true);
  CHECK(interior_norm(gs.adjoint() * gs - id) <= 1e-10);

  // p = 0: nothing to normalize
  RepSpec rep0 = RepSpec::rho(0.0, 0.4, theta);
  TruncatedOperator gs0 = g_image(0, rep0, c);
  TruncatedOperator s = build_generator(rep0, gen_letter(0), c);
  CHECK(largest_singular_value((gs0 - s).matrix()) <= 1e-13);
}

TEST_CASE("inverse square root guards against singular input") {
  Cutoff c{4, 1};
  SpMat m(4, 4);
  m.insert(0, 0) = 1.0;
  m.insert(1, 1) = 1e-14;  // below the singularity threshold
  m.insert(2, 2) = 4.0;
  m.makeCompressed();
  TruncatedOperator h(m, c, false, Reach{});
  CHECK_THROWS_AS(hermitian_inv_sqrt(h, 1e-10, /*pseudo=*/false), SingularOperatorError);
  TruncatedOperator pinv = hermitian_inv_sqrt(h, 1e-10, /*pseudo=*/true);
  CHECK(std::abs(pinv.entry(0, 0) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(pinv.entry(1, 1)) == 0.0);
  CHECK(std::abs(pinv.entry(2, 2) - cplx(0.5)) < 1e-14);
}

TEST_CASE("roundtrips vanish at the fixed point and stay small at p = q = 1/2") {
  {
    auto res = roundtrip_residual(0.0, 0.0, 0.3, 5, Cutoff{10, 5});
    for (const auto& [name, v] : res) {
      CAPTURE(name);
      CHECK(v <= 1e-14);
    }
  }
  {
    auto res = roundtrip_residual(0.5, 0.5, 0.3, 40, Cutoff{24, 12});
    REQUIRE(res.size() == 4);
    for (const auto& [name, v] : res) {
      CAPTURE(name);
      CHECK(v <= 1e-6);
    }
  }
}

TEST_CASE("roundtrip residual decreases with the series length") {
  std::vector<double> worst;
  for (int K : {5, 10, 20, 40}) {
    auto res = roundtrip_residual(0.5, 0.5, 0.3, K, Cutoff{24, 12});
    double w = 0.0;
    for (const auto& [name, v] : res) w = std::max(w, v);
    worst.push_back(w);
  }
  CHECK(worst[0] > 1e-4);  // K = 5 leaves a visible tail
  for (size_t i = 0; i + 1 < worst.size(); ++i) CHECK(worst[i + 1] <= worst[i] + 1e-12);
  CHECK(worst.back() <= 1e-6);
}

TEST_CASE("relations hold on the f- and g-images") {
  auto res = relation_check_images(0.5, 0.5, 0.3, 40, Cutoff{24, 24});
  REQUIRE(res.size() == 10);
  for (const auto& [name, v] : res) {
    CAPTURE(name);
    CHECK(v <= 1e-8);
  }
  // the disc relation on the f-images, singled out in the theorem's proof
  CHECK(res.at("f_disc_a") <= 1e-8);
  CHECK(res.at("f_disc_b") <= 1e-8);

  // theta = 0: the g-image commutators vanish to rounding
  auto res0 = relation_check_images(0.4, 0.6, 0.0, 40, Cutoff{24, 24});
  CHECK(res0.at("g_torus") <= 1e-10);
  CHECK(res0.at("g_torus_star") <= 1e-10);
}

TEST_CASE("f_image validates its inputs") {
  SeriesCoeffs coeffs = SeriesCoeffs::make(0.5, 0.5, 10);
  CHECK_THROWS_AS(f_image(0, coeffs, RepSpec::rho(0.5, 0.5, 0.3), Cutoff{8, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_image(2, coeffs, RepSpec::rho(0.0, 0.0, 0.3), Cutoff{8, 4}),
                  std::invalid_argument);
}
