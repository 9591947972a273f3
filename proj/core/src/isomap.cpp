#include "qs3/isomap.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "qs3/rewrite.hpp"

namespace qs3 {

using Eigen::MatrixXcd;

SeriesCoeffs SeriesCoeffs::make(double p, double q, int K) {
  if (K < 1) throw std::invalid_argument("series truncation K must be >= 1");
  SeriesCoeffs c;
  c.K = K;
  c.p = p;
  c.q = q;
  c.p_k.reserve(K);
  c.q_k.reserve(K);
  for (int k = 0; k < K; ++k) {
    c.p_k.push_back(std::sqrt(1.0 - std::pow(p, k + 1)) - std::sqrt(1.0 - std::pow(p, k)));
    c.q_k.push_back(std::sqrt(1.0 - std::pow(q, k + 1)) - std::sqrt(1.0 - std::pow(q, k)));
  }
  return c;
}

int SeriesCoeffs::default_K(double p) {
  if (p <= 0.0) return 1;
  int K = static_cast<int>(std::ceil(std::log(2e-8) / std::log(p)));
  return std::min(std::max(K, 1), 200);
}

double SeriesCoeffs::partial_sum_p() const {
  double s = 0.0;
  for (double v : p_k) s += v;
  return s;
}

double SeriesCoeffs::partial_sum_q() const {
  double s = 0.0;
  for (double v : q_k) s += v;
  return s;
}

// Reach radius beyond which the series coefficients sum to less than 1e-10;
// entries dropped by masking at this radius are below every tolerance used,
// and beyond K the series has no terms at all.
int series_mask_radius(double param, int K) {
  if (param <= 0.0) return 1;
  int r = static_cast<int>(std::ceil(std::log(1e-10) / std::log(param)));
  return std::min(std::max(r, 1), K);
}

static int tail_radius(double param, int K) { return series_mask_radius(param, K); }

TruncatedOperator f_image(int slot, const SeriesCoeffs& coeffs, const RepSpec& spec00,
                          const Cutoff& cutoff) {
  if (spec00.p != 0.0 || spec00.q != 0.0)
    throw std::invalid_argument("f_image expects a representation of the 00-sphere algebra");
  if (slot != 0 && slot != 1) throw std::invalid_argument("f_image: slot must be 0 or 1");
  const std::vector<double>& cs = slot == 0 ? coeffs.p_k : coeffs.q_k;
  TruncatedOperator g = build_generator(spec00, gen_letter(slot, false), cutoff);
  TruncatedOperator gstar = build_generator(spec00, gen_letter(slot, true), cutoff);
  TruncatedOperator up = g;                                          // g^{k+1}
  TruncatedOperator down = TruncatedOperator::identity(cutoff, spec00.double_index());  // g*^k
  TruncatedOperator acc = TruncatedOperator::zero(cutoff, spec00.double_index());
  for (int k = 0; k < coeffs.K; ++k) {
    if (k > 0) {
      up = g * up;
      down = down * gstar;
    }
    TruncatedOperator term = up * down;
    term *= cs[k];
    acc = acc + term;
  }
  // The raw reach spans the full series depth; the coefficient tail bounds
  // what masking at tail_radius can drop.
  acc.clamp_reach(std::max(tail_radius(slot == 0 ? coeffs.p : coeffs.q, coeffs.K), 2));
  return acc;
}

TruncatedOperator hermitian_inv_sqrt(const TruncatedOperator& h, double threshold, bool pseudo) {
  const SpMat& sp = h.matrix();
  // x*x evaluates to a diagonal operator in every representation shipped
  // here; its eigendecomposition is the diagonal itself.
  double offdiag = 0.0, diagmax = 0.0;
  for (int c = 0; c < sp.outerSize(); ++c)
    for (SpMat::InnerIterator it(sp, c); it; ++it) {
      if (it.row() == it.col())
        diagmax = std::max(diagmax, std::abs(it.value()));
      else
        offdiag += std::abs(it.value());
    }
  if (offdiag <= 1e-13 * std::max(1.0, diagmax)) {
    const int dim = h.dim();
    std::vector<Eigen::Triplet<cplx>> trips;
    for (int i = 0; i < dim; ++i) {
      cplx d = sp.coeff(i, i);
      if (std::abs(d.imag()) > 1e-12 * std::max(1.0, std::abs(d)))
        throw std::invalid_argument("hermitian_inv_sqrt: operator is not Hermitian");
      double val = d.real();
      if (val < threshold) {
        if (!pseudo)
          throw SingularOperatorError("eigenvalue " + std::to_string(val) +
                                      " below singularity threshold");
        continue;
      }
      trips.emplace_back(i, i, cplx(1.0 / std::sqrt(val)));
    }
    SpMat out(dim, dim);
    out.setFromTriplets(trips.begin(), trips.end());
    return TruncatedOperator(std::move(out), h.cutoff(), h.double_index(), h.reach());
  }

  MatrixXcd dense(sp);
  double herm = (MatrixXcd(dense - dense.adjoint())).norm();
  if (herm > 1e-10 * std::max(1.0, dense.norm()))
    throw std::invalid_argument("hermitian_inv_sqrt: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(dense);
  Eigen::VectorXd vals = eig.eigenvalues();
  Eigen::VectorXd inv(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < threshold) {
      if (!pseudo)
        throw SingularOperatorError("eigenvalue " + std::to_string(vals(i)) +
                                    " below singularity threshold");
      inv(i) = 0.0;
    } else {
      inv(i) = 1.0 / std::sqrt(vals(i));
    }
  }
  MatrixXcd result = eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().adjoint();
  SpMat sparse_result = result.sparseView(1e-300, 1.0);
  // A function of h has the same support structure in our representations
  // (h is diagonal there); keep h's reach.
  return TruncatedOperator(std::move(sparse_result), h.cutoff(), h.double_index(), h.reach());
}

TruncatedOperator g_image(int slot, const RepSpec& spec_pq, const Cutoff& cutoff) {
  if (slot != 0 && slot != 1) throw std::invalid_argument("g_image: slot must be 0 or 1");
  AlgebraPresentation pres =
      (spec_pq.p == 0.0 && spec_pq.q == 0.0)
          ? AlgebraPresentation::sphere_00(spec_pq.theta)
          : AlgebraPresentation::sphere_pq(spec_pq.p, spec_pq.q, spec_pq.theta);
  // x*x in normal form (1 - p A); its truncation keeps the spectrum >= 1-p.
  NCElement xstarx = normal_form({gen_letter(slot, true), gen_letter(slot, false)}, pres);
  TruncatedOperator e = evaluate(spec_pq, xstarx, cutoff);
  TruncatedOperator inv_sqrt = hermitian_inv_sqrt(e, 1e-10, /*pseudo=*/false);
  TruncatedOperator g = build_generator(spec_pq, gen_letter(slot, false), cutoff);
  return g * inv_sqrt;
}

namespace {

TruncatedOperator weighted_shift_series(const TruncatedOperator& g,
                                        const std::vector<double>& coeffs) {
  TruncatedOperator up = g;
  TruncatedOperator down = TruncatedOperator::identity(g.cutoff(), g.double_index());
  TruncatedOperator gstar = g.adjoint();
  TruncatedOperator acc = TruncatedOperator::zero(g.cutoff(), g.double_index());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) {
      up = g * up;
      down = down * gstar;
    }
    TruncatedOperator term = up * down;
    term *= coeffs[k];
    acc = acc + term;
  }
  return acc;
}

}  // namespace

std::map<std::string, double> roundtrip_residual(double p, double q, double theta, int K,
                                                 const Cutoff& cutoff) {
  SeriesCoeffs coeffs = SeriesCoeffs::make(p, q, K);
  std::map<std::string, double> out;

  // g(f(a)) under rho at (p, q): apply the f-series to the g-image of s.
  {
    RepSpec rep = RepSpec::rho(p, q, theta);
    TruncatedOperator gs = g_image(0, rep, cutoff);
    TruncatedOperator rt = weighted_shift_series(gs, coeffs.p_k);
    rt.clamp_reach(std::max(tail_radius(p, K), 2));
    TruncatedOperator target = build_generator(rep, gen_letter(0), cutoff);
    out["gf_a"] = interior_norm(rt - target);
  }
  {
    RepSpec rep = RepSpec::rho_prime(p, q, theta);
    TruncatedOperator gt = g_image(1, rep, cutoff);
    TruncatedOperator rt = weighted_shift_series(gt, coeffs.q_k);
    rt.clamp_reach(std::max(tail_radius(q, K), 2));
    TruncatedOperator target = build_generator(rep, gen_letter(1), cutoff);
    out["gf_b"] = interior_norm(rt - target);
  }
  // f(g(s)) under rho at (0, 0): polar part of the f-image.
  {
    RepSpec rep00 = RepSpec::rho(0.0, 0.0, theta);
    TruncatedOperator fa = f_image(0, coeffs, rep00, cutoff);
    TruncatedOperator h = fa.adjoint() * fa;
    TruncatedOperator rt = fa * hermitian_inv_sqrt(h, 1e-10, /*pseudo=*/true);
    TruncatedOperator target = build_generator(rep00, gen_letter(0), cutoff);
    out["fg_s"] = interior_norm(rt - target);
  }
  {
    RepSpec rep00 = RepSpec::rho_prime(0.0, 0.0, theta);
    TruncatedOperator fb = f_image(1, coeffs, rep00, cutoff);
    TruncatedOperator h = fb.adjoint() * fb;
    TruncatedOperator rt = fb * hermitian_inv_sqrt(h, 1e-10, /*pseudo=*/true);
    TruncatedOperator target = build_generator(rep00, gen_letter(1), cutoff);
    out["fg_t"] = interior_norm(rt - target);
  }
  return out;
}

std::map<std::string, double> relation_check_images(double p, double q, double theta, int K,
                                                    const Cutoff& cutoff) {
  SeriesCoeffs coeffs = SeriesCoeffs::make(p, q, K);
  const cplx mu = std::polar(1.0, kTwoPi * theta);
  std::map<std::string, double> out;

  // f-images inside the 00-representation rho.
  {
    RepSpec rep00 = RepSpec::rho(0.0, 0.0, theta);
    TruncatedOperator fa = f_image(0, coeffs, rep00, cutoff);
    TruncatedOperator fb = f_image(1, coeffs, rep00, cutoff);
    TruncatedOperator id = TruncatedOperator::identity(cutoff, true);
    TruncatedOperator sphere = (id - fa * fa.adjoint()) * (id - fb * fb.adjoint());
    out["f_sphere"] = interior_norm(sphere);
    TruncatedOperator disc_a = fa.adjoint() * fa - p * (fa * fa.adjoint()) - (1.0 - p) * id;
    out["f_disc_a"] = interior_norm(disc_a);
    TruncatedOperator disc_b = fb.adjoint() * fb - q * (fb * fb.adjoint()) - (1.0 - q) * id;
    out["f_disc_b"] = interior_norm(disc_b);
    out["f_torus"] = interior_norm(fa * fb - mu * (fb * fa));
    out["f_torus_star"] =
        interior_norm(fa * fb.adjoint() - std::conj(mu) * (fb.adjoint() * fa));
  }
  // g-images inside rho at (p, q); they must satisfy the 00-relations.
  {
    RepSpec rep = RepSpec::rho(p, q, theta);
    TruncatedOperator gs = g_image(0, rep, cutoff);
    TruncatedOperator gt = g_image(1, rep, cutoff);
    TruncatedOperator id = TruncatedOperator::identity(cutoff, true);
    TruncatedOperator sphere = (id - gs * gs.adjoint()) * (id - gt * gt.adjoint());
    out["g_sphere"] = interior_norm(sphere);
    out["g_isometry_s"] = interior_norm(gs.adjoint() * gs - id);
    out["g_isometry_t"] = interior_norm(gt.adjoint() * gt - id);
    out["g_torus"] = interior_norm(gs * gt - mu * (gt * gs));
    out["g_torus_star"] =
        interior_norm(gs * gt.adjoint() - std::conj(mu) * (gt.adjoint() * gs));
  }
  return out;
}

}  // namespace qs3
