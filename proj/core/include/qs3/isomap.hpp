// The mutually inverse homomorphisms between the two-parameter sphere algebra
// and its p = q = 0 form, realized on truncated representations:
//   f sends the deformed generators to norm-convergent series in the
//     isometries, f(a) = sum_k (sqrt(1-p^{k+1}) - sqrt(1-p^k)) s^{k+1} s*^k,
//   g rescales by the absolute value, g(s) = a (a*a)^{-1/2}.
#pragma once

#include <map>
#include <vector>

#include "qs3/operators.hpp"

namespace qs3 {

struct SeriesCoeffs {
  std::vector<double> p_k;  // sqrt(1-p^{k+1}) - sqrt(1-p^k)
  std::vector<double> q_k;
  int K = 0;
  double p = 0.0;
  double q = 0.0;

  static SeriesCoeffs make(double p, double q, int K);
  // Smallest K with tail 1 - sqrt(1-p^K) below 2e-8, capped at 200.
  static int default_K(double p);

  // Telescoping partial sum sum_{k<K} p_k = sqrt(1-p^K).
  double partial_sum_p() const;
  double partial_sum_q() const;
};

// Interior-mask radius for the truncated series: entries dropped beyond it
// carry coefficient mass below 1e-10, and none exist at all beyond K.
int series_mask_radius(double param, int K);

// Truncated series operator for f(a) (slot 0) or f(b) (slot 1) under a
// representation of the 00-sphere algebra.
TruncatedOperator f_image(int slot, const SeriesCoeffs& coeffs, const RepSpec& spec00,
                          const Cutoff& cutoff);

// Polar unitary part g(s) = a (a*a)^{-1/2} (slot 0) or g(t) (slot 1) under a
// representation at the given p, q.  a*a is evaluated from its normal form,
// whose truncated spectrum stays >= 1-p; eigenvalues below 1e-10 raise
// SingularOperatorError.
TruncatedOperator g_image(int slot, const RepSpec& spec_pq, const Cutoff& cutoff);

// Hermitian inverse square root via eigendecomposition.  When pseudo is true,
// eigenvalues below the threshold map to zero (used for roundtrip polar parts
// whose truncations have structurally null boundary columns); otherwise they
// raise SingularOperatorError.
TruncatedOperator hermitian_inv_sqrt(const TruncatedOperator& h, double threshold,
                                     bool pseudo);

// Interior distances of the four roundtrip images from the original
// generators: keys gf_a, gf_b, fg_s, fg_t.  Each generator is checked in the
// representation family that is faithful on its subalgebra (rho for a/s,
// rho' for b/t).
std::map<std::string, double> roundtrip_residual(double p, double q, double theta, int K,
                                                 const Cutoff& cutoff);

// Residuals of the defining relations on the f-images (in the 00
// representation) and on the g-images (in the p,q representation).
std::map<std::string, double> relation_check_images(double p, double q, double theta, int K,
                                                    const Cutoff& cutoff);

}  // namespace qs3
