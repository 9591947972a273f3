// Finite truncations of the Hilbert-space representations: the single-index
// families on {e_k} and the doubly-indexed rho / rho' / rho-bar families on
// {e_{m,n}}, m in Z, n in N.  Operators are sparse complex matrices carrying
// interior bookkeeping so boundary truncation artifacts can be masked out of
// residual and rank computations.
#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qs3/element.hpp"

namespace qs3 {

using SpMat = Eigen::SparseMatrix<cplx>;

struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularOperatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Basis truncation: n ranges over 0..n-1; for doubly indexed bases m ranges
// over -m..m.  Flattening is m-major: index = (m + M) * N + n.
struct Cutoff {
  int n = 1;
  int m = 1;
};

enum class RepKind { RhoLambda, RhoPrimeLambda, Rho, RhoPrime, DiscPi, RhoBar, RhoBarPrime };

struct RepSpec {
  RepKind kind = RepKind::Rho;
  double p = 0.0;
  double q = 0.0;
  double theta = 0.0;
  cplx lambda{1.0, 0.0};

  static RepSpec rho(double p, double q, double theta);
  static RepSpec rho_prime(double p, double q, double theta);
  static RepSpec rho_lambda(double p, double q, double theta, cplx lambda);
  static RepSpec rho_prime_lambda(double p, double q, double theta, cplx lambda);
  static RepSpec disc_pi(double q);
  static RepSpec rho_bar(double theta);
  static RepSpec rho_bar_prime(double theta);

  bool double_index() const;
  // True when this representation represents the given presentation.
  bool represents(const AlgebraPresentation& pres) const;
  std::string to_string() const;
};

// Support band and intermediate excursion ("reach") of an operator along each
// basis axis, in row-minus-column offsets.  Only artificial cutoff boundaries
// constrain the interior mask: the top of the n-axis (the bottom is a genuine
// kill in the untruncated picture too) and both ends of the m-axis.
struct AxisReach {
  int band_lo = 0, band_hi = 0;
  int reach_lo = 0, reach_hi = 0;

  static AxisReach shift(int d);
  static AxisReach hull(const AxisReach& a, const AxisReach& b);
  static AxisReach compose(const AxisReach& outer, const AxisReach& inner);
  AxisReach adjoint() const;
};

struct Reach {
  AxisReach n;
  AxisReach m;
};

class TruncatedOperator {
 public:
  TruncatedOperator(SpMat mat, Cutoff cutoff, bool double_index, Reach reach);

  static TruncatedOperator identity(const Cutoff& cutoff, bool double_index);
  static TruncatedOperator zero(const Cutoff& cutoff, bool double_index);

  const SpMat& matrix() const { return mat_; }
  const Cutoff& cutoff() const { return cutoff_; }
  bool double_index() const { return double_index_; }
  const Reach& reach() const { return reach_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  int index(int m, int n) const;  // flatten (m, n); single-index: pass m = 0
  cplx entry(int row, int col) const;

  TruncatedOperator& operator*=(cplx c);
  friend TruncatedOperator operator*(cplx c, TruncatedOperator op) { return op *= c; }
  friend TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b);
  TruncatedOperator adjoint() const;

  // Columns unaffected by truncation artifacts for this operator's reach.
  std::vector<int> interior_columns() const;

  // Widen the artificial-direction reach no further than `radius`; used for
  // norm-convergent series whose tail mass is below tolerance.
  void clamp_reach(int radius);
  void set_reach(const Reach& r) { reach_ = r; }

 private:
  SpMat mat_;
  Cutoff cutoff_;
  bool double_index_;
  Reach reach_;
};

// Largest singular value (dense SVD for small operators, otherwise a power
// iteration on A*A with deterministic start).
double largest_singular_value(const SpMat& m);

// Operator norm restricted to interior columns; throws CutoffError when no
// column is interior.
double interior_norm(const TruncatedOperator& op);

TruncatedOperator build_generator(const RepSpec& spec, const Letter& letter,
                                  const Cutoff& cutoff);

TruncatedOperator evaluate(const RepSpec& spec, const NCElement& e, const Cutoff& cutoff);

TruncatedOperator evaluate_word(const RepSpec& spec, const Word& w, const Cutoff& cutoff);

// Max interior residual of each defining relation of the represented algebra.
std::map<std::string, double> relation_residuals(const RepSpec& spec, const Cutoff& cutoff);

// Numerical rank (singular values above 1e-8 of the column-normalized stacked
// matrix) of the family under rho + rho' (sphere regimes) or pi (disc).
int independence_rank(const AlgebraPresentation& pres, const std::vector<Monomial>& monomials,
                      const Cutoff& cutoff);
int independence_rank_elements(const AlgebraPresentation& pres,
                               const std::vector<NCElement>& elements, const Cutoff& cutoff,
                               const std::vector<std::string>& labels = {});

inline constexpr double kRankThreshold = 1e-8;

std::vector<double> norm_estimate_sequence(const NCElement& e, const RepSpec& spec,
                                           const std::vector<Cutoff>& cutoffs);
// Largest singular value at the largest cutoff.
double norm_estimate(const NCElement& e, const RepSpec& spec, const std::vector<Cutoff>& cutoffs);

// Matrix Market coordinate format (complex, general).
void write_matrix_market(std::ostream& os, const TruncatedOperator& op);

}  // namespace qs3
