#include "qs3/operators.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <ostream>
#include <random>

namespace qs3 {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// RepSpec

static void check_unit_circle(cplx lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw std::invalid_argument("lambda must lie on the unit circle");
}

RepSpec RepSpec::rho(double p, double q, double theta) { return RepSpec{RepKind::Rho, p, q, theta}; }
RepSpec RepSpec::rho_prime(double p, double q, double theta) {
  return RepSpec{RepKind::RhoPrime, p, q, theta};
}
RepSpec RepSpec::rho_lambda(double p, double q, double theta, cplx lambda) {
  check_unit_circle(lambda);
  return RepSpec{RepKind::RhoLambda, p, q, theta, lambda};
}
RepSpec RepSpec::rho_prime_lambda(double p, double q, double theta, cplx lambda) {
  check_unit_circle(lambda);
  return RepSpec{RepKind::RhoPrimeLambda, p, q, theta, lambda};
}
RepSpec RepSpec::disc_pi(double q) { return RepSpec{RepKind::DiscPi, 0.0, q, 0.0}; }
RepSpec RepSpec::rho_bar(double theta) { return RepSpec{RepKind::RhoBar, 0.0, 0.0, theta}; }
RepSpec RepSpec::rho_bar_prime(double theta) {
  return RepSpec{RepKind::RhoBarPrime, 0.0, 0.0, theta};
}

bool RepSpec::double_index() const {
  switch (kind) {
    case RepKind::Rho:
    case RepKind::RhoPrime:
    case RepKind::RhoBar:
    case RepKind::RhoBarPrime:
      return true;
    default:
      return false;
  }
}

bool RepSpec::represents(const AlgebraPresentation& pres) const {
  switch (kind) {
    case RepKind::Rho:
    case RepKind::RhoPrime:
    case RepKind::RhoLambda:
    case RepKind::RhoPrimeLambda:
      return (pres.name == AlgebraName::SpherePQ || pres.name == AlgebraName::Sphere00) &&
             pres.p == p && pres.q == q && pres.theta == theta;
    case RepKind::DiscPi:
      return pres.name == AlgebraName::DiscQ && pres.q == q;
    case RepKind::RhoBar:
      return pres.name == AlgebraName::CrossedPlus && pres.theta == theta;
    case RepKind::RhoBarPrime:
      return pres.name == AlgebraName::CrossedMinus && pres.theta == theta;
  }
  return false;
}

std::string RepSpec::to_string() const {
  const char* names[] = {"rho_lambda", "rho'_lambda", "rho", "rho'", "pi", "rho_bar", "rho_bar'"};
  return names[static_cast<int>(kind)];
}

// ---------------------------------------------------------------------------
// Reach arithmetic

AxisReach AxisReach::shift(int d) {
  AxisReach r;
  r.band_lo = r.band_hi = d;
  r.reach_lo = std::min(0, d);
  r.reach_hi = std::max(0, d);
  return r;
}

AxisReach AxisReach::hull(const AxisReach& a, const AxisReach& b) {
  AxisReach r;
  r.band_lo = std::min(a.band_lo, b.band_lo);
  r.band_hi = std::max(a.band_hi, b.band_hi);
  r.reach_lo = std::min(a.reach_lo, b.reach_lo);
  r.reach_hi = std::max(a.reach_hi, b.reach_hi);
  return r;
}

AxisReach AxisReach::compose(const AxisReach& outer, const AxisReach& inner) {
  AxisReach r;
  r.band_lo = outer.band_lo + inner.band_lo;
  r.band_hi = outer.band_hi + inner.band_hi;
  r.reach_lo = std::min(inner.reach_lo, inner.band_lo + outer.reach_lo);
  r.reach_hi = std::max(inner.reach_hi, inner.band_hi + outer.reach_hi);
  return r;
}

AxisReach AxisReach::adjoint() const {
  // Column c of A* is row c of A: it draws on columns c - band of A, which
  // must themselves be artifact-free, and no out-of-cutoff column may
  // contribute.  Both constraints combine into the shifts below.
  AxisReach r;
  r.band_lo = -band_hi;
  r.band_hi = -band_lo;
  r.reach_lo = reach_lo - band_hi;
  r.reach_hi = reach_hi - band_lo;
  return r;
}

// ---------------------------------------------------------------------------
// TruncatedOperator

static int basis_dim(const Cutoff& c, bool double_index) {
  if (c.n < 1 || c.m < 1) throw std::invalid_argument("cutoff must be positive");
  return double_index ? (2 * c.m + 1) * c.n : c.n;
}

TruncatedOperator::TruncatedOperator(SpMat mat, Cutoff cutoff, bool double_index, Reach reach)
    : mat_(std::move(mat)), cutoff_(cutoff), double_index_(double_index), reach_(reach) {}

TruncatedOperator TruncatedOperator::identity(const Cutoff& cutoff, bool double_index) {
  int d = basis_dim(cutoff, double_index);
  SpMat m(d, d);
  m.setIdentity();
  return TruncatedOperator(std::move(m), cutoff, double_index, Reach{});
}

TruncatedOperator TruncatedOperator::zero(const Cutoff& cutoff, bool double_index) {
  int d = basis_dim(cutoff, double_index);
  return TruncatedOperator(SpMat(d, d), cutoff, double_index, Reach{});
}

int TruncatedOperator::index(int m, int n) const {
  return double_index_ ? (m + cutoff_.m) * cutoff_.n + n : n;
}

cplx TruncatedOperator::entry(int row, int col) const { return mat_.coeff(row, col); }

TruncatedOperator& TruncatedOperator::operator*=(cplx c) {
  mat_ *= c;
  return *this;
}

static void check_same_basis(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.double_index() != b.double_index() || a.cutoff().n != b.cutoff().n ||
      a.cutoff().m != b.cutoff().m)
    throw std::invalid_argument("operator basis mismatch");
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
  check_same_basis(a, b);
  Reach r{AxisReach::hull(a.reach().n, b.reach().n), AxisReach::hull(a.reach().m, b.reach().m)};
  return TruncatedOperator(a.matrix() + b.matrix(), a.cutoff(), a.double_index(), r);
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
  check_same_basis(a, b);
  Reach r{AxisReach::hull(a.reach().n, b.reach().n), AxisReach::hull(a.reach().m, b.reach().m)};
  return TruncatedOperator(a.matrix() - b.matrix(), a.cutoff(), a.double_index(), r);
}

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
  check_same_basis(a, b);
  Reach r{AxisReach::compose(a.reach().n, b.reach().n),
          AxisReach::compose(a.reach().m, b.reach().m)};
  SpMat prod = a.matrix() * b.matrix();
  prod.prune(0.0, 0.0);
  return TruncatedOperator(std::move(prod), a.cutoff(), a.double_index(), r);
}

TruncatedOperator TruncatedOperator::adjoint() const {
  Reach r{reach_.n.adjoint(), reach_.m.adjoint()};
  SpMat adj = mat_.adjoint();
  return TruncatedOperator(std::move(adj), cutoff_, double_index_, r);
}

std::vector<int> TruncatedOperator::interior_columns() const {
  std::vector<int> cols;
  const int N = cutoff_.n;
  if (!double_index_) {
    for (int n = 0; n < N; ++n)
      if (n + reach_.n.reach_hi <= N - 1) cols.push_back(n);
    return cols;
  }
  const int M = cutoff_.m;
  for (int m = -M; m <= M; ++m) {
    if (m + reach_.m.reach_hi > M) continue;
    if (m + reach_.m.reach_lo < -M) continue;
    for (int n = 0; n < N; ++n)
      if (n + reach_.n.reach_hi <= N - 1) cols.push_back(index(m, n));
  }
  return cols;
}

void TruncatedOperator::clamp_reach(int radius) {
  reach_.n.reach_lo = std::max(reach_.n.reach_lo, -radius);
  reach_.n.reach_hi = std::min(reach_.n.reach_hi, radius);
  reach_.m.reach_lo = std::max(reach_.m.reach_lo, -radius);
  reach_.m.reach_hi = std::min(reach_.m.reach_hi, radius);
}

// ---------------------------------------------------------------------------
// Norms

double largest_singular_value(const SpMat& a) {
  if (a.nonZeros() == 0) return 0.0;
  // Residual operators are numerically zero; the Frobenius norm bounds the
  // operator norm from above and settles them immediately.
  double frob = a.norm();
  if (frob <= 1e-12) return frob;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  if (rows * cols <= 250000) {
    MatrixXcd dense(a);
    Eigen::BDCSVD<MatrixXcd> svd(dense);
    return svd.singularValues()(0);
  }
  // Lanczos on a*a with full reorthogonalization and a deterministic start.
  // The spectra here are heavily clustered (weights 1 - p^n with large index
  // multiplicity), which a plain power iteration cannot resolve; Lanczos
  // terminates once the Krylov space exhausts the distinct eigenvalues.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(rows) << 20) ^
                      static_cast<std::uint64_t>(cols));
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  VectorXcd v(cols);
  for (Eigen::Index i = 0; i < cols; ++i) v(i) = cplx(uni(rng), uni(rng));
  v.normalize();
  const int kmax = static_cast<int>(std::min<Eigen::Index>(cols, 400));
  std::vector<VectorXcd> basis;
  basis.reserve(kmax);
  basis.push_back(v);
  std::vector<double> alpha, beta;
  for (int j = 0; j < kmax; ++j) {
    VectorXcd w = a.adjoint() * (a * basis[j]).eval();
    alpha.push_back((basis[j].adjoint() * w).value().real());
    w -= alpha[j] * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    for (int pass = 0; pass < 2; ++pass)
      for (const VectorXcd& b : basis) w -= (b.adjoint() * w).value() * b;
    double nb = w.norm();
    if (nb < 1e-13) break;  // Krylov space exhausted
    beta.push_back(nb);
    basis.push_back(w / nb);
  }
  const int k = static_cast<int>(alpha.size());
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    tri(i, i) = alpha[i];
    if (i + 1 < k && i < static_cast<int>(beta.size())) {
      tri(i, i + 1) = beta[i];
      tri(i + 1, i) = beta[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(tri);
  double lam = eig.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, lam));
}

static SpMat select_columns(const SpMat& a, const std::vector<int>& cols) {
  std::vector<Eigen::Triplet<cplx>> trips;
  for (size_t j = 0; j < cols.size(); ++j)
    for (SpMat::InnerIterator it(a, cols[j]); it; ++it)
      trips.emplace_back(static_cast<int>(it.row()), static_cast<int>(j), it.value());
  SpMat out(a.rows(), static_cast<Eigen::Index>(cols.size()));
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

double interior_norm(const TruncatedOperator& op) {
  std::vector<int> cols = op.interior_columns();
  if (cols.empty()) throw CutoffError("no interior columns at this cutoff");
  return largest_singular_value(select_columns(op.matrix(), cols));
}

// ---------------------------------------------------------------------------
// Generators

namespace {

struct ShiftFormula {
  int dn = 0;  // n-axis move (the only axis for single-index bases)
  int dm = 0;
  // weight as a function of (m, n); single-index reps receive m = 0, n = k
  std::function<cplx(int, int)> weight;
};

ShiftFormula generator_formula(const RepSpec& s, int slot, bool star) {
  const cplx mu = std::polar(1.0, kTwoPi * s.theta);
  const double p = s.p, q = s.q;
  const cplx lam = s.lambda;
  auto bad = [&]() -> ShiftFormula {
    throw std::invalid_argument("invalid generator letter for " + s.to_string());
  };
  switch (s.kind) {
    case RepKind::Rho:
      if (slot == 0)
        return star ? ShiftFormula{-1, 0,
                                   [=](int m, int n) {
                                     return std::pow(mu, -m) * std::sqrt(1.0 - std::pow(p, n));
                                   }}
                    : ShiftFormula{+1, 0, [=](int m, int n) {
                                     return std::pow(mu, m) * std::sqrt(1.0 - std::pow(p, n + 1));
                                   }};
      if (slot == 1)
        return star ? ShiftFormula{0, -1, [](int, int) { return cplx(1.0); }}
                    : ShiftFormula{0, +1, [](int, int) { return cplx(1.0); }};
      return bad();
    case RepKind::RhoPrime:
      if (slot == 0)
        return star ? ShiftFormula{0, -1, [](int, int) { return cplx(1.0); }}
                    : ShiftFormula{0, +1, [](int, int) { return cplx(1.0); }};
      if (slot == 1)
        return star ? ShiftFormula{-1, 0,
                                   [=](int m, int n) {
                                     return std::pow(mu, m) * std::sqrt(1.0 - std::pow(q, n));
                                   }}
                    : ShiftFormula{+1, 0, [=](int m, int n) {
                                     return std::pow(mu, -m) * std::sqrt(1.0 - std::pow(q, n + 1));
                                   }};
      return bad();
    case RepKind::RhoLambda:
      if (slot == 0)
        return star ? ShiftFormula{-1, 0,
                                   [=](int, int k) { return cplx(std::sqrt(1.0 - std::pow(p, k))); }}
                    : ShiftFormula{+1, 0, [=](int, int k) {
                                     return cplx(std::sqrt(1.0 - std::pow(p, k + 1)));
                                   }};
      if (slot == 1)
        return star ? ShiftFormula{0, 0, [=](int, int k) { return std::conj(lam) * std::pow(mu, k); }}
                    : ShiftFormula{0, 0, [=](int, int k) { return lam * std::pow(mu, -k); }};
      return bad();
    case RepKind::RhoPrimeLambda:
      if (slot == 0)
        return star ? ShiftFormula{0, 0, [=](int, int k) { return std::conj(lam) * std::pow(mu, -k); }}
                    : ShiftFormula{0, 0, [=](int, int k) { return lam * std::pow(mu, k); }};
      if (slot == 1)
        return star ? ShiftFormula{-1, 0,
                                   [=](int, int k) { return cplx(std::sqrt(1.0 - std::pow(q, k))); }}
                    : ShiftFormula{+1, 0, [=](int, int k) {
                                     return cplx(std::sqrt(1.0 - std::pow(q, k + 1)));
                                   }};
      return bad();
    case RepKind::DiscPi:
      if (slot == 0)
        return star ? ShiftFormula{-1, 0,
                                   [=](int, int k) { return cplx(std::sqrt(1.0 - std::pow(q, k))); }}
                    : ShiftFormula{+1, 0, [=](int, int k) {
                                     return cplx(std::sqrt(1.0 - std::pow(q, k + 1)));
                                   }};
      return bad();
    case RepKind::RhoBar:
      if (slot == 0)
        return star ? ShiftFormula{-1, 0, [=](int m, int) { return std::pow(mu, -m); }}
                    : ShiftFormula{+1, 0, [=](int m, int) { return std::pow(mu, m); }};
      if (slot == 1)
        return star ? ShiftFormula{0, -1, [](int, int) { return cplx(1.0); }}
                    : ShiftFormula{0, +1, [](int, int) { return cplx(1.0); }};
      return bad();
    case RepKind::RhoBarPrime:
      if (slot == 0)
        return star ? ShiftFormula{-1, 0, [=](int m, int) { return std::pow(mu, m); }}
                    : ShiftFormula{+1, 0, [=](int m, int) { return std::pow(mu, -m); }};
      if (slot == 1)
        return star ? ShiftFormula{0, -1, [](int, int) { return cplx(1.0); }}
                    : ShiftFormula{0, +1, [](int, int) { return cplx(1.0); }};
      return bad();
  }
  return bad();
}

int max_slot(const RepSpec& s) { return s.kind == RepKind::DiscPi ? 0 : 1; }

}  // namespace

TruncatedOperator build_generator(const RepSpec& spec, const Letter& letter,
                                  const Cutoff& cutoff) {
  if (letter.proj) throw std::invalid_argument("build_generator expects a generator letter");
  if (letter.slot < 0 || letter.slot > max_slot(spec))
    throw std::invalid_argument("invalid generator letter for " + spec.to_string());
  ShiftFormula f = generator_formula(spec, letter.slot, letter.star);
  const bool dbl = spec.double_index();
  const int N = cutoff.n, M = dbl ? cutoff.m : 0;
  const int dim = basis_dim(cutoff, dbl);
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<size_t>(dim));
  auto flat = [&](int m, int n) { return dbl ? (m + M) * N + n : n; };
  for (int m = -M; m <= M; ++m) {
    for (int n = 0; n < N; ++n) {
      int mr = m + f.dm, nr = n + f.dn;
      if (nr < 0 || nr >= N || mr < -M || mr > M) continue;
      cplx w = f.weight(m, n);
      if (std::abs(w) == 0.0) continue;
      trips.emplace_back(flat(mr, nr), flat(m, n), w);
    }
  }
  SpMat mat(dim, dim);
  mat.setFromTriplets(trips.begin(), trips.end());
  Reach r;
  r.n = AxisReach::shift(f.dn);
  r.m = AxisReach::shift(f.dm);
  return TruncatedOperator(std::move(mat), cutoff, dbl, r);
}

namespace {

// Cache of the four generator matrices for one evaluate call.
struct GenCache {
  const RepSpec& spec;
  const Cutoff& cutoff;
  std::map<std::pair<int, bool>, TruncatedOperator> cache;

  const TruncatedOperator& get(int slot, bool star) {
    auto key = std::make_pair(slot, star);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, build_generator(spec, gen_letter(slot, star), cutoff)).first;
    return it->second;
  }
};

TruncatedOperator letter_operator(GenCache& gc, const Letter& l) {
  if (!l.proj) return gc.get(l.slot, l.star);
  // Projector letters: one power step 1 - x x* (Disc mode) or the indexed
  // projector 1 - x^k x*^k.
  double param = l.slot == 0 ? gc.spec.p : gc.spec.q;
  if (gc.spec.kind == RepKind::DiscPi) param = gc.spec.q;
  const TruncatedOperator& g = gc.get(l.slot, false);
  const TruncatedOperator& gstar = gc.get(l.slot, true);
  TruncatedOperator id = TruncatedOperator::identity(gc.cutoff, gc.spec.double_index());
  if (param > 0.0) return id - g * gstar;
  TruncatedOperator up = g, down = gstar;
  for (int i = 1; i < l.k; ++i) {
    up = g * up;
    down = down * gstar;
  }
  return id - up * down;
}

}  // namespace

TruncatedOperator evaluate_word(const RepSpec& spec, const Word& w, const Cutoff& cutoff) {
  GenCache gc{spec, cutoff, {}};
  TruncatedOperator acc = TruncatedOperator::identity(cutoff, spec.double_index());
  for (const Letter& l : w) acc = acc * letter_operator(gc, l);
  return acc;
}

TruncatedOperator evaluate(const RepSpec& spec, const NCElement& e, const Cutoff& cutoff) {
  if (!spec.represents(e.presentation()))
    throw std::invalid_argument("representation " + spec.to_string() + " does not represent " +
                                e.presentation().to_string());
  TruncatedOperator acc = TruncatedOperator::zero(cutoff, spec.double_index());
  for (const auto& [m, c] : e.terms()) {
    TruncatedOperator t = evaluate_word(spec, monomial_word(e.presentation(), m), cutoff);
    t *= c;
    acc = acc + t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Relation residuals

static AlgebraPresentation natural_presentation(const RepSpec& spec) {
  switch (spec.kind) {
    case RepKind::Rho:
    case RepKind::RhoPrime:
    case RepKind::RhoLambda:
    case RepKind::RhoPrimeLambda:
      return (spec.p == 0.0 && spec.q == 0.0)
                 ? AlgebraPresentation::sphere_00(spec.theta)
                 : AlgebraPresentation::sphere_pq(spec.p, spec.q, spec.theta);
    case RepKind::DiscPi:
      return AlgebraPresentation::disc(spec.q);
    case RepKind::RhoBar:
      return AlgebraPresentation::crossed_plus(spec.theta);
    case RepKind::RhoBarPrime:
      return AlgebraPresentation::crossed_minus(spec.theta);
  }
  throw std::logic_error("unknown representation kind");
}

std::map<std::string, double> relation_residuals(const RepSpec& spec, const Cutoff& cutoff) {
  AlgebraPresentation pres = natural_presentation(spec);
  std::map<std::string, double> out;
  for (const RelationWords& rel : defining_relations(pres)) {
    TruncatedOperator acc = TruncatedOperator::zero(cutoff, spec.double_index());
    for (const auto& [c, w] : rel.combo) {
      TruncatedOperator t = evaluate_word(spec, w, cutoff);
      t *= c;
      acc = acc + t;
    }
    out[rel.name] = interior_norm(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independence rank

namespace {

// Accumulates rows of a tall matrix into an upper-triangular factor whose
// singular values equal those of the full stack.
class QrAccumulator {
 public:
  explicit QrAccumulator(int cols) : cols_(cols), rows_(0), buf_(kBlock + cols, cols) {
    buf_.setZero();
  }

  void add_row(const Eigen::RowVectorXcd& row) {
    buf_.row(cols_ + rows_) = row;
    if (++rows_ == kBlock) compress();
  }

  std::vector<double> singular_values() {
    compress();
    Eigen::BDCSVD<MatrixXcd> svd(buf_.topRows(cols_));
    std::vector<double> sv(svd.singularValues().data(),
                           svd.singularValues().data() + svd.singularValues().size());
    return sv;
  }

 private:
  static constexpr int kBlock = 2048;

  void compress() {
    if (rows_ == 0) return;
    Eigen::HouseholderQR<MatrixXcd> qr(buf_.topRows(cols_ + rows_));
    MatrixXcd r = qr.matrixQR()
                      .topRows(cols_)
                      .template triangularView<Eigen::Upper>();
    buf_.setZero();
    buf_.topRows(cols_) = r;
    rows_ = 0;
  }

  int cols_;
  int rows_;
  MatrixXcd buf_;
};

}  // namespace

int independence_rank_elements(const AlgebraPresentation& pres,
                               const std::vector<NCElement>& elements, const Cutoff& cutoff,
                               const std::vector<std::string>& labels) {
  if (elements.empty()) return 0;
  std::vector<RepSpec> reps;
  if (pres.name == AlgebraName::SpherePQ || pres.name == AlgebraName::Sphere00) {
    reps = {RepSpec::rho(pres.p, pres.q, pres.theta),
            RepSpec::rho_prime(pres.p, pres.q, pres.theta)};
  } else if (pres.name == AlgebraName::DiscQ) {
    reps = {RepSpec::disc_pi(pres.q)};
  } else {
    throw std::invalid_argument("independence_rank supports sphere and disc presentations");
  }
  const int ne = static_cast<int>(elements.size());
  auto label = [&](int i) {
    if (i < static_cast<int>(labels.size())) return labels[i];
    return elements[i].to_string();
  };

  std::vector<std::vector<TruncatedOperator>> ops;
  std::vector<std::vector<int>> cols;
  for (const RepSpec& rs : reps) {
    std::vector<TruncatedOperator> row;
    row.reserve(ne);
    Reach hull{};
    for (int i = 0; i < ne; ++i) {
      row.push_back(evaluate(rs, elements[i], cutoff));
      hull.n = AxisReach::hull(hull.n, row.back().reach().n);
      hull.m = AxisReach::hull(hull.m, row.back().reach().m);
    }
    TruncatedOperator probe = row.front();
    probe.set_reach(hull);
    cols.push_back(probe.interior_columns());
    ops.push_back(std::move(row));
  }

  std::vector<double> nrm2(ne, 0.0);
  for (size_t r = 0; r < ops.size(); ++r)
    for (int i = 0; i < ne; ++i)
      for (int c : cols[r])
        for (SpMat::InnerIterator it(ops[r][i].matrix(), c); it; ++it)
          nrm2[i] += std::norm(it.value());
  for (int i = 0; i < ne; ++i)
    if (!(nrm2[i] > 0.0))
      throw CutoffError("cutoff too small: no nonzero interior column for " + label(i));

  QrAccumulator acc(ne);
  const int dim = ops[0][0].dim();
  MatrixXcd slab(dim, ne);
  std::vector<char> used(dim);
  for (size_t r = 0; r < ops.size(); ++r) {
    for (int c : cols[r]) {
      slab.setZero();
      std::fill(used.begin(), used.end(), 0);
      for (int i = 0; i < ne; ++i)
        for (SpMat::InnerIterator it(ops[r][i].matrix(), c); it; ++it) {
          slab(it.row(), i) = it.value() / std::sqrt(nrm2[i]);
          used[it.row()] = 1;
        }
      for (int row = 0; row < dim; ++row)
        if (used[row]) acc.add_row(slab.row(row));
    }
  }
  std::vector<double> sv = acc.singular_values();
  int rank = 0;
  for (double s : sv)
    if (s > kRankThreshold) ++rank;
  return rank;
}

int independence_rank(const AlgebraPresentation& pres, const std::vector<Monomial>& monomials,
                      const Cutoff& cutoff) {
  std::vector<NCElement> elems;
  std::vector<std::string> labels;
  elems.reserve(monomials.size());
  for (const Monomial& m : monomials) {
    elems.push_back(NCElement::monomial(pres, m));
    labels.push_back(monomial_to_string(pres, m));
  }
  return independence_rank_elements(pres, elems, cutoff, labels);
}

// ---------------------------------------------------------------------------
// Norm estimates

std::vector<double> norm_estimate_sequence(const NCElement& e, const RepSpec& spec,
                                           const std::vector<Cutoff>& cutoffs) {
  std::vector<double> out;
  out.reserve(cutoffs.size());
  for (const Cutoff& c : cutoffs)
    out.push_back(largest_singular_value(evaluate(spec, e, c).matrix()));
  return out;
}

double norm_estimate(const NCElement& e, const RepSpec& spec,
                     const std::vector<Cutoff>& cutoffs) {
  if (cutoffs.empty()) throw std::invalid_argument("norm_estimate needs at least one cutoff");
  return norm_estimate_sequence(e, spec, cutoffs).back();
}

// ---------------------------------------------------------------------------
// Export

void write_matrix_market(std::ostream& os, const TruncatedOperator& op) {
  const SpMat& m = op.matrix();
  os.precision(17);
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << m.rows() << " " << m.cols() << " " << m.nonZeros() << "\n";
  for (int c = 0; c < m.outerSize(); ++c)
    for (SpMat::InnerIterator it(m, c); it; ++it)
      os << (it.row() + 1) << " " << (it.col() + 1) << " " << it.value().real() << " "
         << it.value().imag() << "\n";
}

}  // namespace qs3
