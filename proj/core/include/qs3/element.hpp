// Canonical basis monomials and finite linear combinations of them.
//
// The monomial shape depends on the presentation:
//   sphere family   a_alpha b_beta, optionally times A^m / B^m (Disc-mode
//                   slot) or A_k / B_k (indexed slot, side condition
//                   alpha > -k resp. beta > -k)
//   quantum disc    z_alpha Z^k (or z_alpha Z_k at q = 0)
//   crossed product u^m s+^j s+*^l with j, l >= 0 (alpha = j, alpha_star = l,
//                   beta = m)
//   torus           x^m y^n
// The convention x_alpha = x^alpha for alpha >= 0 and (x*)^{-alpha} below 0
// is used throughout.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qs3/algebra.hpp"

namespace qs3 {

enum class Proj : int { None = 0, First = 1, Second = 2 };

struct Monomial {
  int alpha = 0;       // slot-0 signed power; j for a Toeplitz-mode slot 0
  int alpha_star = 0;  // l for a Toeplitz-mode slot 0, otherwise 0
  int beta = 0;        // slot-1 signed power
  Proj proj = Proj::None;
  int k = 0;           // projector power (Disc mode) or index (indexed mode)

  static Monomial unit() { return Monomial{}; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Letters of the monomial in normal order.  Projector factors appear as
// projector letters, so the expansion is a single word.
Word monomial_word(const AlgebraPresentation& pres, const Monomial& m);

// Number of generator letters once projectors are expanded as 1 - x^k x*^k;
// used for interior bookkeeping.
int monomial_degree(const AlgebraPresentation& pres, const Monomial& m);

bool monomial_valid(const AlgebraPresentation& pres, const Monomial& m);

std::string monomial_to_string(const AlgebraPresentation& pres, const Monomial& m);

class NCElement {
 public:
  explicit NCElement(const AlgebraPresentation& pres) : pres_(pres) {}

  static NCElement zero(const AlgebraPresentation& pres) { return NCElement(pres); }
  static NCElement one(const AlgebraPresentation& pres);
  static NCElement monomial(const AlgebraPresentation& pres, const Monomial& m,
                            cplx coeff = 1.0);
  static NCElement generator(const AlgebraPresentation& pres, int slot, bool star = false);
  // The projector element: A^m / A_k on the given slot.
  static NCElement projector(const AlgebraPresentation& pres, int slot, int k);

  const AlgebraPresentation& presentation() const { return pres_; }
  const std::map<Monomial, cplx>& terms() const { return terms_; }

  void add_term(const Monomial& m, cplx c);
  void prune();

  NCElement& operator+=(const NCElement& other);
  NCElement& operator-=(const NCElement& other);
  NCElement& operator*=(cplx c);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(cplx c, NCElement a) { return a *= c; }
  friend NCElement operator*(const NCElement& a, const NCElement& b);

  bool is_zero(double tol = kZeroThreshold) const;
  double max_abs_coeff() const;
  cplx coeff(const Monomial& m) const;

  // Canonical text form: "<re><sign><im>i * <monomial>" terms joined by " + ".
  std::string to_string() const;

 private:
  AlgebraPresentation pres_;
  std::map<Monomial, cplx> terms_;
};

// Product in normal form; both factors must share the presentation.
NCElement multiply(const NCElement& e1, const NCElement& e2);

// The *-operation: antilinear, involutive, anti-multiplicative.
NCElement adjoint(const NCElement& e);

bool approx_equal(const NCElement& a, const NCElement& b, double tol = kZeroThreshold);

// Index bounds for basis enumeration.
struct Bounds {
  int alpha = 0;
  int beta = 0;
  int k = 0;
};

// All valid basis monomials with |alpha| <= bounds.alpha, |beta| <= bounds.beta
// and projector power/index <= bounds.k (crossed products: j, l <= bounds.alpha,
// |m| <= bounds.beta).
std::vector<Monomial> basis_monomials(const AlgebraPresentation& pres, const Bounds& bounds);

// Named identities among the A_k, B_k elements, checked in normal form for
// all indices <= range.  Unknown names throw std::invalid_argument.
bool check_identity(const AlgebraPresentation& pres, const std::string& id_name, int range);

std::vector<std::string> known_identities();

// The defining relations as explicit word combinations (LHS - RHS), used both
// for symbolic zero checks and for representation residuals.
struct RelationWords {
  std::string name;
  std::vector<std::pair<cplx, Word>> combo;
};
std::vector<RelationWords> defining_relations(const AlgebraPresentation& pres);

}  // namespace qs3
