#include "qs3/crossed.hpp"

#include <cmath>
#include <stdexcept>

#include "qs3/operators.hpp"
#include "qs3/rewrite.hpp"

namespace qs3 {

static AlgebraPresentation crossed_pres(Side side, double theta) {
  return side == Side::Plus ? AlgebraPresentation::crossed_plus(theta)
                            : AlgebraPresentation::crossed_minus(theta);
}

CrossedElement::CrossedElement(Side side, double theta)
    : side_(side), element_(crossed_pres(side, theta)) {}

CrossedElement::CrossedElement(NCElement e)
    : side_(e.presentation().name == AlgebraName::CrossedPlus ? Side::Plus : Side::Minus),
      element_(std::move(e)) {
  AlgebraName n = element_.presentation().name;
  if (n != AlgebraName::CrossedPlus && n != AlgebraName::CrossedMinus)
    throw std::invalid_argument("CrossedElement needs a crossed-product presentation");
}

CrossedElement CrossedElement::zero(Side side, double theta) {
  return CrossedElement(side, theta);
}

CrossedElement CrossedElement::one(Side side, double theta) {
  return CrossedElement(NCElement::one(crossed_pres(side, theta)));
}

CrossedElement CrossedElement::monomial(Side side, double theta, int m, int j, int l,
                                        cplx coeff) {
  if (j < 0 || l < 0) throw std::invalid_argument("crossed monomial needs j, l >= 0");
  Monomial mo;
  mo.alpha = j;
  mo.alpha_star = l;
  mo.beta = m;
  return CrossedElement(NCElement::monomial(crossed_pres(side, theta), mo, coeff));
}

CrossedElement CrossedElement::shift(Side side, double theta, bool star) {
  return CrossedElement(NCElement::generator(crossed_pres(side, theta), 0, star));
}

CrossedElement CrossedElement::rotation(Side side, double theta, bool star) {
  return CrossedElement(NCElement::generator(crossed_pres(side, theta), 1, star));
}

std::map<std::tuple<int, int, int>, cplx> CrossedElement::terms() const {
  std::map<std::tuple<int, int, int>, cplx> out;
  for (const auto& [mo, c] : element_.terms())
    out[{mo.beta, mo.alpha, mo.alpha_star}] = c;
  return out;
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
  if (side_ != o.side_) throw std::invalid_argument("crossed side mismatch");
  element_ += o.element_;
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
  if (side_ != o.side_) throw std::invalid_argument("crossed side mismatch");
  element_ -= o.element_;
  return *this;
}

CrossedElement& CrossedElement::operator*=(cplx c) {
  element_ *= c;
  return *this;
}

CrossedElement crossed_multiply(const CrossedElement& a, const CrossedElement& b) {
  if (a.side() != b.side()) throw std::invalid_argument("crossed side mismatch");
  return CrossedElement(multiply(a.element(), b.element()));
}

CrossedElement adjoint(const CrossedElement& e) { return CrossedElement(adjoint(e.element())); }

bool approx_equal(const CrossedElement& a, const CrossedElement& b, double tol) {
  if (a.side() != b.side()) return false;
  return approx_equal(a.element(), b.element(), tol);
}

CrossedElement swap_side(const CrossedElement& e) {
  Side to = e.side() == Side::Plus ? Side::Minus : Side::Plus;
  CrossedElement out(to, e.theta());
  // s+ -> t-, u -> v*: the basis monomial u^m s+^j s+*^l goes to
  // v^{-m} t-^j t-*^l with the same coefficient.
  for (const auto& [mjl, c] : e.terms()) {
    auto [m, j, l] = mjl;
    out += CrossedElement::monomial(to, e.theta(), -m, j, l, c);
  }
  return out;
}

TorusElement::TorusElement(double theta) : element_(AlgebraPresentation::torus(theta)) {}

TorusElement::TorusElement(NCElement e) : element_(std::move(e)) {
  if (element_.presentation().name != AlgebraName::Torus)
    throw std::invalid_argument("TorusElement needs the torus presentation");
}

TorusElement TorusElement::zero(double theta) { return TorusElement(theta); }

TorusElement TorusElement::one(double theta) {
  return TorusElement(NCElement::one(AlgebraPresentation::torus(theta)));
}

TorusElement TorusElement::monomial(double theta, int m, int n, cplx coeff) {
  Monomial mo;
  mo.alpha = m;
  mo.beta = n;
  return TorusElement(NCElement::monomial(AlgebraPresentation::torus(theta), mo, coeff));
}

std::map<std::pair<int, int>, cplx> TorusElement::terms() const {
  std::map<std::pair<int, int>, cplx> out;
  for (const auto& [mo, c] : element_.terms()) out[{mo.alpha, mo.beta}] = c;
  return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  element_ += o.element_;
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  element_ -= o.element_;
  return *this;
}

TorusElement torus_multiply(const TorusElement& a, const TorusElement& b) {
  return TorusElement(multiply(a.element(), b.element()));
}

bool approx_equal(const TorusElement& a, const TorusElement& b, double tol) {
  return approx_equal(a.element(), b.element(), tol);
}

TorusElement pi1(const CrossedElement& e) {
  if (e.side() != Side::Plus) throw std::invalid_argument("pi1 acts on the plus side");
  double theta = e.theta();
  const cplx mu = std::polar(1.0, kTwoPi * theta);
  TorusElement out(theta);
  // u^m s+^j s+*^l -> y^m x^{j-l} = mu^{-m(j-l)} x^{j-l} y^m.
  for (const auto& [mjl, c] : e.terms()) {
    auto [m, j, l] = mjl;
    cplx phase = std::pow(mu, -m * (j - l));
    out += TorusElement::monomial(theta, j - l, m, c * phase);
  }
  return out;
}

TorusElement pi2(const CrossedElement& e) {
  if (e.side() != Side::Minus) throw std::invalid_argument("pi2 acts on the minus side");
  double theta = e.theta();
  TorusElement out(theta);
  // v^m t-^j t-*^l -> x^m y^{j-l}, already in normal order.
  for (const auto& [mjl, c] : e.terms()) {
    auto [m, j, l] = mjl;
    out += TorusElement::monomial(theta, m, j - l, c);
  }
  return out;
}

FiberPair FiberPair::zero(double theta) {
  return FiberPair{CrossedElement::zero(Side::Plus, theta),
                   CrossedElement::zero(Side::Minus, theta)};
}

FiberPair FiberPair::one(double theta) {
  return FiberPair{CrossedElement::one(Side::Plus, theta),
                   CrossedElement::one(Side::Minus, theta)};
}

bool FiberPair::fiber_check(double tol) const {
  return approx_equal(pi1(plus), pi2(minus), tol);
}

FiberPair FiberPair::operator*(const FiberPair& o) const {
  return FiberPair{plus * o.plus, minus * o.minus};
}

FiberPair FiberPair::operator+(const FiberPair& o) const {
  FiberPair r = *this;
  r.plus += o.plus;
  r.minus += o.minus;
  return r;
}

FiberPair FiberPair::operator-(const FiberPair& o) const {
  FiberPair r = *this;
  r.plus -= o.plus;
  r.minus -= o.minus;
  return r;
}

FiberPair FiberPair::adjoint() const {
  return FiberPair{qs3::adjoint(plus), qs3::adjoint(minus)};
}

FiberPair h_image(const NCElement& e) {
  const AlgebraPresentation& pres = e.presentation();
  if (pres.name != AlgebraName::Sphere00)
    throw std::invalid_argument("h acts on the 00-sphere algebra");
  double theta = pres.theta;

  // Images of the four letters: h(s) = (s+, v), h(t) = (u, t-).
  auto letter_image = [&](const Letter& l) -> FiberPair {
    if (l.proj) {
      // A_k -> (1 - s+^k s+*^k, 0) since v is unitary; B_k -> (0, 1 - t-^k t-*^k).
      int k = l.k;
      if (l.slot == 0) {
        CrossedElement proj =
            CrossedElement::one(Side::Plus, theta) -
            CrossedElement::monomial(Side::Plus, theta, 0, k, k);
        return FiberPair{proj, CrossedElement::zero(Side::Minus, theta)};
      }
      CrossedElement proj =
          CrossedElement::one(Side::Minus, theta) -
          CrossedElement::monomial(Side::Minus, theta, 0, k, k);
      return FiberPair{CrossedElement::zero(Side::Plus, theta), proj};
    }
    if (l.slot == 0)
      return FiberPair{CrossedElement::shift(Side::Plus, theta, l.star),
                       CrossedElement::rotation(Side::Minus, theta, l.star)};
    return FiberPair{CrossedElement::rotation(Side::Plus, theta, l.star),
                     CrossedElement::shift(Side::Minus, theta, l.star)};
  };

  FiberPair acc = FiberPair::zero(theta);
  for (const auto& [mo, c] : e.terms()) {
    FiberPair term = FiberPair::one(theta);
    for (const Letter& l : monomial_word(pres, mo)) term = term * letter_image(l);
    term.plus *= c;
    term.minus *= c;
    acc = acc + term;
  }
  return acc;
}

TorusElement phi_d(const FiberPair& pair) { return pi1(pair.plus); }

TorusElement phi_c(const NCElement& e) { return phi_d(h_image(e)); }

MatrixUnitElement MatrixUnitElement::basis(Summand s, int i, int j, int n, cplx coeff) {
  MatrixUnitElement e;
  e.add(s, i, j, n, coeff);
  return e;
}

void MatrixUnitElement::add(Summand s, int i, int j, int n, cplx coeff) {
  if (i < 0 || j < 0) throw std::invalid_argument("matrix unit indices must be >= 0");
  auto& target = s == Summand::Left ? left_ : right_;
  target[{i, j, n}] += coeff;
}

// s^i (1-ss*) t_n s*^j resp. t^i (1-tt*) s_n t*^j in the 00-sphere algebra.
static NCElement sphere_unit_word(const AlgebraPresentation& pres, int slot, int i, int j,
                                  int n) {
  int other = 1 - slot;
  Word w;
  for (int r = 0; r < i; ++r) w.push_back(gen_letter(slot, false));
  w.push_back(proj_letter(slot, 1));
  for (int r = 0; r < std::abs(n); ++r) w.push_back(gen_letter(other, n < 0));
  for (int r = 0; r < j; ++r) w.push_back(gen_letter(slot, true));
  return normal_form(w, pres);
}

NCElement jc_image(const MatrixUnitElement& e, double theta) {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(theta);
  NCElement out(pres);
  for (const auto& [ijn, c] : e.left()) {
    auto [i, j, n] = ijn;
    out += c * sphere_unit_word(pres, 0, i, j, n);
  }
  for (const auto& [ijn, c] : e.right()) {
    auto [i, j, n] = ijn;
    out += c * sphere_unit_word(pres, 1, i, j, n);
  }
  return out;
}

static CrossedElement crossed_unit(Side side, double theta, int i, int j, int n) {
  // s+^i (1 - s+s+*) u^n s+*^j expanded in the (m, j, l) basis.
  CrossedElement a = CrossedElement::monomial(side, theta, 0, i, 0);
  CrossedElement proj = CrossedElement::one(side, theta) -
                        CrossedElement::monomial(side, theta, 0, 1, 1);
  CrossedElement un = CrossedElement::monomial(side, theta, n, 0, 0);
  CrossedElement bstar = CrossedElement::monomial(side, theta, 0, 0, j);
  return a * proj * un * bstar;
}

FiberPair jd_image(const MatrixUnitElement& e, double theta) {
  FiberPair out = FiberPair::zero(theta);
  for (const auto& [ijn, c] : e.left()) {
    auto [i, j, n] = ijn;
    out.plus += c * crossed_unit(Side::Plus, theta, i, j, n);
  }
  for (const auto& [ijn, c] : e.right()) {
    auto [i, j, n] = ijn;
    out.minus += c * crossed_unit(Side::Minus, theta, i, j, n);
  }
  return out;
}

NCElement sphere_matrix_unit(double theta, int i, int j) {
  return sphere_unit_word(AlgebraPresentation::sphere_00(theta), 0, i, j, 0);
}

NCElement sphere_matrix_unit_w(double theta, int i, int j) {
  return sphere_unit_word(AlgebraPresentation::sphere_00(theta), 0, i, j, 1);
}

CrossedElement crossed_matrix_unit(double theta, int i, int j) {
  return crossed_unit(Side::Plus, theta, i, j, 0);
}

CrossedElement crossed_matrix_unit_w(double theta, int i, int j) {
  return crossed_unit(Side::Plus, theta, i, j, 1);
}

SesReport ses_exactness_check(double theta, const SesBounds& bounds) {
  SesReport report;
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(theta);
  using MU = MatrixUnitElement;

  report.phi_c_jc_zero = true;
  report.phi_d_jd_zero = true;
  for (auto summand : {MU::Summand::Left, MU::Summand::Right})
    for (int i = 0; i <= bounds.ij_max; ++i)
      for (int j = 0; j <= bounds.ij_max; ++j)
        for (int n = -bounds.n_abs_max; n <= bounds.n_abs_max; ++n) {
          MU mu = MU::basis(summand, i, j, n);
          if (!phi_c(jc_image(mu, theta)).is_zero()) report.phi_c_jc_zero = false;
          FiberPair jd = jd_image(mu, theta);
          if (!jd.fiber_check() || !phi_d(jd).is_zero()) report.phi_d_jd_zero = false;
        }

  // Classes of s, t (resp. (s+,v), (u,t-)) in the quotient are unitaries:
  // ss* - 1 and tt* - 1 land in the ideal generated by the matrix units.
  {
    NCElement s = NCElement::generator(pres, 0), t = NCElement::generator(pres, 1);
    NCElement one = NCElement::one(pres);
    NCElement lhs_s = multiply(s, adjoint(s)) - one + jc_image(MU::basis(MU::Summand::Left, 0, 0, 0), theta);
    NCElement lhs_t = multiply(t, adjoint(t)) - one + jc_image(MU::basis(MU::Summand::Right, 0, 0, 0), theta);
    bool ok = lhs_s.is_zero() && lhs_t.is_zero();
    // Same on the fiber-product side via j_d.
    FiberPair hs = h_image(s), ht = h_image(t);
    FiberPair ps = hs * hs.adjoint() - FiberPair::one(theta) +
                   jd_image(MU::basis(MU::Summand::Left, 0, 0, 0), theta);
    FiberPair pt = ht * ht.adjoint() - FiberPair::one(theta) +
                   jd_image(MU::basis(MU::Summand::Right, 0, 0, 0), theta);
    ok = ok && ps.plus.is_zero() && ps.minus.is_zero() && pt.plus.is_zero() &&
         pt.minus.is_zero();
    // The remaining torus relations hold on the nose.
    NCElement comm = multiply(s, t) - pres.mu() * multiply(t, s);
    ok = ok && comm.is_zero();
    report.quotient_torus_relations = ok && approx_equal(multiply(adjoint(s), s), one) &&
                                      approx_equal(multiply(adjoint(t), t), one);
  }

  // Injectivity of j_c at desk scale: ranks of the matrix-unit images under
  // rho + rho'.
  {
    std::vector<NCElement> elems;
    std::vector<std::string> labels;
    for (auto summand : {MU::Summand::Left, MU::Summand::Right})
      for (int i = 0; i <= bounds.rank_ij_max; ++i)
        for (int j = 0; j <= bounds.rank_ij_max; ++j) {
          elems.push_back(jc_image(MU::basis(summand, i, j, 0), theta));
          labels.push_back((summand == MU::Summand::Left ? std::string("E_") : std::string("F_")) +
                           std::to_string(i) + std::to_string(j));
        }
    report.jc_expected_rank = static_cast<int>(elems.size());
    Cutoff cutoff{bounds.rank_cutoff, bounds.rank_cutoff};
    report.jc_rank = independence_rank_elements(pres, elems, cutoff, labels);
  }

  report.pass = report.phi_c_jc_zero && report.phi_d_jd_zero &&
                report.quotient_torus_relations && report.jc_rank == report.jc_expected_rank;
  return report;
}

}  // namespace qs3
