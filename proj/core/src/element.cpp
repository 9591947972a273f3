#include "qs3/element.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qs3/rewrite.hpp"

namespace qs3 {

Word monomial_word(const AlgebraPresentation& pres, const Monomial& m) {
  Word w;
  for (int slot : pres.block_order()) {
    if (slot >= pres.num_gens()) continue;
    if (pres.mode(slot) == GenMode::IsometryPlain) {
      for (int i = 0; i < m.alpha; ++i) w.push_back(gen_letter(slot, false));
      for (int i = 0; i < m.alpha_star; ++i) w.push_back(gen_letter(slot, true));
    } else {
      int pw = slot == 0 ? m.alpha : m.beta;
      for (int i = 0; i < std::abs(pw); ++i) w.push_back(gen_letter(slot, pw < 0));
    }
  }
  if (m.proj != Proj::None) {
    int slot = m.proj == Proj::First ? 0 : 1;
    if (pres.mode(slot) == GenMode::Disc) {
      for (int i = 0; i < m.k; ++i) w.push_back(proj_letter(slot));
    } else {
      w.push_back(proj_letter(slot, m.k));
    }
  }
  return w;
}

int monomial_degree(const AlgebraPresentation& pres, const Monomial& m) {
  int deg = std::abs(m.alpha) + m.alpha_star + std::abs(m.beta);
  if (m.proj != Proj::None) deg += 2 * m.k;
  (void)pres;
  return deg;
}

bool monomial_valid(const AlgebraPresentation& pres, const Monomial& m) {
  if (pres.num_gens() == 1 && (m.beta != 0 || m.proj == Proj::Second)) return false;
  if (pres.mode(0) == GenMode::IsometryPlain) {
    if (m.alpha < 0 || m.alpha_star < 0) return false;
  } else if (m.alpha_star != 0) {
    return false;
  }
  if (m.proj == Proj::None) return m.k == 0;
  int slot = m.proj == Proj::First ? 0 : 1;
  if (!pres.has_projector(slot)) return false;
  if (m.k < 1) return false;
  if (pres.mode(slot) == GenMode::IsometryIndexed) {
    int pw = slot == 0 ? m.alpha : m.beta;
    if (pw <= -m.k) return false;  // x_alpha P_k vanishes for alpha <= -k
  }
  return true;
}

std::string monomial_to_string(const AlgebraPresentation& pres, const Monomial& m) {
  std::ostringstream os;
  switch (pres.name) {
    case AlgebraName::SpherePQ:
    case AlgebraName::Sphere00: {
      os << pres.gen_name(0) << "_{" << m.alpha << "} " << pres.gen_name(1) << "_{" << m.beta
         << "}";
      break;
    }
    case AlgebraName::DiscQ:
      os << "z_{" << m.alpha << "}";
      break;
    case AlgebraName::CrossedPlus:
      os << "u^" << m.beta << " s+^" << m.alpha << " s+*^" << m.alpha_star;
      break;
    case AlgebraName::CrossedMinus:
      os << "v^" << m.beta << " t-^" << m.alpha << " t-*^" << m.alpha_star;
      break;
    case AlgebraName::Torus:
      os << "x^" << m.alpha << " y^" << m.beta;
      break;
  }
  if (m.proj != Proj::None) {
    int slot = m.proj == Proj::First ? 0 : 1;
    os << " " << pres.proj_name(slot);
    os << (pres.mode(slot) == GenMode::Disc ? "^{" : "_{") << m.k << "}";
  }
  return os.str();
}

NCElement NCElement::one(const AlgebraPresentation& pres) {
  return NCElement::monomial(pres, Monomial::unit());
}

NCElement NCElement::monomial(const AlgebraPresentation& pres, const Monomial& m, cplx coeff) {
  if (!monomial_valid(pres, m))
    throw std::invalid_argument("invalid monomial " + monomial_to_string(pres, m) + " for " +
                                pres.to_string());
  NCElement e(pres);
  e.add_term(m, coeff);
  return e;
}

NCElement NCElement::generator(const AlgebraPresentation& pres, int slot, bool star) {
  if (slot < 0 || slot >= pres.num_gens())
    throw std::invalid_argument("no such generator slot");
  Monomial m;
  if (pres.mode(slot) == GenMode::IsometryPlain) {
    (star ? m.alpha_star : m.alpha) = 1;
  } else if (slot == 0) {
    m.alpha = star ? -1 : 1;
  } else {
    m.beta = star ? -1 : 1;
  }
  return NCElement::monomial(pres, m);
}

NCElement NCElement::projector(const AlgebraPresentation& pres, int slot, int k) {
  Monomial m;
  m.proj = slot == 0 ? Proj::First : Proj::Second;
  m.k = k;
  return NCElement::monomial(pres, m);
}

void NCElement::add_term(const Monomial& m, cplx c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void NCElement::prune() {
  double scale = std::max(1.0, max_abs_coeff());
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= kZeroThreshold * scale)
      it = terms_.erase(it);
    else
      ++it;
  }
}

NCElement& NCElement::operator+=(const NCElement& other) {
  if (!pres_.compatible(other.pres_))
    throw std::invalid_argument("presentation mismatch in +");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  prune();
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& other) {
  if (!pres_.compatible(other.pres_))
    throw std::invalid_argument("presentation mismatch in -");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  prune();
  return *this;
}

NCElement& NCElement::operator*=(cplx c) {
  for (auto& [m, v] : terms_) v *= c;
  prune();
  return *this;
}

NCElement operator*(const NCElement& a, const NCElement& b) { return multiply(a, b); }

bool NCElement::is_zero(double tol) const {
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > tol) return false;
  return true;
}

double NCElement::max_abs_coeff() const {
  double mx = 0.0;
  for (const auto& [m, c] : terms_) mx = std::max(mx, std::abs(c));
  return mx;
}

cplx NCElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

static std::string format_complex(cplx c) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", c.real(), c.imag());
  return buf;
}

std::string NCElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += format_complex(c) + " * " + monomial_to_string(pres_, m);
  }
  return out;
}

NCElement multiply(const NCElement& e1, const NCElement& e2) {
  if (!e1.presentation().compatible(e2.presentation()))
    throw std::invalid_argument("presentation mismatch in multiply");
  const AlgebraPresentation& pres = e1.presentation();
  NCElement out(pres);
  for (const auto& [m1, c1] : e1.terms()) {
    Word w1 = monomial_word(pres, m1);
    for (const auto& [m2, c2] : e2.terms()) {
      Word w = w1;
      const Word w2 = monomial_word(pres, m2);
      w.insert(w.end(), w2.begin(), w2.end());
      NCElement nf = normal_form(w, pres);
      nf *= c1 * c2;
      out += nf;
    }
  }
  out.prune();
  return out;
}

NCElement adjoint(const NCElement& e) {
  const AlgebraPresentation& pres = e.presentation();
  NCElement out(pres);
  for (const auto& [m, c] : e.terms()) {
    Word w = monomial_word(pres, m);
    Word rev;
    rev.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      Letter l = *it;
      if (!l.proj) l.star = !l.star;  // projector letters are self-adjoint
      rev.push_back(l);
    }
    NCElement nf = normal_form(rev, pres);
    nf *= std::conj(c);
    out += nf;
  }
  out.prune();
  return out;
}

bool approx_equal(const NCElement& a, const NCElement& b, double tol) {
  NCElement d = a;
  d -= b;
  double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
  return d.is_zero(tol * scale);
}

std::vector<Monomial> basis_monomials(const AlgebraPresentation& pres, const Bounds& bounds) {
  std::vector<Monomial> out;
  auto push = [&](Monomial m) {
    if (monomial_valid(pres, m)) out.push_back(m);
  };
  switch (pres.name) {
    case AlgebraName::SpherePQ:
    case AlgebraName::Sphere00: {
      for (int a = -bounds.alpha; a <= bounds.alpha; ++a)
        for (int b = -bounds.beta; b <= bounds.beta; ++b) {
          push(Monomial{a, 0, b, Proj::None, 0});
          for (int k = 1; k <= bounds.k; ++k) {
            push(Monomial{a, 0, b, Proj::First, k});
            push(Monomial{a, 0, b, Proj::Second, k});
          }
        }
      break;
    }
    case AlgebraName::DiscQ: {
      for (int a = -bounds.alpha; a <= bounds.alpha; ++a) {
        push(Monomial{a, 0, 0, Proj::None, 0});
        for (int k = 1; k <= bounds.k; ++k) push(Monomial{a, 0, 0, Proj::First, k});
      }
      break;
    }
    case AlgebraName::CrossedPlus:
    case AlgebraName::CrossedMinus: {
      for (int m = -bounds.beta; m <= bounds.beta; ++m)
        for (int j = 0; j <= bounds.alpha; ++j)
          for (int l = 0; l <= bounds.alpha; ++l) push(Monomial{j, l, m, Proj::None, 0});
      break;
    }
    case AlgebraName::Torus: {
      for (int m = -bounds.alpha; m <= bounds.alpha; ++m)
        for (int n = -bounds.beta; n <= bounds.beta; ++n)
          push(Monomial{m, 0, n, Proj::None, 0});
      break;
    }
  }
  return out;
}

std::vector<std::string> known_identities() {
  return {"A_{k+1}=sA_ks*+A_1", "B_{k+1}=tB_kt*+B_1", "[t,A_k]=0",  "[s,B_k]=0",
          "A_{k+1}s=sA_k",      "s*A_{k+1}=A_ks*",    "B_{k+1}t=tB_k", "t*B_{k+1}=B_kt*",
          "AkBl_zero"};
}

bool check_identity(const AlgebraPresentation& pres, const std::string& id_name, int range) {
  if (range < 1) throw std::invalid_argument("range must be >= 1");
  auto needs_indexed = [&](int slot) {
    if (pres.mode(slot) != GenMode::IsometryIndexed)
      throw std::invalid_argument("identity '" + id_name + "' needs the indexed basis (parameter 0) on slot " +
                                  std::to_string(slot));
  };
  auto G = [&](int slot, bool star) { return NCElement::generator(pres, slot, star); };
  auto P = [&](int slot, int k) { return NCElement::projector(pres, slot, k); };
  const double tol = kZeroThreshold;

  if (id_name == "AkBl_zero") {
    needs_indexed(0);
    needs_indexed(1);
    for (int k = 1; k <= range; ++k)
      for (int l = 1; l <= range; ++l)
        if (!multiply(P(0, k), P(1, l)).is_zero(tol)) return false;
    return true;
  }

  // Identities come in mirror pairs; resolve which slot they talk about.
  int slot = -1;
  enum Kind { Recursion, Commute, ShiftLeft, ShiftRight } kind;
  if (id_name == "A_{k+1}=sA_ks*+A_1") slot = 0, kind = Recursion;
  else if (id_name == "B_{k+1}=tB_kt*+B_1") slot = 1, kind = Recursion;
  else if (id_name == "[t,A_k]=0") slot = 0, kind = Commute;
  else if (id_name == "[s,B_k]=0") slot = 1, kind = Commute;
  else if (id_name == "A_{k+1}s=sA_k") slot = 0, kind = ShiftLeft;
  else if (id_name == "B_{k+1}t=tB_k") slot = 1, kind = ShiftLeft;
  else if (id_name == "s*A_{k+1}=A_ks*") slot = 0, kind = ShiftRight;
  else if (id_name == "t*B_{k+1}=B_kt*") slot = 1, kind = ShiftRight;
  else throw std::invalid_argument("unknown identity '" + id_name + "'");

  needs_indexed(slot);
  int other = 1 - slot;
  for (int k = 1; k <= range; ++k) {
    NCElement lhs(pres), rhs(pres);
    switch (kind) {
      case Recursion:
        lhs = P(slot, k + 1);
        rhs = multiply(multiply(G(slot, false), P(slot, k)), G(slot, true)) + P(slot, 1);
        break;
      case Commute:
        lhs = multiply(G(other, false), P(slot, k));
        rhs = multiply(P(slot, k), G(other, false));
        break;
      case ShiftLeft:
        lhs = multiply(P(slot, k + 1), G(slot, false));
        rhs = multiply(G(slot, false), P(slot, k));
        break;
      case ShiftRight:
        lhs = multiply(G(slot, true), P(slot, k + 1));
        rhs = multiply(P(slot, k), G(slot, true));
        break;
    }
    if (!approx_equal(lhs, rhs, tol)) return false;
  }
  return true;
}

std::vector<RelationWords> defining_relations(const AlgebraPresentation& pres) {
  std::vector<RelationWords> out;
  const cplx mu = pres.mu();
  auto g = [&](int slot, bool star = false) { return gen_letter(slot, star); };
  switch (pres.name) {
    case AlgebraName::SpherePQ:
    case AlgebraName::Sphere00: {
      // (1-aa*)(1-bb*) = 0
      out.push_back({"sphere",
                     {{1.0, {}},
                      {-1.0, {g(0), g(0, true)}},
                      {-1.0, {g(1), g(1, true)}},
                      {1.0, {g(0), g(0, true), g(1), g(1, true)}}}});
      // a*a - p aa* - (1-p) = 0
      out.push_back({"disc_a",
                     {{1.0, {g(0, true), g(0)}},
                      {-pres.p, {g(0), g(0, true)}},
                      {-(1.0 - pres.p), {}}}});
      out.push_back({"disc_b",
                     {{1.0, {g(1, true), g(1)}},
                      {-pres.q, {g(1), g(1, true)}},
                      {-(1.0 - pres.q), {}}}});
      // ab = mu ba, ab* = mu^{-1} b*a
      out.push_back({"torus_ab", {{1.0, {g(0), g(1)}}, {-mu, {g(1), g(0)}}}});
      out.push_back({"torus_ab_star",
                     {{1.0, {g(0), g(1, true)}}, {-std::conj(mu), {g(1, true), g(0)}}}});
      break;
    }
    case AlgebraName::DiscQ: {
      out.push_back({"disc_z",
                     {{1.0, {g(0, true), g(0)}},
                      {-pres.q, {g(0), g(0, true)}},
                      {-(1.0 - pres.q), {}}}});
      break;
    }
    case AlgebraName::CrossedPlus:
    case AlgebraName::CrossedMinus: {
      cplx ph = pres.name == AlgebraName::CrossedPlus ? mu : std::conj(mu);
      out.push_back({"isometry", {{1.0, {g(0, true), g(0)}}, {-1.0, {}}}});
      out.push_back({"unitary_u", {{1.0, {g(1, true), g(1)}}, {-1.0, {}}}});
      out.push_back({"unitary_u_star", {{1.0, {g(1), g(1, true)}}, {-1.0, {}}}});
      out.push_back({"comm", {{1.0, {g(0), g(1)}}, {-ph, {g(1), g(0)}}}});
      break;
    }
    case AlgebraName::Torus: {
      out.push_back({"unitary_x", {{1.0, {g(0, true), g(0)}}, {-1.0, {}}}});
      out.push_back({"unitary_x_star", {{1.0, {g(0), g(0, true)}}, {-1.0, {}}}});
      out.push_back({"unitary_y", {{1.0, {g(1, true), g(1)}}, {-1.0, {}}}});
      out.push_back({"unitary_y_star", {{1.0, {g(1), g(1, true)}}, {-1.0, {}}}});
      out.push_back({"torus_xy", {{1.0, {g(0), g(1)}}, {-mu, {g(1), g(0)}}}});
      break;
    }
  }
  return out;
}

}  // namespace qs3
