#include "qs3/algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qs3 {

PairRewrite PairRewrite::single(cplx c, std::initializer_list<Letter> ls) {
  PairRewrite r;
  r.count = 1;
  r.terms[0].coeff = c;
  int i = 0;
  for (const Letter& l : ls) r.terms[0].letters[i++] = l;
  r.terms[0].len = i;
  return r;
}

PairRewrite PairRewrite::pair(cplx c0, std::initializer_list<Letter> l0, cplx c1,
                              std::initializer_list<Letter> l1) {
  PairRewrite r = single(c0, l0);
  r.count = 2;
  r.terms[1].coeff = c1;
  int i = 0;
  for (const Letter& l : l1) r.terms[1].letters[i++] = l;
  r.terms[1].len = i;
  return r;
}

static void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v < 1.0))
    throw std::invalid_argument(std::string(what) + " must lie in [0,1)");
}

AlgebraPresentation AlgebraPresentation::sphere_pq(double p, double q, double theta) {
  check_unit_interval(p, "p");
  check_unit_interval(q, "q");
  check_unit_interval(theta, "theta");
  return AlgebraPresentation{AlgebraName::SpherePQ, p, q, theta};
}

AlgebraPresentation AlgebraPresentation::sphere_00(double theta) {
  check_unit_interval(theta, "theta");
  return AlgebraPresentation{AlgebraName::Sphere00, 0.0, 0.0, theta};
}

AlgebraPresentation AlgebraPresentation::disc(double q) {
  check_unit_interval(q, "q");
  return AlgebraPresentation{AlgebraName::DiscQ, 0.0, q, 0.0};
}

AlgebraPresentation AlgebraPresentation::crossed_plus(double theta) {
  check_unit_interval(theta, "theta");
  return AlgebraPresentation{AlgebraName::CrossedPlus, 0.0, 0.0, theta};
}

AlgebraPresentation AlgebraPresentation::crossed_minus(double theta) {
  check_unit_interval(theta, "theta");
  return AlgebraPresentation{AlgebraName::CrossedMinus, 0.0, 0.0, theta};
}

AlgebraPresentation AlgebraPresentation::torus(double theta) {
  check_unit_interval(theta, "theta");
  return AlgebraPresentation{AlgebraName::Torus, 0.0, 0.0, theta};
}

int AlgebraPresentation::num_gens() const {
  return name == AlgebraName::DiscQ ? 1 : 2;
}

GenMode AlgebraPresentation::mode(int slot) const {
  switch (name) {
    case AlgebraName::SpherePQ:
    case AlgebraName::Sphere00:
      // p = 0 (resp. q = 0) degenerates A (resp. B) to a projection; that
      // slot then uses the indexed A_k/B_k basis.
      if (slot == 0) return p > 0.0 ? GenMode::Disc : GenMode::IsometryIndexed;
      return q > 0.0 ? GenMode::Disc : GenMode::IsometryIndexed;
    case AlgebraName::DiscQ:
      return q > 0.0 ? GenMode::Disc : GenMode::IsometryIndexed;
    case AlgebraName::CrossedPlus:
    case AlgebraName::CrossedMinus:
      return slot == 0 ? GenMode::IsometryPlain : GenMode::Unitary;
    case AlgebraName::Torus:
      return GenMode::Unitary;
  }
  throw std::logic_error("unknown algebra");
}

bool AlgebraPresentation::has_projector(int slot) const {
  GenMode m = mode(slot);
  return m == GenMode::Disc || m == GenMode::IsometryIndexed;
}

double AlgebraPresentation::slot_param(int slot) const {
  if (name == AlgebraName::DiscQ) return q;
  return slot == 0 ? p : q;
}

int AlgebraPresentation::block_pos(int slot) const {
  // Crossed products normalize to u^m s+^j s+*^l: the unitary block leads.
  if (name == AlgebraName::CrossedPlus || name == AlgebraName::CrossedMinus)
    return slot == 1 ? 0 : 1;
  return slot;
}

std::array<int, 2> AlgebraPresentation::block_order() const {
  if (name == AlgebraName::CrossedPlus || name == AlgebraName::CrossedMinus)
    return {1, 0};
  return {0, 1};
}

std::string AlgebraPresentation::gen_name(int slot, bool star) const {
  const char* base = nullptr;
  switch (name) {
    case AlgebraName::SpherePQ: base = slot == 0 ? "a" : "b"; break;
    case AlgebraName::Sphere00: base = slot == 0 ? "s" : "t"; break;
    case AlgebraName::DiscQ: base = "z"; break;
    case AlgebraName::CrossedPlus: base = slot == 0 ? "s+" : "u"; break;
    case AlgebraName::CrossedMinus: base = slot == 0 ? "t-" : "v"; break;
    case AlgebraName::Torus: base = slot == 0 ? "x" : "y"; break;
  }
  std::string s = base;
  if (star) s += "*";
  return s;
}

std::string AlgebraPresentation::proj_name(int slot) const {
  if (name == AlgebraName::DiscQ) return "Z";
  return slot == 0 ? "A" : "B";
}

bool AlgebraPresentation::compatible(const AlgebraPresentation& other) const {
  return name == other.name && p == other.p && q == other.q && theta == other.theta;
}

// Phase picked up when a wrongly-ordered (late-block, early-block) generator
// pair is swapped, both letters unstarred.  Starred letters flip the phase.
static cplx comm_base(const AlgebraPresentation& pres) {
  switch (pres.name) {
    case AlgebraName::CrossedPlus:
      return pres.mu();  // s+ u = mu u s+
    default:
      return std::conj(pres.mu());  // b a = mu^{-1} a b, t- v = mu^{-1} v t-, y x = mu^{-1} x y
  }
}

std::optional<PairRewrite> AlgebraPresentation::rewrite_pair(const Letter& x,
                                                             const Letter& y) const {
  using PR = PairRewrite;
  if (x.proj && y.proj) {
    if (x.slot != y.slot) return PR::zero();  // A-side times B-side vanishes
    if (mode(x.slot) == GenMode::IsometryIndexed)
      return PR::single(1.0, {proj_letter(x.slot, std::min(x.k, y.k))});
    return std::nullopt;  // Disc-mode power letters accumulate
  }

  if (x.proj && !y.proj) {
    if (x.slot != y.slot) return PR::single(1.0, {y, x});  // commutes across slots
    if (mode(x.slot) == GenMode::Disc) {
      double par = slot_param(x.slot);
      return PR::single(y.star ? 1.0 / par : par, {y, x});  // A a = p aA, A a* = p^{-1} a* A
    }
    // Indexed: P_k x = x P_{k-1} with P_0 = 0, and P_k x* = x* P_{k+1}.
    if (!y.star) {
      if (x.k == 1) return PR::zero();
      return PR::single(1.0, {y, proj_letter(x.slot, x.k - 1)});
    }
    return PR::single(1.0, {y, proj_letter(x.slot, x.k + 1)});
  }

  if (!x.proj && y.proj) return std::nullopt;  // generator before projector is normal

  if (x.slot == y.slot) {
    if (x.star == y.star) return std::nullopt;
    GenMode m = mode(x.slot);
    if (x.star) {  // x* x
      if (m == GenMode::Disc)
        return PR::pair(1.0, {}, -slot_param(x.slot), {proj_letter(x.slot)});
      return PR::single(1.0, {});
    }
    // x x*
    switch (m) {
      case GenMode::Disc:
        return PR::pair(1.0, {}, -1.0, {proj_letter(x.slot)});
      case GenMode::IsometryIndexed:
        return PR::pair(1.0, {}, -1.0, {proj_letter(x.slot, 1)});
      case GenMode::Unitary:
        return PR::single(1.0, {});
      case GenMode::IsometryPlain:
        return std::nullopt;
    }
  }

  if (block_pos(x.slot) > block_pos(y.slot)) {
    int sx = x.star ? -1 : 1;
    int sy = y.star ? -1 : 1;
    cplx base = comm_base(*this);
    cplx ph = (sx * sy == 1) ? base : std::conj(base);
    return PR::single(ph, {y, x});
  }
  return std::nullopt;
}

std::string AlgebraPresentation::to_string() const {
  std::ostringstream os;
  switch (name) {
    case AlgebraName::SpherePQ: os << "SpherePQ(p=" << p << ",q=" << q << ",theta=" << theta << ")"; break;
    case AlgebraName::Sphere00: os << "Sphere00(theta=" << theta << ")"; break;
    case AlgebraName::DiscQ: os << "DiscQ(q=" << q << ")"; break;
    case AlgebraName::CrossedPlus: os << "CrossedPlus(theta=" << theta << ")"; break;
    case AlgebraName::CrossedMinus: os << "CrossedMinus(theta=" << theta << ")"; break;
    case AlgebraName::Torus: os << "Torus(theta=" << theta << ")"; break;
  }
  return os.str();
}

Word parse_word(const AlgebraPresentation& pres, const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    bool found = false;
    for (int slot = 0; slot < pres.num_gens() && !found; ++slot) {
      for (bool star : {false, true}) {
        if (tok == pres.gen_name(slot, star)) {
          w.push_back(gen_letter(slot, star));
          found = true;
          break;
        }
      }
    }
    if (!found) throw std::invalid_argument("unknown letter '" + tok + "' for " + pres.to_string());
  }
  return w;
}

std::string word_to_string(const AlgebraPresentation& pres, const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += " ";
    if (l.proj) {
      out += pres.proj_name(l.slot);
      if (pres.mode(l.slot) == GenMode::IsometryIndexed) out += "_" + std::to_string(l.k);
    } else {
      out += pres.gen_name(l.slot, l.star);
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace qs3
