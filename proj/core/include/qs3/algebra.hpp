// Presented *-algebras of the Heegaard-type quantum 3-sphere family and the
// building blocks it is glued from: the two-parameter sphere, its p=q=0 form,
// the quantum disc, the two Toeplitz crossed products and the noncommutative
// torus.  A presentation fixes the generators, their relations and the local
// pair-rewriting rules that drive words into the canonical linear basis.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qs3 {

using cplx = std::complex<double>;

// Coefficients below this (relative to the element scale) are treated as zero.
inline constexpr double kZeroThreshold = 1e-12;

constexpr double kTwoPi = 6.283185307179586476925286766559;

enum class AlgebraName { SpherePQ, Sphere00, DiscQ, CrossedPlus, CrossedMinus, Torus };

// How a generator slot behaves under the defining relations:
//   Disc            x*x = 1 - p P and x x* = 1 - P with P a power letter
//   IsometryIndexed x*x = 1, x x* = 1 - P_1, indexed projectors P_k = 1 - x^k x*^k
//   Unitary         x*x = 1 = x x*
//   IsometryPlain   x*x = 1 only; mixed powers x^j x*^l stay in the basis
enum class GenMode { Disc, IsometryIndexed, Unitary, IsometryPlain };

// A word letter: a (possibly starred) generator of the given slot, or a
// projector letter attached to a slot.  For Disc-mode slots the projector
// letter is a single power step (k is unused and fixed to 1); for indexed
// slots k >= 1 is the projector index.
struct Letter {
  int slot = 0;
  bool star = false;
  bool proj = false;
  int k = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter gen_letter(int slot, bool star = false) { return Letter{slot, star, false, 1}; }
inline Letter proj_letter(int slot, int k = 1) { return Letter{slot, false, true, k}; }

// Result of rewriting one adjacent letter pair: up to two terms, each with a
// replacement subword of length <= 2.  count == 0 means the pair is zero.
struct PairRewrite {
  struct Term {
    cplx coeff;
    std::array<Letter, 2> letters;
    int len = 0;
  };
  std::array<Term, 2> terms{};
  int count = 0;

  static PairRewrite zero() { return PairRewrite{}; }
  static PairRewrite single(cplx c, std::initializer_list<Letter> ls);
  static PairRewrite pair(cplx c0, std::initializer_list<Letter> l0, cplx c1,
                          std::initializer_list<Letter> l1);
};

struct AlgebraPresentation {
  AlgebraName name = AlgebraName::Sphere00;
  double p = 0.0;
  double q = 0.0;
  double theta = 0.0;

  static AlgebraPresentation sphere_pq(double p, double q, double theta);
  static AlgebraPresentation sphere_00(double theta);
  static AlgebraPresentation disc(double q);
  static AlgebraPresentation crossed_plus(double theta);
  static AlgebraPresentation crossed_minus(double theta);
  static AlgebraPresentation torus(double theta);

  cplx mu() const { return std::polar(1.0, kTwoPi * theta); }

  int num_gens() const;
  GenMode mode(int slot) const;
  bool has_projector(int slot) const;
  double slot_param(int slot) const;  // deformation parameter of the slot

  // Position of each slot's block in the normal form (crossed products put
  // the unitary block first).
  int block_pos(int slot) const;
  std::array<int, 2> block_order() const;

  std::string gen_name(int slot, bool star = false) const;
  std::string proj_name(int slot) const;

  bool compatible(const AlgebraPresentation& other) const;

  // The local rewrite rule for the adjacent pair (x, y), or nullopt when the
  // pair is already in normal order.
  std::optional<PairRewrite> rewrite_pair(const Letter& x, const Letter& y) const;

  std::string to_string() const;
};

// Parses a word with letters drawn from generator names, e.g. "s t t* t*".
Word parse_word(const AlgebraPresentation& pres, const std::string& text);

std::string word_to_string(const AlgebraPresentation& pres, const Word& w);

}  // namespace qs3
