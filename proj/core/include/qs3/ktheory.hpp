// Finitely generated abelian groups, integer-matrix homomorphisms, Smith
// normal form, and the exact-sequence bookkeeping that turns the Mayer-
// Vietoris and Pimsner-Voiculescu data into K-groups.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace qs3 {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  // Columns of this followed by columns of o.
  IntMatrix hstack(const IntMatrix& o) const;
  IntMatrix columns(const std::vector<int>& idx) const;
  IntMatrix top_rows(int n) const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, const Int& f);  // row dst += f * row src
  void add_col_multiple(int dst, int src, const Int& f);
  void negate_row(int i);
  void negate_col(int i);

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Exact integer determinant (fraction-free Gaussian elimination).
Int determinant(const IntMatrix& m);

// u * m * v = d with u, v unimodular and d diagonal with the divisibility
// chain d_0 | d_1 | ... ; u_inv tracks the inverse of u.
struct SmithResult {
  IntMatrix u, d, v, u_inv;
  int rank = 0;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Column lattice helpers built on SNF.
bool lattice_contains(const IntMatrix& basis_cols, const IntMatrix& vectors);
IntMatrix lattice_basis(const IntMatrix& generators);  // full-column-rank basis
bool lattices_equal(const IntMatrix& a, const IntMatrix& b);

class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  static FGAbelianGroup trivial() { return FGAbelianGroup(); }
  static FGAbelianGroup free_group(int rank);
  static FGAbelianGroup cyclic(long long n);
  // Invariant-factor list; 0 encodes a free Z factor, 1s are dropped.
  static FGAbelianGroup from_invariant_factors(const std::vector<long long>& factors);
  static FGAbelianGroup from_factors(std::vector<Int> torsion, int free_rank);

  const std::vector<Int>& torsion() const { return torsion_; }
  int free_rank() const { return free_rank_; }
  int num_gens() const { return static_cast<int>(torsion_.size()) + free_rank_; }
  bool is_trivial() const { return torsion_.empty() && free_rank_ == 0; }

  // Invariant factor of generator i (0 for free generators).
  Int factor(int i) const;
  // Relation matrix: columns d_i e_i over the torsion generators.
  IntMatrix relation_matrix() const;

  bool operator==(const FGAbelianGroup& o) const = default;
  std::string to_string() const;

 private:
  std::vector<Int> torsion_;  // each > 1, dividing the next
  int free_rank_ = 0;
};

struct GroupHom {
  FGAbelianGroup domain;
  FGAbelianGroup codomain;
  IntMatrix matrix;  // codomain.num_gens() x domain.num_gens()

  GroupHom(FGAbelianGroup dom, FGAbelianGroup cod, IntMatrix m);
  static GroupHom zero(const FGAbelianGroup& dom, const FGAbelianGroup& cod);
  static GroupHom from_rows(const FGAbelianGroup& dom, const FGAbelianGroup& cod,
                            const std::vector<std::vector<long long>>& rows);

  bool is_zero() const;
  bool is_isomorphism() const;
};

GroupHom compose(const GroupHom& second, const GroupHom& first);

FGAbelianGroup kernel(const GroupHom& h);
FGAbelianGroup cokernel(const GroupHom& h);

// Kernel with a chosen embedding of its generators into the domain.
struct KernelData {
  FGAbelianGroup group;
  GroupHom inclusion;  // group -> domain of h
};
KernelData kernel_with_generators(const GroupHom& h);

// Cokernel with the canonical projection from the codomain.
struct CokernelData {
  FGAbelianGroup group;
  GroupHom projection;  // codomain of h -> group
};
CokernelData cokernel_with_projection(const GroupHom& h);

// Exactness (image = kernel) at every interior node of a composable chain.
bool check_exact(const std::vector<GroupHom>& seq);
// Exactness at every node of a cyclic sequence (seq.back() feeds seq.front()).
bool check_exact_cycle(const std::vector<GroupHom>& cycle);

// Reduced Pimsner-Voiculescu sequence 0 -> K1 -> Z^r -> Z^r -> K0 -> 0 for a
// crossed product by Z whose coefficient algebra has K0 = Z^r, K1 = 0, with
// alpha the induced map on K0.  Returns (K0, K1).
std::pair<FGAbelianGroup, FGAbelianGroup> pv_sequence(int k0_rank, int k1_rank,
                                                      const GroupHom& alpha);

struct PatternError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mayer-Vietoris hexagon data: the four edge groups, the two horizontal maps,
// and flags for connecting maps known to vanish.
struct SixTermData {
  FGAbelianGroup e01;  // K0(B1) + K0(B2)
  FGAbelianGroup e02;  // K0(D)
  FGAbelianGroup e11;  // K1(B1) + K1(B2)
  FGAbelianGroup e12;  // K1(D)
  GroupHom top;        // e01 -> e02
  GroupHom bottom;     // e11 -> e12
  bool delta0_zero = false;  // K0(D) -> G1
  bool delta1_zero = false;  // K1(D) -> G0
  std::string name;
  std::vector<std::string> generator_labels;
};

struct SixTermSolution {
  FGAbelianGroup g0, g1;
  // g0 -> e01 -> e02 -> g1 -> e11 -> e12 -> g0
  std::vector<GroupHom> hexagon;
  bool exact = false;
};

// Solves the hexagon when an isomorphic horizontal map (or explicit zero
// flags) force the adjacent arrows to vanish; otherwise throws PatternError.
SixTermSolution solve_six_term(const SixTermData& data);

std::vector<std::string> six_term_preset_names();
SixTermData six_term_preset(const std::string& name);
SixTermData six_term_from_json(const std::string& json_text);
std::string six_term_to_json(const SixTermData& data);

}  // namespace qs3
