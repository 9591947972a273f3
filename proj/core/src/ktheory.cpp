#include "qs3/ktheory.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qs3 {

using json = nlohmann::json;

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
  if (rows_ != o.rows_ && o.cols_ != 0)
    throw std::invalid_argument("hstack row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::columns(const std::vector<int>& idx) const {
  IntMatrix r(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < r.cols(); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

IntMatrix IntMatrix::top_rows(int n) const {
  IntMatrix r(n, cols_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  return r;
}

void IntMatrix::swap_rows(int i, int j) {
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& f) {
  for (int c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& f) {
  for (int r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
  for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

// Quotient rounded to nearest, so remainders obey |r| <= |g| / 2.
static Int div_round(const Int& v, const Int& g) {
  Int q = v / g;
  Int r = v - q * g;
  if (r != 0 && abs(r) * 2 > abs(g)) q += ((r < 0) == (g < 0)) ? 1 : -1;
  return q;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult s;
  s.d = m;
  const int R = m.rows(), C = m.cols();
  s.u = IntMatrix::identity(R);
  s.u_inv = IntMatrix::identity(R);
  s.v = IntMatrix::identity(C);
  IntMatrix& d = s.d;

  auto row_op = [&](int dst, int src, const Int& f) {
    d.add_row_multiple(dst, src, f);
    s.u.add_row_multiple(dst, src, f);
    s.u_inv.add_col_multiple(src, dst, -f);
  };
  auto col_op = [&](int dst, int src, const Int& f) {
    d.add_col_multiple(dst, src, f);
    s.v.add_col_multiple(dst, src, f);
  };
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    d.swap_rows(i, j);
    s.u.swap_rows(i, j);
    s.u_inv.swap_cols(i, j);
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    d.swap_cols(i, j);
    s.v.swap_cols(i, j);
  };

  int t = 0;
  const int tmax = std::min(R, C);
  while (t < tmax) {
    // Re-select the submatrix entry of smallest absolute value as the pivot
    // on every sweep; with rounded division each re-selection at least
    // halves the pivot, which bounds the sweeps and keeps entries tame.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j) {
        if (d.at(i, j) == 0) continue;
        Int a = abs(d.at(i, j));
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    const Int pivot = d.at(t, t);

    bool dirty = false;
    for (int i = t + 1; i < R; ++i) {
      if (d.at(i, t) == 0) continue;
      row_op(i, t, -div_round(d.at(i, t), pivot));
      if (d.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < C; ++j) {
      if (d.at(t, j) == 0) continue;
      col_op(j, t, -div_round(d.at(t, j), pivot));
      if (d.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // The pivot must divide the remaining block for the invariant-factor
    // chain; pulling an offending row in and re-clearing leaves a remainder
    // that the next re-selection picks up.
    int bad_row = -1;
    for (int i = t + 1; i < R && bad_row < 0; ++i)
      for (int j = t + 1; j < C; ++j)
        if (d.at(i, j) % pivot != 0) {
          bad_row = i;
          break;
        }
    if (bad_row >= 0) {
      row_op(t, bad_row, 1);
      for (int j = t + 1; j < C; ++j)
        if (d.at(t, j) != 0) col_op(j, t, -div_round(d.at(t, j), pivot));
      continue;
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
      s.u_inv.negate_col(t);
    }
    ++t;
  }
  s.rank = 0;
  for (int i = 0; i < tmax; ++i)
    if (d.at(i, i) != 0) ++s.rank;
  return s;
}

bool lattice_contains(const IntMatrix& basis_cols, const IntMatrix& vectors) {
  SmithResult s = smith_normal_form(basis_cols);
  IntMatrix ux = s.u * vectors;
  for (int j = 0; j < vectors.cols(); ++j) {
    for (int i = 0; i < s.rank; ++i)
      if (ux.at(i, j) % s.d.at(i, i) != 0) return false;
    for (int i = s.rank; i < basis_cols.rows(); ++i)
      if (ux.at(i, j) != 0) return false;
  }
  return true;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  SmithResult s = smith_normal_form(generators);
  IntMatrix gv = generators * s.v;
  std::vector<int> keep;
  for (int j = 0; j < s.rank; ++j) keep.push_back(j);
  return gv.columns(keep);
}

bool lattices_equal(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

FGAbelianGroup FGAbelianGroup::free_group(int rank) {
  FGAbelianGroup g;
  g.free_rank_ = rank;
  return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(long long n) {
  return from_invariant_factors({n});
}

FGAbelianGroup FGAbelianGroup::from_invariant_factors(const std::vector<long long>& factors) {
  std::vector<Int> torsion;
  int free_rank = 0;
  for (long long f : factors) {
    if (f < 0) throw std::invalid_argument("invariant factors must be >= 0");
    if (f == 0)
      ++free_rank;
    else if (f > 1)
      torsion.push_back(f);
  }
  return from_factors(std::move(torsion), free_rank);
}

FGAbelianGroup FGAbelianGroup::from_factors(std::vector<Int> torsion, int free_rank) {
  std::sort(torsion.begin(), torsion.end());
  for (size_t i = 0; i + 1 < torsion.size(); ++i)
    if (torsion[i + 1] % torsion[i] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  FGAbelianGroup g;
  g.torsion_ = std::move(torsion);
  g.free_rank_ = free_rank;
  return g;
}

Int FGAbelianGroup::factor(int i) const {
  if (i < static_cast<int>(torsion_.size())) return torsion_[i];
  return 0;
}

IntMatrix FGAbelianGroup::relation_matrix() const {
  int n = num_gens();
  int k = static_cast<int>(torsion_.size());
  IntMatrix r(n, k);
  for (int i = 0; i < k; ++i) r.at(i, i) = torsion_[i];
  return r;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Int& t : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (free_rank_ > 0) {
    if (!first) os << " + ";
    os << (free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_));
  }
  return os.str();
}

GroupHom::GroupHom(FGAbelianGroup dom, FGAbelianGroup cod, IntMatrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
  if (matrix.rows() != codomain.num_gens() || matrix.cols() != domain.num_gens())
    throw std::invalid_argument("homomorphism matrix shape mismatch");
  // Well-definedness: the order of each domain generator must kill its image
  // modulo the codomain relations; reduce torsion rows canonically.
  for (int j = 0; j < matrix.cols(); ++j) {
    Int dj = domain.factor(j);
    if (dj == 0) continue;
    for (int i = 0; i < matrix.rows(); ++i) {
      Int di = codomain.factor(i);
      Int v = dj * matrix.at(i, j);
      if (di == 0 ? v != 0 : v % di != 0)
        throw std::invalid_argument("homomorphism not well-defined on torsion generator");
    }
  }
  for (int i = 0; i < matrix.rows(); ++i) {
    Int di = codomain.factor(i);
    if (di == 0) continue;
    for (int j = 0; j < matrix.cols(); ++j) {
      Int v = matrix.at(i, j) % di;
      if (v < 0) v += di;
      matrix.at(i, j) = v;
    }
  }
}

GroupHom GroupHom::zero(const FGAbelianGroup& dom, const FGAbelianGroup& cod) {
  return GroupHom(dom, cod, IntMatrix(cod.num_gens(), dom.num_gens()));
}

GroupHom GroupHom::from_rows(const FGAbelianGroup& dom, const FGAbelianGroup& cod,
                             const std::vector<std::vector<long long>>& rows) {
  return GroupHom(dom, cod, IntMatrix::from_rows(rows));
}

bool GroupHom::is_zero() const {
  for (int i = 0; i < matrix.rows(); ++i)
    for (int j = 0; j < matrix.cols(); ++j)
      if (matrix.at(i, j) != 0) return false;
  return true;
}

bool GroupHom::is_isomorphism() const {
  return kernel(*this).is_trivial() && cokernel(*this).is_trivial();
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  if (!(first.codomain == second.domain))
    throw std::invalid_argument("compose: middle groups differ");
  return GroupHom(first.domain, second.codomain, second.matrix * first.matrix);
}

// Lattice of x in Z^n with h(x) inside the codomain relations, as columns.
static IntMatrix kernel_preimage_lattice(const GroupHom& h) {
  int n = h.domain.num_gens();
  IntMatrix m1 = h.matrix.hstack(h.codomain.relation_matrix());
  SmithResult s = smith_normal_form(m1);
  std::vector<int> kcols;
  for (int j = s.rank; j < m1.cols(); ++j) kcols.push_back(j);
  IntMatrix w = s.v.columns(kcols);
  return w.top_rows(n);
}

// Solves basis * C = target over the integers; target must lie in the lattice.
static IntMatrix solve_in_lattice(const IntMatrix& basis, const IntMatrix& target) {
  SmithResult s = smith_normal_form(basis);
  if (s.rank != basis.cols()) throw std::logic_error("solve_in_lattice: basis not independent");
  IntMatrix ut = s.u * target;
  IntMatrix y(basis.cols(), target.cols());
  for (int j = 0; j < target.cols(); ++j) {
    for (int i = 0; i < s.rank; ++i) {
      if (ut.at(i, j) % s.d.at(i, i) != 0)
        throw std::logic_error("solve_in_lattice: target outside lattice");
      y.at(i, j) = ut.at(i, j) / s.d.at(i, i);
    }
    for (int i = s.rank; i < basis.rows(); ++i)
      if (ut.at(i, j) != 0) throw std::logic_error("solve_in_lattice: target outside lattice");
  }
  return s.v * y;
}

// Quotient of the lattice spanned by basis (in Z^n) by the sublattice
// spanned by rel, with adapted generators expressed in Z^n.
static KernelData lattice_quotient(const FGAbelianGroup& ambient_domain, const IntMatrix& basis,
                                   const IntMatrix& rel) {
  const int r = basis.cols();
  IntMatrix c = solve_in_lattice(basis, rel);
  SmithResult sc = smith_normal_form(c);
  IntMatrix gens = basis * sc.u_inv;

  std::vector<Int> torsion;
  std::vector<int> keep;
  for (int i = 0; i < sc.rank; ++i) {
    if (sc.d.at(i, i) > 1) {
      torsion.push_back(sc.d.at(i, i));
      keep.push_back(i);
    }
  }
  int free_rank = r - sc.rank;
  for (int i = sc.rank; i < r; ++i) keep.push_back(i);

  KernelData out{FGAbelianGroup::from_factors(torsion, free_rank),
                 GroupHom::zero(FGAbelianGroup::trivial(), ambient_domain)};
  out.inclusion = GroupHom(out.group, ambient_domain, gens.columns(keep));
  return out;
}

KernelData kernel_with_generators(const GroupHom& h) {
  IntMatrix pre = kernel_preimage_lattice(h);
  IntMatrix basis = lattice_basis(pre);
  if (basis.cols() == 0) {
    KernelData out{FGAbelianGroup::trivial(),
                   GroupHom::zero(FGAbelianGroup::trivial(), h.domain)};
    return out;
  }
  return lattice_quotient(h.domain, basis, h.domain.relation_matrix());
}

FGAbelianGroup kernel(const GroupHom& h) { return kernel_with_generators(h).group; }

CokernelData cokernel_with_projection(const GroupHom& h) {
  int m = h.codomain.num_gens();
  IntMatrix rels = h.matrix.hstack(h.codomain.relation_matrix());
  SmithResult s = smith_normal_form(rels);
  std::vector<Int> torsion;
  std::vector<int> keep;
  for (int i = 0; i < s.rank; ++i)
    if (s.d.at(i, i) > 1) {
      torsion.push_back(s.d.at(i, i));
      keep.push_back(i);
    }
  for (int i = s.rank; i < m; ++i) keep.push_back(i);
  int free_rank = m - s.rank;

  FGAbelianGroup g = FGAbelianGroup::from_factors(torsion, free_rank);
  IntMatrix proj(g.num_gens(), m);
  for (int i = 0; i < g.num_gens(); ++i)
    for (int j = 0; j < m; ++j) proj.at(i, j) = s.u.at(keep[i], j);
  return CokernelData{g, GroupHom(h.codomain, g, std::move(proj))};
}

FGAbelianGroup cokernel(const GroupHom& h) { return cokernel_with_projection(h).group; }

static bool exact_at(const GroupHom& in, const GroupHom& out) {
  if (!(in.codomain == out.domain)) throw std::invalid_argument("chain is not composable");
  IntMatrix rb = in.codomain.relation_matrix();
  IntMatrix image = in.matrix.hstack(rb);
  IntMatrix ker = kernel_preimage_lattice(out).hstack(rb);
  return lattices_equal(image, ker);
}

bool check_exact(const std::vector<GroupHom>& seq) {
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!exact_at(seq[i], seq[i + 1])) return false;
  return true;
}

bool check_exact_cycle(const std::vector<GroupHom>& cycle) {
  if (cycle.empty()) return true;
  for (size_t i = 0; i < cycle.size(); ++i)
    if (!exact_at(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

std::pair<FGAbelianGroup, FGAbelianGroup> pv_sequence(int k0_rank, int k1_rank,
                                                      const GroupHom& alpha) {
  if (k1_rank != 0)
    throw std::invalid_argument("pv_sequence: reduced form needs K1 of the coefficients = 0");
  if (alpha.domain.num_gens() != k0_rank || alpha.domain.free_rank() != k0_rank ||
      alpha.codomain.free_rank() != k0_rank || alpha.codomain.num_gens() != k0_rank)
    throw std::invalid_argument("pv_sequence: inconsistent ranks");
  return {cokernel(alpha), kernel(alpha)};
}

SixTermSolution solve_six_term(const SixTermData& data) {
  if (!(data.top.domain == data.e01) || !(data.top.codomain == data.e02) ||
      !(data.bottom.domain == data.e11) || !(data.bottom.codomain == data.e12))
    throw std::invalid_argument("six-term data: maps do not match edge groups");

  const bool top_iso = data.top.is_isomorphism();
  const bool bottom_iso = data.bottom.is_isomorphism();
  // An isomorphic horizontal arrow forces its neighbours to vanish.
  const bool in_g0_zero = data.delta1_zero || bottom_iso;   // K1(D) -> G0
  const bool out_g0_zero = top_iso;                         // G0 -> E01
  const bool in_g1_zero = data.delta0_zero || top_iso;      // K0(D) -> G1
  const bool out_g1_zero = bottom_iso;                      // G1 -> E11

  SixTermSolution sol;
  GroupHom g0_out = GroupHom::zero(FGAbelianGroup::trivial(), data.e01);
  GroupHom g0_in = GroupHom::zero(data.e12, FGAbelianGroup::trivial());
  if (in_g0_zero) {
    KernelData kd = kernel_with_generators(data.top);
    sol.g0 = kd.group;
    g0_out = kd.inclusion;
    g0_in = GroupHom::zero(data.e12, sol.g0);
  } else if (out_g0_zero) {
    CokernelData cd = cokernel_with_projection(data.bottom);
    sol.g0 = cd.group;
    g0_in = cd.projection;
    g0_out = GroupHom::zero(sol.g0, data.e01);
  } else {
    throw PatternError("six-term pattern not applicable: G0 undetermined");
  }

  GroupHom g1_in = GroupHom::zero(data.e02, FGAbelianGroup::trivial());
  GroupHom g1_out = GroupHom::zero(FGAbelianGroup::trivial(), data.e11);
  if (out_g1_zero) {
    CokernelData cd = cokernel_with_projection(data.top);
    sol.g1 = cd.group;
    g1_in = cd.projection;
    g1_out = GroupHom::zero(sol.g1, data.e11);
  } else if (in_g1_zero) {
    KernelData kd = kernel_with_generators(data.bottom);
    sol.g1 = kd.group;
    g1_out = kd.inclusion;
    g1_in = GroupHom::zero(data.e02, sol.g1);
  } else {
    throw PatternError("six-term pattern not applicable: G1 undetermined");
  }

  sol.hexagon = {g0_out, data.top, g1_in, g1_out, data.bottom, g0_in};
  sol.exact = check_exact_cycle(sol.hexagon);
  return sol;
}

std::vector<std::string> six_term_preset_names() { return {"s3-quantum", "s3-classical"}; }

SixTermData six_term_preset(const std::string& name) {
  FGAbelianGroup z2 = FGAbelianGroup::free_group(2);
  if (name == "s3-quantum") {
    SixTermData d{z2,
                  z2,
                  z2,
                  z2,
                  GroupHom::from_rows(z2, z2, {{1, -1}, {0, 0}}),
                  GroupHom::from_rows(z2, z2, {{1, 0}, {0, -1}}),
                  false,
                  false,
                  "s3-quantum",
                  {"K0 edges: units of the two Toeplitz crossed products",
                   "K0(T^2_theta): unit class, Hopf line bundle on the noncommutative torus",
                   "K1 edges: the unitaries implementing the rotation action",
                   "K1(T^2_theta): classes of the unitary generators x, y"}};
    return d;
  }
  if (name == "s3-classical") {
    SixTermData d{z2,
                  z2,
                  z2,
                  z2,
                  GroupHom::from_rows(z2, z2, {{1, -1}, {0, 0}}),
                  GroupHom::from_rows(z2, z2, {{1, 0}, {0, -1}}),
                  false,
                  false,
                  "s3-classical",
                  {"K0 edges: trivial line bundles on the two solid tori",
                   "K0(T^2): unit class, line bundle of degree one",
                   "K1 edges: winding unitaries of the solid tori",
                   "K1(T^2): classes of the two coordinate unitaries"}};
    return d;
  }
  throw std::invalid_argument("unknown six-term preset '" + name + "'");
}

static std::vector<long long> group_factors(const FGAbelianGroup& g) {
  std::vector<long long> out;
  for (const Int& t : g.torsion()) out.push_back(t.convert_to<long long>());
  for (int i = 0; i < g.free_rank(); ++i) out.push_back(0);
  return out;
}

static std::vector<std::vector<long long>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j).convert_to<long long>());
  return rows;
}

SixTermData six_term_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  auto group = [&](const char* key) {
    return FGAbelianGroup::from_invariant_factors(j.at(key).get<std::vector<long long>>());
  };
  FGAbelianGroup e01 = group("e01"), e02 = group("e02"), e11 = group("e11"), e12 = group("e12");
  auto hom = [&](const char* key, const FGAbelianGroup& dom, const FGAbelianGroup& cod) {
    return GroupHom::from_rows(dom, cod, j.at(key).get<std::vector<std::vector<long long>>>());
  };
  SixTermData d{e01,
                e02,
                e11,
                e12,
                hom("top", e01, e02),
                hom("bottom", e11, e12),
                j.value("delta0_zero", false),
                j.value("delta1_zero", false),
                j.value("name", std::string("custom")),
                j.value("generator_labels", std::vector<std::string>{})};
  return d;
}

std::string six_term_to_json(const SixTermData& data) {
  json j;
  j["schema"] = "1";
  j["name"] = data.name;
  j["e01"] = group_factors(data.e01);
  j["e02"] = group_factors(data.e02);
  j["e11"] = group_factors(data.e11);
  j["e12"] = group_factors(data.e12);
  j["top"] = matrix_rows(data.top.matrix);
  j["bottom"] = matrix_rows(data.bottom.matrix);
  j["delta0_zero"] = data.delta0_zero;
  j["delta1_zero"] = data.delta1_zero;
  j["generator_labels"] = data.generator_labels;
  return j.dump(2);
}

}  // namespace qs3
