#include "cdg/gmodule.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "cdg/groupcore.hpp"

namespace cdg {

void validate_module(const MatModule& m) {
  for (const auto& [label, mat] : m.action) {
    if (mat.p() != m.p || mat.rows() != m.dim || mat.cols() != m.dim) {
      throw DescriptorError("module action '" + label + "' has wrong shape or field");
    }
    invert(mat);  // SingularMatrixError when not invertible
  }
}

u32 pairing(const std::vector<u32>& alpha, const std::vector<u32>& v, u32 p) {
  return dot(alpha, v, p);
}

DualModule dual(const MatModule& m) {
  validate_module(m);
  DualModule d;
  d.p = m.p;
  d.dim = m.dim;
  d.group_ref = m.group_ref;
  for (const auto& [label, mat] : m.action) {
    d.action[label] = transpose(invert(mat));
  }
  return d;
}

FpMatrix dual_action_of(const MatModule& m, const std::string& label) {
  auto it = m.action.find(label);
  if (it == m.action.end()) throw DescriptorError("unknown generator label '" + label + "'");
  return transpose(invert(it->second));
}

static const FpMatrix& action_of(const MatModule& m, const std::string& label) {
  auto it = m.action.find(label);
  if (it == m.action.end()) throw DescriptorError("unknown generator label '" + label + "'");
  return it->second;
}

// Fixed vectors of a family of matrices: v(M_s - I) = 0 for every s, i.e. the
// kernel of the stacked transposes.
static std::vector<std::vector<u32>> fixed_of_matrices(
    u32 p, u32 dim, const std::vector<FpMatrix>& mats) {
  if (mats.empty()) {
    // Trivial subgroup: everything is fixed.
    FpMatrix id = FpMatrix::identity(p, dim);
    std::vector<std::vector<u32>> full;
    for (u32 i = 0; i < dim; ++i) full.push_back(id.row(i));
    return full;
  }
  FpMatrix stacked(p, mats.size() * dim, dim);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    FpMatrix t = transpose(mat_sub(mats[k], FpMatrix::identity(p, dim)));
    for (u32 i = 0; i < dim; ++i)
      for (u32 j = 0; j < dim; ++j) stacked.at(k * dim + i, j) = t.at(i, j);
  }
  return kernel_basis(stacked);
}

std::vector<std::vector<u32>> fixed_space(const MatModule& m,
                                          const std::vector<std::string>& labels) {
  std::vector<FpMatrix> mats;
  for (const auto& l : labels) mats.push_back(action_of(m, l));
  return fixed_of_matrices(m.p, m.dim, mats);
}

// Order of the matrix group generated by the labelled matrices, capped.
static u64 matrix_group_order(const MatModule& m,
                              const std::vector<std::string>& labels, u64 cap) {
  std::vector<FpMatrix> gens;
  for (const auto& l : labels) gens.push_back(action_of(m, l));
  std::set<std::vector<u32>> seen;
  std::queue<FpMatrix> todo;
  FpMatrix id = FpMatrix::identity(m.p, m.dim);
  seen.insert(id.data());
  todo.push(id);
  while (!todo.empty()) {
    FpMatrix cur = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      FpMatrix nxt = mat_mul(cur, g);
      if (seen.insert(nxt.data()).second) {
        if (seen.size() > cap) throw CapError("matrix group exceeds cap");
        todo.push(nxt);
      }
    }
  }
  return seen.size();
}

FittingSplit fitting_decompose(const MatModule& m,
                               const std::vector<std::string>& labels) {
  u64 order = matrix_group_order(m, labels, 1u << 20);
  if (order % m.p == 0) {
    throw CoprimalityError("fitting_decompose: group order divisible by p=" +
                           std::to_string(m.p));
  }
  FittingSplit split;
  split.fixed = fixed_space(m, labels);

  // [V,S] is spanned by the rows of the matrices M_s - I.
  std::vector<FpMatrix> mats;
  for (const auto& l : labels) mats.push_back(action_of(m, l));
  if (mats.empty()) {
    split.commutator = {};
  } else {
    FpMatrix stacked(m.p, mats.size() * m.dim, m.dim);
    for (std::size_t k = 0; k < mats.size(); ++k) {
      FpMatrix d = mat_sub(mats[k], FpMatrix::identity(m.p, m.dim));
      for (u32 i = 0; i < m.dim; ++i)
        for (u32 j = 0; j < m.dim; ++j) stacked.at(k * m.dim + i, j) = d.at(i, j);
    }
    split.commutator = row_space_basis(stacked);
  }

  // Complementarity is forced by coprimality; treat a violation as a bug.
  if (split.fixed.size() + split.commutator.size() != m.dim) {
    throw Error("fitting_decompose: components do not complement");
  }
  std::vector<std::vector<u32>> all = split.fixed;
  all.insert(all.end(), split.commutator.begin(), split.commutator.end());
  if (!all.empty() && rank(from_rows(m.p, all, m.dim)) != m.dim) {
    throw Error("fitting_decompose: components intersect");
  }
  return split;
}

bool dual_fixed_check(const MatModule& m, const std::vector<std::string>& labels) {
  // alpha * (M^-1)^T = alpha is alpha * (M^T - I) = 0, i.e. (M - I) alpha^T = 0,
  // so the dual fixed space vanishes exactly when the stacked M_s - I blocks
  // have full column rank.  No inversions needed.
  if (labels.empty()) return m.dim == 0;
  FpMatrix stacked(m.p, labels.size() * m.dim, m.dim);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    FpMatrix d = mat_sub(action_of(m, labels[k]), FpMatrix::identity(m.p, m.dim));
    for (u32 i = 0; i < m.dim; ++i)
      for (u32 j = 0; j < m.dim; ++j) stacked.at(k * m.dim + i, j) = d.at(i, j);
  }
  return rank(stacked) == m.dim;
}

// ---------------------------------------------------------------------------
// Spinning inside the regular module
// ---------------------------------------------------------------------------

namespace {

// Incremental reduced-echelon span over F_p.  Rows are kept fully reduced
// (every pivot column is zero in all other rows), so reduction coefficients
// can be read off pivot positions in any order.  Candidate reduction runs on
// a u64 work vector with a single final mod pass; entries stay far below
// overflow because each of at most `rows` axpys adds at most (p-1)^2.
class EchelonSpan {
public:
  EchelonSpan(u32 p, std::size_t ambient) : p_(p), ambient_(ambient) {}

  std::size_t size() const { return rows_.size(); }
  const std::vector<u32>& row(std::size_t i) const { return rows_[i]; }

  // Reduces v against the span.  Returns true and appends a new normalized
  // row when v was independent; coeffs (when requested) receives the
  // representation of v over the rows *before* any insertion.
  bool insert(const std::vector<u32>& v, std::vector<u32>* coeffs = nullptr) {
    std::vector<u64> work(v.begin(), v.end());
    if (coeffs) coeffs->assign(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      u32 c = u32(work[pivots_[i]] % p_);
      if (!c) continue;
      if (coeffs) (*coeffs)[i] = c;
      u64 f = p_ - c;
      const std::vector<u32>& r = rows_[i];
      for (std::size_t j = 0; j < ambient_; ++j) work[j] += f * r[j];
    }
    std::vector<u32> residual(ambient_);
    bool zero = true;
    for (std::size_t j = 0; j < ambient_; ++j) {
      residual[j] = u32(work[j] % p_);
      if (residual[j]) zero = false;
    }
    if (zero) return false;

    std::size_t piv = 0;
    while (residual[piv] == 0) ++piv;
    u32 inv = mod_inv(residual[piv], p_);
    for (auto& x : residual) x = mod_mul(x, inv, p_);
    // Keep full reduction: clear the new pivot column from existing rows.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      u32 c = rows_[i][piv];
      if (!c) continue;
      u32 f = p_ - c;
      for (std::size_t j = 0; j < ambient_; ++j) {
        rows_[i][j] = u32((rows_[i][j] + u64(f) * residual[j]) % p_);
      }
    }
    rows_.push_back(std::move(residual));
    pivots_.push_back(piv);
    return true;
  }

  // Coordinates of v over the current rows; Error when v is outside the span.
  std::vector<u32> coords(const std::vector<u32>& v) const {
    std::vector<u32> c(rows_.size(), 0);
    if (!reduce_to_zero(v, &c)) {
      throw Error("EchelonSpan::coords: vector outside span");
    }
    return c;
  }

  // Pivot-read coordinates: rows are fully reduced, so a vector already known
  // to lie in the span has coefficient v[pivot_i] over row i.  O(rows) instead
  // of O(rows * ambient); membership itself is not checked here.
  std::vector<u32> coords_by_pivots(const std::vector<u32>& v) const {
    std::vector<u32> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]] % p_;
    return c;
  }

  bool contains(const std::vector<u32>& v) const {
    return reduce_to_zero(v, nullptr);
  }

private:
  bool reduce_to_zero(const std::vector<u32>& v, std::vector<u32>* c) const {
    std::vector<u64> work(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      u32 ci = u32(work[pivots_[i]] % p_);
      if (!ci) continue;
      if (c) (*c)[i] = ci;
      u64 f = p_ - ci;
      const std::vector<u32>& r = rows_[i];
      for (std::size_t j = 0; j < ambient_; ++j) work[j] += f * r[j];
    }
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (work[j] % p_) return false;
    }
    return true;
  }

  u32 p_;
  std::size_t ambient_;
  std::vector<std::vector<u32>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<u32> permute_vector(const std::vector<u32>& v,
                                const std::vector<int>& perm) {
  std::vector<u32> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
  return out;
}

}  // namespace

SpunModule module_with_trivial_fixed_points(const ConcreteGroup& H,
                                            const Subgroup& N, u32 p,
                                            u32 target_dim_cap) {
  const u64 h_order = H.order();
  if (N.ids.size() <= 1) {
    throw NoSuchModuleError("module_with_trivial_fixed_points: N is trivial");
  }
  if (!is_normal(H, N)) {
    throw NormalityError("module_with_trivial_fixed_points: N is not normal in H");
  }
  if (N.ids.size() % p == 0) {
    throw CoprimalityError("module_with_trivial_fixed_points: p divides |N|");
  }
  const u32 cap = target_dim_cap ? target_dim_cap : 4096;
  const u64 full_dim = h_order - h_order / N.ids.size();
  if (full_dim > cap) {
    throw CapError("module_with_trivial_fixed_points: dimension " +
                   std::to_string(full_dim) + " exceeds the cap of " +
                   std::to_string(cap) + "; use the symbolic mode instead");
  }

  // Right-multiplication permutations of the basis {delta_g : g in H}.
  auto perm_of = [&](int gid) {
    std::vector<int> perm(h_order);
    for (u64 i = 0; i < h_order; ++i) perm[i] = H.mul(int(i), gid);
    return perm;
  };
  std::vector<std::vector<int>> gen_perms;
  for (int gid : H.generator_ids()) gen_perms.push_back(perm_of(gid));
  std::vector<std::vector<int>> n_perms;
  for (int nid : N.ids) n_perms.push_back(perm_of(nid));
  std::vector<int> n_gen_ids = subgroup_generators(H, N);
  std::vector<std::vector<int>> n_gen_perms;
  for (int nid : n_gen_ids) n_gen_perms.push_back(perm_of(nid));

  const u32 inv_n = mod_inv(u32(N.ids.size() % p), p);
  const u64 base_seed = 12345;

  for (u32 attempt = 0; attempt < 8; ++attempt) {
    const u64 seed = base_seed + attempt;
    std::mt19937_64 rng(seed);
    std::vector<u32> v(h_order);
    for (auto& x : v) x = u32(rng() % p);

    // Project onto [W,N] along C_W(N): w = v - |N|^{-1} * sum_{n in N} v.n
    std::vector<u64> acc(h_order, 0);
    for (const auto& perm : n_perms) {
      for (u64 i = 0; i < h_order; ++i) acc[perm[i]] += v[i];
    }
    std::vector<u32> w(h_order);
    bool zero = true;
    for (u64 i = 0; i < h_order; ++i) {
      u32 avg = mod_mul(u32(acc[i] % p), inv_n, p);
      w[i] = mod_sub(v[i], avg, p);
      if (w[i]) zero = false;
    }
    if (zero) continue;

    // Spin w under H.  Queue entries are snapshots of inserted vectors; the
    // span of the queue equals the span of the rows throughout, so closure of
    // the queue under the generators is closure of the whole span.
    EchelonSpan span(p, h_order);
    std::vector<std::vector<u32>> queue;
    span.insert(w);
    queue.push_back(w);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (const auto& perm : gen_perms) {
        std::vector<u32> img = permute_vector(queue[qi], perm);
        if (span.insert(img)) queue.push_back(std::move(img));
      }
    }
    // An unlucky vector generates a proper submodule; retry with a new seed.
    if (span.size() != full_dim) continue;

    const u32 dim = u32(span.size());
    SpunModule out;
    out.seed = seed;
    out.attempts = attempt + 1;
    out.module.p = p;
    out.module.dim = dim;
    out.module.group_ref = "spun[F_" + std::to_string(p) + "; |H|=" +
                           std::to_string(h_order) + "; |N|=" +
                           std::to_string(N.ids.size()) + "; seed=" +
                           std::to_string(seed) + "]";

    auto materialize = [&](const std::vector<int>& perm) {
      FpMatrix mat(p, dim, dim);
      for (u32 i = 0; i < dim; ++i) {
        std::vector<u32> img = permute_vector(span.row(i), perm);
        // Spot-check span membership on a few rows; closure of the queue
        // under the generators already implies it for all of them.
        if ((i == 0 || i == dim / 2 || i + 1 == dim) && !span.contains(img)) {
          throw Error("module_with_trivial_fixed_points: span not closed");
        }
        std::vector<u32> c = span.coords_by_pivots(img);
        for (u32 j = 0; j < dim; ++j) mat.at(i, j) = c[j];
      }
      return mat;
    };
    for (std::size_t k = 0; k < gen_perms.size(); ++k) {
      std::string label = "g" + std::to_string(k);
      out.module.action[label] = materialize(gen_perms[k]);
      out.group_labels.push_back(label);
    }
    for (std::size_t k = 0; k < n_gen_perms.size(); ++k) {
      std::string label = "n" + std::to_string(k);
      out.module.action[label] = materialize(n_gen_perms[k]);
      out.normal_labels.push_back(label);
    }
    return out;
  }
  throw NumericalMethodError(
      "module_with_trivial_fixed_points: no seed spun the full commutator "
      "component");
}

// ---------------------------------------------------------------------------
// Cyclotomic factors
// ---------------------------------------------------------------------------

namespace {

// x^m - 1 over F_p.
Poly x_pow_m_minus_1(u64 m, u32 p) {
  Poly f(m + 1, 0);
  f[0] = p - 1;
  f[m] = 1;
  return f;
}

Poly cyclotomic(u64 m, u32 p) {
  Poly f = x_pow_m_minus_1(m, p);
  for (u64 d = 1; d < m; ++d) {
    if (m % d) continue;
    Poly phi_d = cyclotomic(d, p);
    auto [q, r] = poly_divmod(f, phi_d, p);
    if (!r.empty()) throw Error("cyclotomic: inexact division");
    f = q;
  }
  return f;
}

// Deterministic Berlekamp factorization of a squarefree monic polynomial.
// Splitting scans c = 0..p-1 in order; the factor list is sorted by
// ascending-coefficient vectors, which fixes "first factor" deterministically.
std::vector<Poly> berlekamp_factor(const Poly& f, u32 p) {
  std::vector<Poly> result;
  std::vector<Poly> work{poly_monic(f, p)};
  while (!work.empty()) {
    Poly g = work.back();
    work.pop_back();
    const std::size_t d = g.size() - 1;
    if (d <= 1) {
      result.push_back(g);
      continue;
    }
    // Berlekamp matrix: row i = coefficients of x^{p*i} mod g.
    FpMatrix q(p, d, d);
    Poly xp = poly_xpow_mod(p, g, p);
    Poly cur{1};
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < cur.size(); ++j) q.at(i, j) = cur[j];
      cur = poly_mod(poly_mul(cur, xp, p), g, p);
    }
    FpMatrix qmi = mat_sub(q, FpMatrix::identity(p, d));
    // Fixed polynomials v(x) with v(x)^p = v(x) mod g: left null space.
    auto basis = kernel_basis(transpose(qmi));
    if (basis.size() == 1) {
      result.push_back(g);
      continue;
    }
    // Pick the first non-constant basis vector and split with gcds.
    Poly v;
    for (const auto& b : basis) {
      Poly cand(b);
      poly_trim(cand);
      if (poly_deg(cand) >= 1) {
        v = cand;
        break;
      }
    }
    if (v.empty()) throw Error("berlekamp: no splitting polynomial");
    bool split = false;
    for (u32 c = 0; c < p; ++c) {
      Poly shifted = v;
      shifted[0] = mod_sub(shifted.size() ? shifted[0] : 0, c, p);
      poly_trim(shifted);
      Poly h = poly_gcd(g, shifted, p);
      if (poly_deg(h) >= 1 && h.size() < g.size()) {
        auto [quot, rem] = poly_divmod(g, h, p);
        if (!rem.empty()) throw Error("berlekamp: inexact split");
        work.push_back(h);
        work.push_back(poly_monic(quot, p));
        split = true;
        break;
      }
    }
    if (!split) throw Error("berlekamp: splitting failed");
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

MatModule irreducible_cyclic_module(u64 m, u32 p) {
  if (m <= 1) throw DomainError("irreducible_cyclic_module: m must exceed 1");
  if (m % p == 0) throw CoprimalityError("irreducible_cyclic_module: p divides m");
  Poly phi = cyclotomic(m, p);
  std::vector<Poly> factors = berlekamp_factor(phi, p);
  const Poly& f = factors.front();
  const u32 d = u32(poly_deg(f));
  if (d != mul_order(u32(p % m), u32(m))) {
    throw Error("irreducible_cyclic_module: unexpected factor degree");
  }
  // Companion matrix of f acting on row coefficient vectors: multiply by x.
  FpMatrix c(p, d, d);
  for (u32 i = 0; i + 1 < d; ++i) c.at(i, i + 1) = 1;
  for (u32 j = 0; j < d; ++j) c.at(d - 1, j) = mod_neg(f[j], p);
  MatModule mod;
  mod.p = p;
  mod.dim = d;
  mod.action["g"] = c;
  mod.group_ref = "Z_" + std::to_string(m);
  return mod;
}

}  // namespace cdg
