#include "cdg/chardeg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cdg {

std::vector<u64> degree_support(const DegreeMultiset& d) {
  std::vector<u64> out;
  for (const auto& [deg, mult] : d) out.push_back(deg);
  return out;
}

bool is_prime_power(u64 n) {
  if (n < 2) return false;
  return factorize(n).size() == 1;
}

bool is_cdg(const DegreeMultiset& d) { return is_cdg_support(degree_support(d)); }

bool is_cdg_support(const std::vector<u64>& support) {
  for (u64 d : support) {
    if (d > 1 && is_prime_power(d)) return false;
  }
  return true;
}

u32 smallest_dixon_prime(u64 order, u64 exponent) {
  if (order == 0 || exponent == 0) throw DomainError("smallest_dixon_prime: zero");
  for (u64 ell = exponent + 1;; ell += exponent) {
    if (ell * ell <= 4 * order) continue;
    if (!is_prime(ell)) continue;
    if (ell > 0x7fffffffull) throw DomainError("smallest_dixon_prime: too large");
    return u32(ell);
  }
}

u32 sqrt_mod(u32 a, u32 ell) {
  a %= ell;
  if (a == 0) return 0;
  if (ell == 2) return a;
  if (mod_pow(a, (ell - 1) / 2, ell) != 1) {
    throw NoSuchElementError("sqrt_mod: not a quadratic residue");
  }
  if (ell % 4 == 3) return mod_pow(a, (ell + 1) / 4, ell);
  // Tonelli-Shanks.
  u32 q = ell - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u32 z = 2;
  while (mod_pow(z, (ell - 1) / 2, ell) != ell - 1) ++z;
  u32 m = s;
  u32 c = mod_pow(z, q, ell);
  u32 t = mod_pow(a, q, ell);
  u32 r = mod_pow(a, (q + 1) / 2, ell);
  while (t != 1) {
    u32 i = 0, tt = t;
    while (tt != 1) {
      tt = mod_mul(tt, tt, ell);
      ++i;
      if (i == m) throw NumericalMethodError("sqrt_mod: lost the residue");
    }
    u32 b = mod_pow(c, u64(1) << (m - i - 1), ell);
    m = i;
    c = mod_mul(b, b, ell);
    t = mod_mul(t, c, ell);
    r = mod_mul(r, b, ell);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Class-algebra degree computation
// ---------------------------------------------------------------------------

namespace {

// An invariant subspace of F_ell^k: rows of `basis` are in reduced echelon
// form, so coordinates over the basis can be read off the pivot columns.
struct Space {
  FpMatrix basis;
  std::vector<std::size_t> pivots;
};

Space make_space(u32 ell, const std::vector<std::vector<u32>>& rows,
                 std::size_t k) {
  Space s;
  std::vector<std::size_t> piv;
  s.basis = rref(from_rows(ell, rows, k), &piv);
  s.pivots = std::move(piv);
  if (s.pivots.size() != rows.size()) {
    throw NumericalMethodError("eigenspace basis degenerated");
  }
  return s;
}

// Minimal polynomial of the map c -> c * r via reduced Krylov chains,
// accumulated over standard basis starts.
Poly row_action_minpoly(const FpMatrix& r, u32 ell) {
  const std::size_t d = r.rows();
  Poly mp{1};
  std::vector<std::vector<u32>> basis_vecs;
  std::vector<Poly> basis_polys;
  std::vector<std::size_t> basis_pivots;
  for (std::size_t s = 0; s < d && poly_deg(mp) < int(d); ++s) {
    std::vector<u32> w(d, 0);
    w[s] = 1;
    Poly pw{1};
    while (true) {
      // Reduce w against the chain, tracking the polynomial combination.
      for (std::size_t i = 0; i < basis_vecs.size(); ++i) {
        u32 cfac = w[basis_pivots[i]];
        if (!cfac) continue;
        const auto& bv = basis_vecs[i];
        for (std::size_t j = 0; j < d; ++j) {
          w[j] = mod_sub(w[j], mod_mul(cfac, bv[j], ell), ell);
        }
        Poly scaled = basis_polys[i];
        for (auto& x : scaled) x = mod_mul(x, cfac, ell);
        pw = poly_sub(pw, scaled, ell);
      }
      bool zero = std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
      if (zero) {
        mp = poly_lcm(mp, pw, ell);
        break;
      }
      std::size_t piv = 0;
      while (w[piv] == 0) ++piv;
      u32 inv = mod_inv(w[piv], ell);
      std::vector<u32> nv(d);
      for (std::size_t j = 0; j < d; ++j) nv[j] = mod_mul(w[j], inv, ell);
      Poly np = pw;
      for (auto& x : np) x = mod_mul(x, inv, ell);
      basis_vecs.push_back(nv);
      basis_polys.push_back(np);
      basis_pivots.push_back(piv);
      // Advance the chain: w' = (reduced vector) * R, poly' = poly * x.
      w = row_times(nv, r);
      pw = poly_mul(np, Poly{0, 1}, ell);
    }
  }
  return poly_monic(mp, ell);
}

struct ClassLists {
  std::vector<std::vector<int>> members;
};

// Structure matrix of the i-th class sum over F_ell:
//   M[j][l] = #{x in C_i : x^-1 * rep_l in C_j} mod ell.
FpMatrix class_matrix(const ConcreteGroup& g, const ClassData& cd,
                      const ClassLists& lists, std::size_t i, u32 ell) {
  const std::size_t k = cd.reps.size();
  FpMatrix m(ell, k, k);
  for (int x : lists.members[i]) {
    int xi = g.inv(x);
    for (std::size_t l = 0; l < k; ++l) {
      int j = cd.class_of[g.mul(xi, cd.reps[l])];
      u32& cell = m.at(std::size_t(j), l);
      cell = cell + 1 == ell ? 0 : cell + 1;
    }
  }
  return m;
}

DegreeMultiset degrees_with_ell(const ConcreteGroup& g, const ClassData& cd,
                                const ClassLists& lists, u32 ell) {
  const std::size_t k = cd.reps.size();
  const u64 order = g.order();

  std::vector<u32> hinv(k);
  for (std::size_t j = 0; j < k; ++j) hinv[j] = mod_inv(u32(cd.sizes[j] % ell), ell);

  std::vector<Space> spaces;
  {
    std::vector<std::vector<u32>> rows;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<u32> e(k, 0);
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    spaces.push_back(make_space(ell, rows, k));
  }

  // Split by class matrices, cheap classes first.
  std::vector<std::size_t> class_order;
  for (std::size_t i = 1; i < k; ++i) class_order.push_back(i);
  std::sort(class_order.begin(), class_order.end(),
            [&](std::size_t a, std::size_t b) {
              return cd.sizes[a] != cd.sizes[b] ? cd.sizes[a] < cd.sizes[b]
                                                : a < b;
            });

  auto all_split = [&]() {
    return std::all_of(spaces.begin(), spaces.end(),
                       [](const Space& s) { return s.basis.rows() == 1; });
  };

  for (std::size_t i : class_order) {
    if (all_split()) break;
    FpMatrix mt = transpose(class_matrix(g, cd, lists, i, ell));
    std::vector<Space> next;
    for (Space& w : spaces) {
      const std::size_t d = w.basis.rows();
      if (d == 1) {
        next.push_back(std::move(w));
        continue;
      }
      // Restriction r of (v -> v * mt) to the subspace, via pivot columns.
      FpMatrix img = mat_mul(w.basis, mt);
      FpMatrix r(ell, d, d);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) r.at(a, b) = img.at(a, w.pivots[b]);
      }
      if (mat_mul(r, w.basis) != img) {
        throw NumericalMethodError("class matrix left a subspace invariant-less");
      }
      Poly mp = row_action_minpoly(r, ell);
      std::vector<u32> roots;
      for (u32 c = 0; c < ell; ++c) {
        if (poly_eval(mp, c, ell) == 0) roots.push_back(c);
      }
      if (roots.size() <= 1) {
        next.push_back(std::move(w));
        continue;
      }
      std::size_t total = 0;
      for (u32 root : roots) {
        FpMatrix shifted = mat_sub(r, scalar_matrix(ell, d, root));
        auto coord_rows = kernel_basis(transpose(shifted));
        if (coord_rows.empty()) continue;
        std::vector<std::vector<u32>> lifted;
        for (const auto& c : coord_rows) {
          lifted.push_back(row_times(c, w.basis));
        }
        total += lifted.size();
        next.push_back(make_space(ell, lifted, k));
      }
      if (total != d) {
        throw NumericalMethodError("eigenspaces do not fill the subspace");
      }
    }
    spaces = std::move(next);
  }
  if (!all_split()) throw NumericalMethodError("class matrices did not split");

  DegreeMultiset degrees;
  u64 sum_sq = 0;
  for (const Space& w : spaces) {
    std::vector<u32> v = w.basis.row(0);
    if (v[0] == 0) throw NumericalMethodError("eigenvector vanishes at identity");
    u32 scale = mod_inv(v[0], ell);
    for (auto& x : v) x = mod_mul(x, scale, ell);
    u32 t = 0;
    for (std::size_t j = 0; j < k; ++j) {
      t = mod_add(t, mod_mul(mod_mul(v[j], v[std::size_t(cd.inverse_of[j])], ell),
                             hinv[j], ell),
                  ell);
    }
    if (t == 0) throw NumericalMethodError("degenerate norm sum");
    u32 d2 = mod_mul(u32(order % ell), mod_inv(t, ell), ell);
    u32 root = sqrt_mod(d2, ell);
    u64 d = std::min<u32>(root, ell - root);
    degrees[d] += 1;
    sum_sq += d * d;
  }
  if (sum_sq != order || std::accumulate(degrees.begin(), degrees.end(), u64(0),
                                         [](u64 acc, const auto& kv) {
                                           return acc + kv.second;
                                         }) != k) {
    throw NumericalMethodError("degree consistency check failed");
  }
  return degrees;
}

}  // namespace

DegreeMultiset char_degrees(const ConcreteGroup& g, u32 forced_ell) {
  ClassData cd = conjugacy_classes(g);
  const std::size_t k = cd.reps.size();
  if (k > kClassCap) {
    throw CapError("char_degrees: " + std::to_string(k) + " classes exceeds " +
                   std::to_string(kClassCap));
  }
  u64 expo = 1;
  for (int rep : cd.reps) {
    u64 o = element_order(g, rep);
    expo = expo / gcd_u64(expo, o) * o;
  }
  const u64 order = g.order();

  ClassLists lists;
  lists.members.resize(k);
  for (std::size_t id = 0; id < order; ++id) {
    lists.members[std::size_t(cd.class_of[id])].push_back(int(id));
  }

  if (forced_ell) {
    if ((forced_ell - 1) % expo != 0 ||
        u64(forced_ell) * forced_ell <= 4 * order || !is_prime(forced_ell)) {
      throw DomainError("char_degrees: forced_ell violates the requirements");
    }
    return degrees_with_ell(g, cd, lists, forced_ell);
  }

  u32 ell = smallest_dixon_prime(order, expo);
  for (u32 attempt = 0;; ++attempt) {
    try {
      return degrees_with_ell(g, cd, lists, ell);
    } catch (const NumericalMethodError&) {
      if (attempt >= 2) throw;
      u64 next = ell;
      do {
        next += expo;
      } while (!is_prime(next));
      if (next > 0x7fffffffull) throw;
      ell = u32(next);
    }
  }
}

}  // namespace cdg
