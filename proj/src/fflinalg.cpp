#include "cdg/fflinalg.hpp"

#include <algorithm>
#include <string>

namespace cdg {

u32 mod_pow(u32 a, u64 e, u32 p) {
  u64 base = a % p, acc = 1 % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return u32(acc);
}

u32 mod_inv(u32 a, u32 p) {
  a %= p;
  if (a == 0) throw DomainError("mod_inv: zero residue mod " + std::to_string(p));
  // p is prime, so Fermat suffices.
  return mod_pow(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (u64 d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<u64, u32>> factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: zero");
  std::vector<std::pair<u64, u32>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    u32 e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u32 mul_order(u32 x, u32 p) {
  x %= p;
  if (x == 0) throw DomainError("mul_order: zero residue mod " + std::to_string(p));
  u32 ord = 1;
  u32 cur = x;
  while (cur != 1) {
    cur = mod_mul(cur, x, p);
    ++ord;
    if (ord > p) throw DomainError("mul_order: p is not prime");
  }
  return ord;
}

FpScalar element_of_order(u32 p, u32 r) {
  if (r == 0 || (p - 1) % r != 0) {
    throw NoSuchElementError("element_of_order: " + std::to_string(r) +
                             " does not divide " + std::to_string(p) + " - 1");
  }
  for (u32 x = 1; x < p; ++x) {
    if (mul_order(x, p) == r) return FpScalar{x, p};
  }
  throw NoSuchElementError("element_of_order: none found (p not prime?)");
}

// ---------------------------------------------------------------------------

FpMatrix FpMatrix::identity(u32 p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

std::vector<u32> FpMatrix::row(std::size_t r) const {
  return std::vector<u32>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

static void check_same_field(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p())
    throw DescriptorError("matrix field mismatch: p=" + std::to_string(a.p()) +
                          " vs p=" + std::to_string(b.p()));
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) throw DescriptorError("matrix shape mismatch in mat_mul");
  const u32 p = a.p();
  FpMatrix c(p, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      u64 aik = a.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) = u32((c.at(i, j) + aik * b.at(k, j)) % p);
      }
    }
  }
  return c;
}

FpMatrix mat_sub(const FpMatrix& a, const FpMatrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DescriptorError("matrix shape mismatch in mat_sub");
  FpMatrix c(a.p(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = mod_sub(a.at(i, j), b.at(i, j), a.p());
  return c;
}

FpMatrix transpose(const FpMatrix& m) {
  FpMatrix t(m.p(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

FpMatrix scalar_matrix(u32 p, std::size_t n, u32 c) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c % p;
  return m;
}

std::vector<u32> row_times(const std::vector<u32>& v, const FpMatrix& m) {
  if (v.size() != m.rows()) throw DescriptorError("row_times: length mismatch");
  const u32 p = m.p();
  std::vector<u32> out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    u64 vi = v[i];
    if (!vi) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] = u32((out[j] + vi * m.at(i, j)) % p);
    }
  }
  return out;
}

u32 dot(const std::vector<u32>& a, const std::vector<u32>& b, u32 p) {
  if (a.size() != b.size()) throw DescriptorError("dot: length mismatch");
  u64 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + u64(a[i]) * b[i]) % p;
  return u32(acc);
}

FpMatrix rref(FpMatrix m, std::vector<std::size_t>* pivots) {
  const u32 p = m.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    }
    u32 inv = mod_inv(m.at(r, c), p);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = mod_mul(m.at(r, j), inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      u32 f = m.at(i, c);
      if (!f) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) = mod_sub(m.at(i, j), mod_mul(f, m.at(r, j), p), p);
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const FpMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<std::vector<u32>> kernel_basis(const FpMatrix& m) {
  std::vector<std::size_t> piv;
  FpMatrix r = rref(m, &piv);
  const u32 p = m.p();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<u32>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<u32> v(m.cols(), 0);
    v[f] = 1 % p;
    for (std::size_t k = 0; k < piv.size(); ++k) {
      v[piv[k]] = mod_neg(r.at(k, f), p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<u32>> row_space_basis(const FpMatrix& m) {
  std::vector<std::size_t> piv;
  FpMatrix r = rref(m, &piv);
  std::vector<std::vector<u32>> rows;
  for (std::size_t i = 0; i < piv.size(); ++i) rows.push_back(r.row(i));
  return rows;
}

FpMatrix invert(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw DescriptorError("invert: matrix not square");
  const u32 p = m.p();
  const std::size_t n = m.rows();
  FpMatrix a = m;
  FpMatrix inv = FpMatrix::identity(p, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a.at(sel, c) == 0) ++sel;
    if (sel == n) throw SingularMatrixError("invert: singular matrix");
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(sel, j), a.at(c, j));
        std::swap(inv.at(sel, j), inv.at(c, j));
      }
    }
    u32 f = mod_inv(a.at(c, c), p);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) = mod_mul(a.at(c, j), f, p);
      inv.at(c, j) = mod_mul(inv.at(c, j), f, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      u32 g = a.at(i, c);
      if (!g) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = mod_sub(a.at(i, j), mod_mul(g, a.at(c, j), p), p);
        inv.at(i, j) = mod_sub(inv.at(i, j), mod_mul(g, inv.at(c, j), p), p);
      }
    }
  }
  return inv;
}

FpMatrix from_rows(u32 p, const std::vector<std::vector<u32>>& rows,
                   std::size_t cols) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DescriptorError("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % p;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_deg(const Poly& f) { return int(f.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b, u32 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    u32 x = i < a.size() ? a[i] : 0;
    u32 y = i < b.size() ? b[i] : 0;
    c[i] = mod_add(x, y, p);
  }
  poly_trim(c);
  return c;
}

Poly poly_sub(const Poly& a, const Poly& b, u32 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    u32 x = i < a.size() ? a[i] : 0;
    u32 y = i < b.size() ? b[i] : 0;
    c[i] = mod_sub(x, y, p);
  }
  poly_trim(c);
  return c;
}

Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = u32((c[i + j] + u64(a[i]) * b[j]) % p);
    }
  }
  poly_trim(c);
  return c;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, u32 p) {
  if (b.empty()) throw DomainError("poly_divmod: division by zero polynomial");
  Poly rem = a;
  poly_trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  Poly quot(rem.size() - b.size() + 1, 0);
  u32 lead_inv = mod_inv(b.back(), p);
  while (rem.size() >= b.size()) {
    u32 f = mod_mul(rem.back(), lead_inv, p);
    std::size_t shift = rem.size() - b.size();
    quot[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[shift + j] = mod_sub(rem[shift + j], mod_mul(f, b[j], p), p);
    }
    poly_trim(rem);  // the top term cancels exactly, so rem strictly shrinks
  }
  poly_trim(quot);
  return {quot, rem};
}

Poly poly_mod(const Poly& a, const Poly& b, u32 p) {
  return poly_divmod(a, b, p).second;
}

Poly poly_monic(Poly f, u32 p) {
  poly_trim(f);
  if (f.empty()) return f;
  u32 inv = mod_inv(f.back(), p);
  for (auto& c : f) c = mod_mul(c, inv, p);
  return f;
}

Poly poly_gcd(Poly a, Poly b, u32 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, p);
}

Poly poly_lcm(const Poly& a, const Poly& b, u32 p) {
  if (a.empty() || b.empty()) return {};
  Poly g = poly_gcd(a, b, p);
  Poly q = poly_divmod(a, g, p).first;
  return poly_monic(poly_mul(q, b, p), p);
}

u32 poly_eval(const Poly& f, u32 x, u32 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return u32(acc);
}

Poly poly_xpow_mod(u64 e, const Poly& f, u32 p) {
  Poly base = poly_mod(Poly{0, 1}, f, p);
  Poly acc = poly_mod(Poly{1}, f, p);
  while (e) {
    if (e & 1) acc = poly_mod(poly_mul(acc, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return acc;
}

}  // namespace cdg
