#include "cdg/extraspecial.hpp"

#include <string>

#include "cdg/gmodule.hpp"

namespace cdg {

namespace {

void check_element(const EGroup& g, const EElement& a) {
  if (a.v.size() != g.n || a.alpha.size() != g.n || a.z >= g.p) {
    throw DescriptorError("extraspecial element has wrong shape");
  }
}

std::vector<u32> vec_add(const std::vector<u32>& a, const std::vector<u32>& b,
                         u32 p) {
  std::vector<u32> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_add(a[i], b[i], p);
  return c;
}

std::vector<u32> vec_scale(u32 k, const std::vector<u32>& a, u32 p) {
  std::vector<u32> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_mul(k, a[i], p);
  return c;
}

}  // namespace

u64 e_order(const EGroup& g) {
  u64 acc = 1;
  for (u32 i = 0; i < 2 * g.n + 1; ++i) {
    if (acc > UINT64_MAX / g.p) throw DomainError("e_order: overflows 64 bits");
    acc *= g.p;
  }
  return acc;
}

EElement e_identity(const EGroup& g) {
  return EElement{std::vector<u32>(g.n, 0), std::vector<u32>(g.n, 0), 0};
}

EElement e_mul(const EGroup& g, const EElement& a, const EElement& b) {
  check_element(g, a);
  check_element(g, b);
  const u32 p = g.p;
  EElement c;
  c.v = vec_add(a.v, b.v, p);
  c.alpha = vec_add(a.alpha, b.alpha, p);
  c.z = mod_add(mod_add(a.z, b.z, p), pairing(b.alpha, a.v, p), p);
  return c;
}

EElement e_inv(const EGroup& g, const EElement& a) {
  check_element(g, a);
  const u32 p = g.p;
  EElement c;
  c.v = vec_scale(p - 1, a.v, p);
  c.alpha = vec_scale(p - 1, a.alpha, p);
  c.z = mod_sub(pairing(a.alpha, a.v, p), a.z, p);
  return c;
}

EElement e_pow(const EGroup& g, const EElement& a, i64 k) {
  check_element(g, a);
  const u32 p = g.p;
  u32 km = u32(((k % i64(p)) + i64(p)) % i64(p));
  // binom(k,2) mod p: k(k-1)/2 with the halving done mod p (p is odd).
  u32 binom = mod_mul(mod_mul(km, mod_sub(km, 1 % p, p), p), mod_inv(2 % p, p), p);
  EElement c;
  c.v = vec_scale(km, a.v, p);
  c.alpha = vec_scale(km, a.alpha, p);
  c.z = mod_add(mod_mul(km, a.z, p), mod_mul(binom, pairing(a.alpha, a.v, p), p), p);
  return c;
}

std::vector<EElement> e_generators(const EGroup& g) {
  std::vector<EElement> gens;
  for (u32 i = 0; i < g.n; ++i) {
    EElement x = e_identity(g);
    x.v[i] = 1;
    gens.push_back(x);
  }
  for (u32 j = 0; j < g.n; ++j) {
    EElement y = e_identity(g);
    y.alpha[j] = 1;
    gens.push_back(y);
  }
  return gens;
}

std::vector<u32> e_encode(const EGroup& g, const EElement& a) {
  check_element(g, a);
  std::vector<u32> w;
  w.reserve(2 * g.n + 1);
  w.insert(w.end(), a.v.begin(), a.v.end());
  w.insert(w.end(), a.alpha.begin(), a.alpha.end());
  w.push_back(a.z);
  return w;
}

EElement e_decode(const EGroup& g, const std::vector<u32>& word) {
  if (word.size() != 2 * std::size_t(g.n) + 1) {
    throw DescriptorError("e_decode: word length mismatch");
  }
  EElement a;
  a.v.assign(word.begin(), word.begin() + g.n);
  a.alpha.assign(word.begin() + g.n, word.begin() + 2 * g.n);
  a.z = word[2 * g.n];
  check_element(g, a);
  return a;
}

// ---------------------------------------------------------------------------

EAut make_eaut(FpMatrix a, FpMatrix b, u32 s) {
  const u32 p = a.p();
  const std::size_t n = a.rows();
  if (b.p() != p || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw DescriptorError("make_eaut: matrix shape mismatch");
  }
  s %= p;
  if (s == 0) throw DescriptorError("make_eaut: s must be nonzero");
  if (mat_mul(b, transpose(a)) != scalar_matrix(p, n, s)) {
    throw DescriptorError("make_eaut: B * A^T != s * I");
  }
  return EAut{std::move(a), std::move(b), s};
}

EAut eaut_from_matrix(const FpMatrix& m) {
  return make_eaut(m, transpose(invert(m)), 1);
}

EAut eaut_sigma(const EGroup& g, u32 x) {
  x %= g.p;
  if (x == 0) throw DomainError("eaut_sigma: x must be nonzero mod p");
  return make_eaut(scalar_matrix(g.p, g.n, x), scalar_matrix(g.p, g.n, x),
                   mod_mul(x, x, g.p));
}

EAut eaut_identity(const EGroup& g) {
  return EAut{FpMatrix::identity(g.p, g.n), FpMatrix::identity(g.p, g.n), 1};
}

EAut eaut_compose(const EAut& first, const EAut& next) {
  return make_eaut(mat_mul(first.a, next.a), mat_mul(first.b, next.b),
                   mod_mul(first.s, next.s, first.a.p()));
}

EElement eaut_apply(const EAut& t, const EElement& a) {
  const u32 p = t.a.p();
  if (a.v.size() != t.a.rows()) throw DescriptorError("eaut_apply: shape mismatch");
  EElement c;
  c.v = row_times(a.v, t.a);
  c.alpha = row_times(a.alpha, t.b);
  c.z = mod_mul(t.s, a.z, p);
  return c;
}

bool eaut_equal(const EAut& a, const EAut& b) {
  return a.a == b.a && a.b == b.b && a.s == b.s;
}

}  // namespace cdg
