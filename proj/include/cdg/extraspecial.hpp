#pragma once

#include <string>
#include <vector>

#include "cdg/fflinalg.hpp"

namespace cdg {

// ---------------------------------------------------------------------------
// The extraspecial-type group E(V) attached to V = F_p^n for odd p.  Elements
// are triples (v, alpha, z) with v in V, alpha in the dual space V*, z in F_p:
//
//   (v1,a1,z1) * (v2,a2,z2) = (v1+v2, a1+a2, z1+z2+a2(v1))
//
// The center and derived subgroup both equal {(0,0,z)}, elements have order
// dividing p, and |E| = p^(2n+1).
// ---------------------------------------------------------------------------

struct EGroup {
  u32 p = 3;
  u32 n = 1;
  bool operator==(const EGroup&) const = default;
};

struct EElement {
  std::vector<u32> v;      // coordinates in V
  std::vector<u32> alpha;  // coordinates in V* (dual basis)
  u32 z = 0;
  bool operator==(const EElement&) const = default;
};

// p^(2n+1); DomainError when it does not fit in 64 bits.
u64 e_order(const EGroup& g);

EElement e_identity(const EGroup& g);
EElement e_mul(const EGroup& g, const EElement& a, const EElement& b);
EElement e_inv(const EGroup& g, const EElement& a);
// a^k for any integer k, via (kv, ka, kz + binom(k,2) * a(v)).
EElement e_pow(const EGroup& g, const EElement& a, i64 k);

// Standard generators: x_i = (e_i,0,0) and y_j = (0,l_j,0).  Their pairwise
// commutators generate the center: [x_i, y_j] = (0,0,delta_ij).
std::vector<EElement> e_generators(const EGroup& g);

// Flat encoding [v | alpha | z] of length 2n+1, used as the element word for
// enumeration-based group computations.
std::vector<u32> e_encode(const EGroup& g, const EElement& a);
EElement e_decode(const EGroup& g, const std::vector<u32>& word);

// ---------------------------------------------------------------------------
// Automorphisms of E(V) of the shape (v,a,z) -> (vA, aB, sz).  Such a map is
// an automorphism exactly when B * A^T = s * I, which the constructor checks.
// ---------------------------------------------------------------------------

struct EAut {
  FpMatrix a;  // action on V (rows act from the left: v -> vA)
  FpMatrix b;  // action on V*
  u32 s = 1;   // action on the center
};

// Throws DescriptorError unless B * A^T = s * I with s nonzero.
EAut make_eaut(FpMatrix a, FpMatrix b, u32 s);

// Module action extended to E(V): v -> vM, alpha -> alpha * (M^-1)^T, z -> z.
// Preserves the pairing, so it fixes the center pointwise.
EAut eaut_from_matrix(const FpMatrix& m);

// The scaling automorphism sigma_x: (v,a,z) -> (xv, xa, x^2 z).
EAut eaut_sigma(const EGroup& g, u32 x);

EAut eaut_identity(const EGroup& g);

// Apply first, then next: compose(first, next) maps e to next(first(e)).
EAut eaut_compose(const EAut& first, const EAut& next);

EElement eaut_apply(const EAut& t, const EElement& a);

bool eaut_equal(const EAut& a, const EAut& b);

}  // namespace cdg
