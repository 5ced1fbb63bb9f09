#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdg/fflinalg.hpp"

namespace cdg {

class ConcreteGroup;  // groupcore
struct Subgroup;      // groupcore

// Matrix representation of a group over F_p: one invertible dim x dim matrix
// per generator label, acting on row vectors from the right (w = v * M).
struct MatModule {
  u32 p = 2;
  u32 dim = 0;
  std::map<std::string, FpMatrix> action;
  std::string group_ref;

  bool operator==(const MatModule&) const = default;
};

// Contragredient companion of a MatModule: same labels, each matrix the
// inverse-transpose of the primal one, so that pairing(alpha*g, v*g) =
// pairing(alpha, v).
struct DualModule {
  u32 p = 2;
  u32 dim = 0;
  std::map<std::string, FpMatrix> action;
  std::string group_ref;

  bool operator==(const DualModule&) const = default;
};

// Shape and invertibility checks; DescriptorError on failure.
void validate_module(const MatModule& m);

// Natural pairing of a covector with a vector (dot product in dual-basis
// coordinates).
u32 pairing(const std::vector<u32>& alpha, const std::vector<u32>& v, u32 p);

DualModule dual(const MatModule& m);

// Dual action matrix for a single label (avoids inverting every generator).
FpMatrix dual_action_of(const MatModule& m, const std::string& label);

// Echelonized basis of the common fixed space of the labelled generators.
// Fixing the generators fixes the subgroup they generate.
std::vector<std::vector<u32>> fixed_space(const MatModule& m,
                                          const std::vector<std::string>& labels);

struct FittingSplit {
  std::vector<std::vector<u32>> fixed;       // C_V(S)
  std::vector<std::vector<u32>> commutator;  // [V, S]
};

// V = C_V(S) + [V,S] for a group of order coprime to p; CoprimalityError
// when the matrix group generated by the labels has order divisible by p.
FittingSplit fitting_decompose(const MatModule& m,
                               const std::vector<std::string>& labels);

// True when the dual module has no nonzero vector fixed by all the labels.
bool dual_fixed_check(const MatModule& m, const std::vector<std::string>& labels);

struct SpunModule {
  MatModule module;
  std::vector<std::string> group_labels;   // labels of H's generators
  std::vector<std::string> normal_labels;  // labels of generators of N
  u64 seed = 0;
  u32 attempts = 0;
};

// The commutator component V = [F_p[H], N] of the regular module, which has
// C_V(N) = 0 and dimension |H| * (1 - 1/|N|).  Built by spinning a seeded
// pseudo-random vector of V; unlucky seeds that generate a proper submodule
// are retried.  The regular module is handled as a permutation action; dense
// matrices are materialized only on the spun basis.  target_dim_cap of 0
// means the default cap of 4096; CapError when dim V exceeds the cap.
SpunModule module_with_trivial_fixed_points(const ConcreteGroup& H,
                                            const Subgroup& N, u32 p,
                                            u32 target_dim_cap = 0);

// Nontrivial irreducible F_p[Z_m]-module: companion matrix (label "g") of the
// lexicographically first irreducible factor of the m-th cyclotomic
// polynomial over F_p.  Dimension is mul_order(p mod m).
MatModule irreducible_cyclic_module(u64 m, u32 p);

}  // namespace cdg
