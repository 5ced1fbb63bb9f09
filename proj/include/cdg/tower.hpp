#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cdg/factored.hpp"
#include "cdg/fflinalg.hpp"
#include "cdg/gmodule.hpp"
#include "cdg/groupcore.hpp"

namespace cdg {

// ---------------------------------------------------------------------------
// Towers of composite-degree groups.
//
// A level is a group of the shape G = E(V) ⋊ (H × Z_r), where V is a module
// over F_p on which the scaling factor Z_r acts by an x of multiplicative
// order r and H acts with C_V(N) = 0 for a minimal normal subgroup N of H.
// Each level ships with a certificate of its structural facts (order, prime
// set, Fitting height, minimal normal subgroup, degree divisors, the
// composite-degree property).  Small levels can be rebuilt by enumeration and
// the certificate checked field by field; large levels carry certificates
// justified by the construction itself.
// ---------------------------------------------------------------------------

enum class GroupKind {
  SevenCube,     // E(F_7) ⋊ Z_6, scaling by 5
  ThreePrime,    // E(V) ⋊ (Z_p1 × Z_r), V the irreducible F_p2[Z_p1]-module
  Step,          // E(V) ⋊ (H × Z_r), H the previous level, V spun from F_p[H]
  Cyclic,        // fixture: Z_m
  Extraspecial,  // fixture: E(F_p^n)
};

enum class StepMode { Auto, Explicit, Symbolic };

enum class Strategy { ThreePrimes, FreshPrimes };

std::string kind_name(GroupKind k);
GroupKind kind_from_name(const std::string& s);
std::string mode_name(StepMode m);
StepMode mode_from_name(const std::string& s);
std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& s);

// Construction descriptor.  Which fields are meaningful depends on the kind;
// unused fields stay zero.
struct StructuralGroup {
  GroupKind kind = GroupKind::SevenCube;

  u64 p1 = 0, p2 = 0;  // three-prime bases: |H| = p1, field F_p2
  u64 p = 0;           // characteristic of E(V)'s field at this level
  u64 r = 0;           // order of the scaling factor
  u32 x = 0;           // scaling residue mod p, of multiplicative order r
  u64 q = 0;           // steps: order of the inner level's minimal normal N
  FactoredInt dim;     // dim V

  std::shared_ptr<const StructuralGroup> inner;  // steps: the acting level
  std::shared_ptr<const SpunModule> module;      // explicit steps only

  u64 cyclic_m = 0;        // cyclic fixture
  u64 es_p = 0, es_n = 0;  // extraspecial fixture
};

// Every irreducible character degree in the named family is divisible by
// every listed prime.  Families: "module" for the degrees coming from
// characters nontrivial on E/E' but trivial on E', and "faithful" for those
// nontrivial on E'.
struct DivRule {
  std::string family;
  std::vector<u64> divisors;  // distinct primes, ascending

  bool operator==(const DivRule&) const = default;
};

struct Certificate {
  FactoredInt order;
  std::vector<u64> primes;      // primes dividing the order, ascending
  u32 fitting_height = 0;
  bool sylow_tower = false;     // claimed only when certified; false = unknown
  u64 min_normal_order = 0;
  bool min_normal_unique = false;
  std::vector<u64> cd_support;  // exact degree support when known; else empty
  std::vector<DivRule> div_rules;
  bool cdg = false;             // 1 is the only prime-power degree

  bool operator==(const Certificate&) const = default;
};

struct TowerLevel {
  StructuralGroup group;
  Certificate cert;
};

using Tower = std::vector<TowerLevel>;

// ---------------------------------------------------------------------------
// Bases and fixtures
// ---------------------------------------------------------------------------

// Certificates for the fixture kinds (derived from classical facts, not by
// enumeration).  Note an abelian group satisfies the composite-degree
// condition vacuously, while E(F_p^n) has degree p^n and never does.
TowerLevel fixture_cyclic(u64 m);
TowerLevel fixture_extraspecial(u32 p, u32 n);

// E(F_7) ⋊ Z_6 of order 2058, scaling by 5.  The certificate is computed by
// enumeration: degrees, Fitting data, minimal normal subgroups, and the
// degree-divisor families from the degrees of G, G/E' and G/E.
TowerLevel build_base_seven_cube(u64 cap = 0);

// E(V) ⋊ (Z_p1 × Z_r) over F_p2 with V the irreducible F_p2[Z_p1]-module of
// dimension n = mul_order(p2 mod p1).  Degree support {1, r*p1, r*p2^n}.
// The module facts (irreducibility of the action, trivial fixed spaces of V
// and its dual) are verified by rank computations; DescriptorError for
// invalid parameters (p1, p2, r must be distinct primes, p2 odd, r odd and
// dividing p2 - 1).
TowerLevel build_base_three_prime(u64 p1, u64 p2, u64 r);

// ---------------------------------------------------------------------------
// Steps
// ---------------------------------------------------------------------------

// Next level G' = E(V') ⋊ (G × Z_r) over F_p, where V' = [F_p[G], N] for a
// minimal normal subgroup N of the previous level G, of order q:
//
//   dim V' = |G| (q - 1) / q      |G'| = p^(2 dim V' + 1) |G| r
//
// Explicit mode enumerates G, spins V' and verifies C_{V'}(N) = 0 and the
// dual fixed-point condition by rank; symbolic mode derives the same facts
// from the construction (the commutator component of a coprime action has
// trivial fixed points, and so does its dual).  Auto picks explicit exactly
// when G fits under the enumeration cap and dim V' under the spinning cap.
// New degree families: "module" divisible by {q, r}, "faithful" by {p, r};
// p, q, r must be distinct (p, r odd primes, r | p - 1), which keeps both
// families composite.
TowerLevel build_step(const TowerLevel& prev, u64 p, u64 r,
                      StepMode mode = StepMode::Auto, u64 cap = 0);

// Iterates build_step.  ThreePrimes requires a three-prime base and
// alternates the characteristic between p2 and p1, reusing r (the prime set
// never grows, but the normal Sylow tower is no longer certified).
// FreshPrimes picks (p, r) = next_fresh_primes at every step, which preserves
// the certified Sylow tower.  The result contains the base at index 0.
Tower build_tower(const TowerLevel& base, u32 steps, Strategy strategy,
                  StepMode mode = StepMode::Auto, u64 cap = 0);

// Smallest odd prime r outside `used`, then the smallest prime p = 1 (mod r)
// also outside `used`.
std::pair<u64, u64> next_fresh_primes(const std::vector<u64>& used);

// log10 of the order build_step(prev, p, r) would certify; +infinity when
// the previous order is already beyond exact range.
double predict_step_log10(const TowerLevel& prev, u64 p, u64 r);

// ---------------------------------------------------------------------------
// Enumeration and cross-validation
// ---------------------------------------------------------------------------

// Enumerated realization of a descriptor.  CapError when the order exceeds
// the cap (0 = default_enumeration_cap()); DescriptorError for a symbolic
// step, whose module was never materialized.
ConcreteGroup build_concrete(const StructuralGroup& sg, u64 cap = 0);

// Rebuilds the level by enumeration and checks the certificate field by
// field: order, prime set, degree support and the composite-degree flag,
// degree-divisor families (via the degrees of G, G/E' and G/E), Fitting
// height, Sylow tower (only when claimed), minimal normal subgroups, and the
// embedded module's fixed-point conditions.  CertificationError names the
// first failing field.  CapError when the group does not fit under the cap.
// Degree checks that overflow the class cap are skipped unless the
// certificate pins an exact support.
void cross_validate(const TowerLevel& level, u64 cap = 0);

}  // namespace cdg
