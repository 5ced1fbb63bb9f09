#pragma once

#include <map>
#include <vector>

#include "cdg/fflinalg.hpp"
#include "cdg/groupcore.hpp"

namespace cdg {

// degree -> multiplicity
using DegreeMultiset = std::map<u64, u64>;

std::vector<u64> degree_support(const DegreeMultiset& d);

// 1 is not a prime power.
bool is_prime_power(u64 n);

// Composite-degree condition: 1 is the only prime-power degree.
bool is_cdg(const DegreeMultiset& d);
bool is_cdg_support(const std::vector<u64>& support);

// Largest class count char_degrees will process.
inline constexpr std::size_t kClassCap = 300;

// Smallest prime ell with ell = 1 mod exponent and ell > 2 sqrt(order); such
// an ell never divides the order.
u32 smallest_dixon_prime(u64 order, u64 exponent);

// Square root mod an odd prime; NoSuchElementError when a is not a residue.
u32 sqrt_mod(u32 a, u32 ell);

// Irreducible character degrees, with multiplicity, by the class-algebra
// method: character data is recovered from common eigenvectors of class-sum
// structure matrices over F_ell, then each degree from the orthogonality
// relation and a square root mod ell.  Verifies sum(d^2) = |G| and that the
// number of degrees equals the class count.  A nonzero forced_ell overrides
// the choice of ell (it must still satisfy the conditions above); otherwise
// a failed run retries with the next valid ell, up to 3 attempts.
// CapError when the class count exceeds kClassCap.
DegreeMultiset char_degrees(const ConcreteGroup& g, u32 forced_ell = 0);

}  // namespace cdg
