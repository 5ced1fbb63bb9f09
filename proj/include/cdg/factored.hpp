#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cdg/fflinalg.hpp"

namespace cdg {

struct FactoredInt;

// Exponent of a prime power.  Deep group towers produce exponents of the form
// 2*n + 1 where n is itself a factored integer far too large to expand, so an
// exponent is a signed exact part plus a sum of lazy 2*value(t) terms:
//
//   value = base + sum_i 2 * value(twice[i])
//
// The represented value is always nonnegative even when base alone is not.
struct Exponent {
  i64 base = 0;
  std::vector<std::shared_ptr<const FactoredInt>> twice;

  Exponent() = default;
  explicit Exponent(i64 b) : base(b) {}

  bool exact() const { return twice.empty(); }
  bool is_zero() const { return exact() && base == 0; }

  Exponent plus(const Exponent& o) const;
  Exponent plus(i64 k) const;

  bool operator==(const Exponent& o) const;
};

// A positive integer kept in factored form: prime -> exponent.
struct FactoredInt {
  std::map<u64, Exponent> factors;

  static FactoredInt one() { return {}; }
  static FactoredInt from_u64(u64 n);

  FactoredInt times(const FactoredInt& o) const;
  FactoredInt times(u64 n) const;
  FactoredInt times_prime_pow(u64 prime, const Exponent& e) const;

  // Divides out one factor of the prime; DomainError when the value is not
  // divisible by it (detectable only for exact exponents).
  FactoredInt div_prime(u64 prime) const;

  std::set<u64> prime_set() const;

  // Exact u64 value when all exponents are exact and the product fits.
  std::optional<u64> value() const;

  // log10 of the value; +infinity when any lazy exponent term is present.
  double log10() const;

  bool is_one() const { return factors.empty(); }
  bool operator==(const FactoredInt& o) const;

  // Human-readable form, e.g. "2 * 3 * 7^3" or "11^(1 + 2n)".
  std::string str() const;
};

}  // namespace cdg
