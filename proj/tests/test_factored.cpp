#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>

#include "cdg/errors.hpp"
#include "cdg/factored.hpp"

using namespace cdg;

TEST_CASE("exponent arithmetic") {
  Exponent a(3);
  CHECK(a.exact());
  CHECK_FALSE(a.is_zero());
  CHECK(Exponent().is_zero());
  CHECK(a.plus(4).base == 7);
  CHECK(a.plus(Exponent(2)) == Exponent(5));

  auto n = std::make_shared<const FactoredInt>(FactoredInt::from_u64(12));
  Exponent lazy(1);
  lazy.twice.push_back(n);
  CHECK_FALSE(lazy.exact());
  CHECK_FALSE(lazy.is_zero());
  Exponent sum = lazy.plus(lazy);
  CHECK(sum.base == 2);
  CHECK(sum.twice.size() == 2);
  CHECK(lazy == lazy);
  CHECK_FALSE(lazy == Exponent(1));
}

TEST_CASE("factored integers: construction and value") {
  CHECK(FactoredInt::one().is_one());
  CHECK(FactoredInt::one().value() == 1);
  CHECK_THROWS_AS(FactoredInt::from_u64(0), DomainError);

  FactoredInt n = FactoredInt::from_u64(2058);
  CHECK(n.value() == 2058);
  CHECK(n.prime_set() == std::set<u64>{2, 3, 7});
  CHECK(n.factors.at(7) == Exponent(3));
  CHECK(n.str() == "2 * 3 * 7^3");

  FactoredInt m = FactoredInt::from_u64(6).times(FactoredInt::from_u64(343));
  CHECK(m == n);
  CHECK(n.times(1) == n);
  CHECK(n.times(2).value() == 4116);

  FactoredInt big = FactoredInt::one().times_prime_pow(11, Exponent(18));
  CHECK(big.value() == 5559917313492231481ull);
  FactoredInt over = big.times_prime_pow(11, Exponent(1));  // 11^19 > 2^64
  CHECK_FALSE(over.value().has_value());
  CHECK(over.log10() == doctest::Approx(19.0 * std::log10(11.0)));
}

TEST_CASE("factored integers: division") {
  FactoredInt n = FactoredInt::from_u64(2058);
  CHECK(n.div_prime(2).value() == 1029);
  CHECK(n.div_prime(7).value() == 294);
  CHECK(n.div_prime(7).div_prime(7).div_prime(7).value() == 6);
  CHECK_THROWS_AS(n.div_prime(5), DomainError);
  CHECK_THROWS_AS(n.div_prime(2).div_prime(2), DomainError);
}

TEST_CASE("lazy exponents") {
  auto n = std::make_shared<const FactoredInt>(FactoredInt::from_u64(6));
  Exponent e(1);
  e.twice.push_back(n);  // 1 + 2*6 = 13, kept unevaluated

  FactoredInt g = FactoredInt::from_u64(15).times_prime_pow(11, e);
  CHECK_FALSE(g.value().has_value());
  CHECK(std::isinf(g.log10()));
  CHECK(g.prime_set() == std::set<u64>{3, 5, 11});

  // Dividing by 11 lowers the exact part of the lazy exponent.
  FactoredInt h = g.div_prime(11);
  CHECK(h.factors.at(11).base == 0);
  CHECK(h.factors.at(11).twice.size() == 1);
  CHECK(g.str() == "3 * 5 * 11^(1 + 2*[2 * 3])");

  CHECK(g == g);
  CHECK_FALSE(g == FactoredInt::from_u64(15));
}
