#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cdg/errors.hpp"
#include "cdg/tower.hpp"

using namespace cdg;

TEST_CASE("name round trips") {
  for (GroupKind k : {GroupKind::SevenCube, GroupKind::ThreePrime, GroupKind::Step,
                      GroupKind::Cyclic, GroupKind::Extraspecial}) {
    CHECK(kind_from_name(kind_name(k)) == k);
  }
  for (StepMode m : {StepMode::Auto, StepMode::Explicit, StepMode::Symbolic}) {
    CHECK(mode_from_name(mode_name(m)) == m);
  }
  for (Strategy s : {Strategy::ThreePrimes, Strategy::FreshPrimes}) {
    CHECK(strategy_from_name(strategy_name(s)) == s);
  }
  CHECK_THROWS_AS(kind_from_name("nope"), DescriptorError);
  CHECK_THROWS_AS(mode_from_name("nope"), DescriptorError);
  CHECK_THROWS_AS(strategy_from_name("nope"), DescriptorError);
}

TEST_CASE("fixtures") {
  TowerLevel c12 = fixture_cyclic(12);
  CHECK(c12.group.kind == GroupKind::Cyclic);
  CHECK(c12.cert.order.value() == 12);
  CHECK(c12.cert.primes == std::vector<u64>{2, 3});
  CHECK(c12.cert.fitting_height == 1);
  CHECK(c12.cert.sylow_tower);
  CHECK(c12.cert.min_normal_order == 2);
  CHECK_FALSE(c12.cert.min_normal_unique);
  CHECK(c12.cert.cd_support == std::vector<u64>{1});
  CHECK(c12.cert.div_rules.empty());
  CHECK(c12.cert.cdg);

  CHECK(fixture_cyclic(1).cert.fitting_height == 0);
  CHECK(fixture_cyclic(1).cert.min_normal_order == 0);
  CHECK(fixture_cyclic(3).cert.min_normal_unique);
  CHECK_THROWS_AS(fixture_cyclic(0), DescriptorError);

  TowerLevel es = fixture_extraspecial(3, 1);
  CHECK(es.group.kind == GroupKind::Extraspecial);
  CHECK(es.cert.order.value() == 27);
  CHECK(es.cert.cd_support == std::vector<u64>{1, 3});
  CHECK_FALSE(es.cert.cdg);
  CHECK(es.cert.min_normal_order == 3);
  CHECK(es.cert.min_normal_unique);
  CHECK(es.cert.fitting_height == 1);

  CHECK(fixture_extraspecial(3, 2).cert.cd_support == std::vector<u64>{1, 9});
  CHECK_THROWS_AS(fixture_extraspecial(2, 1), DescriptorError);
  CHECK_THROWS_AS(fixture_extraspecial(9, 1), DescriptorError);
  CHECK_THROWS_AS(fixture_extraspecial(3, 0), DescriptorError);
  CHECK_THROWS_AS(fixture_extraspecial(3, 20), DomainError);
}

TEST_CASE("base of order 2058") {
  TowerLevel lvl = build_base_seven_cube();
  CHECK(lvl.group.kind == GroupKind::SevenCube);
  CHECK(lvl.group.p == 7);
  CHECK(lvl.group.r == 6);
  CHECK(lvl.group.x == 5);
  CHECK(lvl.group.dim.value() == 1);

  const Certificate& c = lvl.cert;
  CHECK(c.order == FactoredInt::from_u64(2058));
  CHECK(c.primes == std::vector<u64>{2, 3, 7});
  CHECK(c.cd_support == std::vector<u64>{1, 6, 21});
  CHECK(c.fitting_height == 2);
  CHECK(c.sylow_tower);
  CHECK(c.min_normal_order == 7);
  CHECK(c.min_normal_unique);
  CHECK(c.cdg);
  REQUIRE(c.div_rules.size() == 2);
  CHECK(c.div_rules[0].family == "module");
  CHECK(c.div_rules[0].divisors == std::vector<u64>{2, 3});
  CHECK(c.div_rules[1].family == "faithful");
  CHECK(c.div_rules[1].divisors == std::vector<u64>{3, 7});

  CHECK_THROWS_AS(build_base_seven_cube(100), CapError);
}

TEST_CASE("three-prime bases") {
  TowerLevel lvl = build_base_three_prime(7, 43, 3);
  CHECK(lvl.group.kind == GroupKind::ThreePrime);
  CHECK(lvl.group.p1 == 7);
  CHECK(lvl.group.p2 == 43);
  CHECK(lvl.group.r == 3);
  CHECK(lvl.group.x == 6);  // order 3 mod 43
  CHECK(lvl.group.dim.value() == 1);

  const Certificate& c = lvl.cert;
  CHECK(c.order.value() == 1669647);  // 43^3 * 7 * 3
  CHECK(c.primes == std::vector<u64>{3, 7, 43});
  CHECK(c.cd_support == std::vector<u64>{1, 21, 129});
  CHECK(c.fitting_height == 2);
  CHECK(c.sylow_tower);
  CHECK(c.min_normal_order == 43);
  CHECK(c.min_normal_unique);
  CHECK(c.cdg);
  REQUIRE(c.div_rules.size() == 2);
  CHECK(c.div_rules[0].divisors == std::vector<u64>{3, 7});
  CHECK(c.div_rules[1].divisors == std::vector<u64>{3, 43});

  // 13 = -1 mod 7: the module is 2-dimensional.
  TowerLevel big = build_base_three_prime(7, 13, 3);
  CHECK(big.group.dim.value() == 2);
  CHECK(big.cert.order.value() == 7797153);  // 13^5 * 7 * 3
  CHECK(big.cert.cd_support == std::vector<u64>{1, 21, 507});
  CHECK(big.cert.cdg);
}

TEST_CASE("three-prime base validation") {
  CHECK_THROWS_AS(build_base_three_prime(6, 43, 3), DescriptorError);
  CHECK_THROWS_AS(build_base_three_prime(7, 42, 3), DescriptorError);
  CHECK_THROWS_AS(build_base_three_prime(7, 43, 4), DescriptorError);
  CHECK_THROWS_AS(build_base_three_prime(7, 7, 3), DescriptorError);
  CHECK_THROWS_AS(build_base_three_prime(3, 13, 3), DescriptorError);
  CHECK_THROWS_AS(build_base_three_prime(7, 2, 3), DescriptorError);
  CHECK_THROWS_AS(build_base_three_prime(7, 43, 2), DescriptorError);
  CHECK_THROWS_AS(build_base_three_prime(7, 43, 5), DescriptorError);  // 5 | 42 fails
}

TEST_CASE("step validation") {
  TowerLevel c3 = fixture_cyclic(3);
  CHECK_THROWS_AS(build_step(c3, 4, 3, StepMode::Symbolic), DescriptorError);
  CHECK_THROWS_AS(build_step(c3, 2, 3, StepMode::Symbolic), DescriptorError);
  CHECK_THROWS_AS(build_step(c3, 11, 4, StepMode::Symbolic), DescriptorError);
  CHECK_THROWS_AS(build_step(c3, 11, 3, StepMode::Symbolic), DescriptorError);
  CHECK_THROWS_AS(build_step(c3, 11, 2, StepMode::Symbolic), DescriptorError);
  CHECK_THROWS_AS(build_step(fixture_cyclic(11), 11, 5, StepMode::Symbolic),
                  CoprimalityError);
  CHECK_THROWS_AS(build_step(fixture_cyclic(5), 11, 5, StepMode::Symbolic),
                  DescriptorError);
  CHECK_THROWS_AS(build_step(fixture_cyclic(1), 11, 5, StepMode::Symbolic),
                  DescriptorError);
}

TEST_CASE("explicit step over a small fixture") {
  TowerLevel lvl = build_step(fixture_cyclic(3), 11, 5, StepMode::Auto);
  CHECK(lvl.group.kind == GroupKind::Step);
  CHECK(lvl.group.p == 11);
  CHECK(lvl.group.r == 5);
  CHECK(lvl.group.x == 3);  // order 5 mod 11
  CHECK(lvl.group.q == 3);
  CHECK(lvl.group.dim.value() == 2);
  REQUIRE(lvl.group.inner);
  CHECK(lvl.group.inner->kind == GroupKind::Cyclic);
  REQUIRE(lvl.group.module);  // auto resolves to explicit at this size
  CHECK(lvl.group.module->module.p == 11);
  CHECK(lvl.group.module->module.dim == 2);
  CHECK(lvl.group.module->group_labels == std::vector<std::string>{"g0"});
  CHECK(lvl.group.module->normal_labels == std::vector<std::string>{"n0"});

  const Certificate& c = lvl.cert;
  CHECK(c.order.value() == 2415765);  // 11^5 * 3 * 5
  CHECK(c.primes == std::vector<u64>{3, 5, 11});
  CHECK(c.fitting_height == 2);
  CHECK(c.sylow_tower);
  CHECK(c.min_normal_order == 11);
  CHECK(c.min_normal_unique);
  CHECK(c.cd_support.empty());
  CHECK(c.cdg);
  REQUIRE(c.div_rules.size() == 2);
  CHECK(c.div_rules[0].divisors == std::vector<u64>{3, 5});
  CHECK(c.div_rules[1].divisors == std::vector<u64>{5, 11});

  // The symbolic form of the same step carries no module and cannot be
  // enumerated directly.
  TowerLevel sym = build_step(fixture_cyclic(3), 11, 5, StepMode::Symbolic);
  CHECK_FALSE(sym.group.module);
  CHECK(sym.cert == lvl.cert);
  CHECK_THROWS_AS(build_concrete(sym.group), DescriptorError);
}

TEST_CASE("symbolic step on the order-2058 base") {
  TowerLevel base = build_base_seven_cube();
  TowerLevel lvl = build_step(base, 11, 5, StepMode::Symbolic);
  CHECK(lvl.group.x == 3);
  CHECK(lvl.group.q == 7);
  CHECK(lvl.group.dim.value() == 1764);  // 2058 * 6 / 7

  const Certificate& c = lvl.cert;
  CHECK_FALSE(c.order.value().has_value());
  CHECK(c.order.factors.at(11) == Exponent(3529));
  CHECK(c.order.factors.at(2) == Exponent(1));
  CHECK(c.order.factors.at(7) == Exponent(3));
  CHECK(c.primes == std::vector<u64>{2, 3, 5, 7, 11});
  CHECK(c.fitting_height == 3);
  CHECK(c.sylow_tower);
  CHECK(c.min_normal_order == 11);
  CHECK(c.cdg);

  double predicted = predict_step_log10(base, 11, 5);
  CHECK(predicted == doctest::Approx(c.order.log10()).epsilon(1e-9));
  CHECK(predicted ==
        doctest::Approx(std::log10(2058.0) + std::log10(5.0) +
                        3529.0 * std::log10(11.0)));
}

TEST_CASE("fresh prime scheduling") {
  CHECK(next_fresh_primes({}) == std::pair<u64, u64>{7, 3});
  CHECK(next_fresh_primes({2, 3, 7}) == std::pair<u64, u64>{11, 5});
  CHECK(next_fresh_primes({3, 7, 13}) == std::pair<u64, u64>{11, 5});
  CHECK(next_fresh_primes({2, 3, 5, 7, 11}) == std::pair<u64, u64>{53, 13});

  CHECK_THROWS_AS(predict_step_log10(fixture_cyclic(1), 11, 5), DescriptorError);
}

TEST_CASE("fresh-primes tower") {
  TowerLevel base = build_base_seven_cube();
  Tower t = build_tower(base, 2, Strategy::FreshPrimes, StepMode::Symbolic);
  REQUIRE(t.size() == 3);
  CHECK(t[1].group.p == 11);
  CHECK(t[1].group.r == 5);
  CHECK(t[2].group.p == 53);
  CHECK(t[2].group.r == 13);
  CHECK(t[1].cert.fitting_height == 3);
  CHECK(t[2].cert.fitting_height == 4);
  CHECK(t[2].cert.sylow_tower);
  CHECK(t[2].cert.primes == std::vector<u64>{2, 3, 5, 7, 11, 13, 53});

  // Beyond one step the 53-exponent is only known in factored form.
  const Exponent& e53 = t[2].cert.order.factors.at(53);
  CHECK_FALSE(e53.exact());
  CHECK(e53.base == 1);
  REQUIRE(e53.twice.size() == 1);
  CHECK(e53.twice[0]->factors.at(11) == Exponent(3528));
  CHECK(std::isinf(t[2].cert.order.log10()));
}

TEST_CASE("three-primes tower") {
  TowerLevel base = build_base_three_prime(7, 13, 3);
  Tower t = build_tower(base, 4, Strategy::ThreePrimes, StepMode::Symbolic);
  REQUIRE(t.size() == 5);

  const std::vector<u64> min_normals{13, 7, 13, 7, 13};
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i].cert.min_normal_order == min_normals[i]);
    CHECK(t[i].cert.fitting_height == 2 + i);
    CHECK(t[i].cert.primes == std::vector<u64>{3, 7, 13});
    CHECK(t[i].cert.cdg);
  }
  CHECK(t[0].cert.sylow_tower);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK_FALSE(t[i].cert.sylow_tower);

  // First step: dim V = 7797153 * 12 / 13 and the 7-exponent is exact.
  CHECK(t[1].group.dim.value() == 7197372);
  CHECK(t[1].cert.order.factors.at(7) == Exponent(14394746));
  CHECK_FALSE(t[1].cert.order.value().has_value());

  // Second step: the 13-exponent becomes lazy.
  const Exponent& e13 = t[2].cert.order.factors.at(13);
  CHECK_FALSE(e13.exact());
  CHECK(e13.base == 6);

  CHECK_THROWS_AS(build_tower(build_base_seven_cube(), 1, Strategy::ThreePrimes),
                  DescriptorError);
}

TEST_CASE("cross-validation of enumerable levels") {
  cross_validate(fixture_cyclic(12));
  cross_validate(fixture_cyclic(1));
  cross_validate(fixture_extraspecial(3, 1));
  cross_validate(fixture_extraspecial(3, 2));
  cross_validate(build_base_seven_cube());

  // Tampered certificates are caught.
  TowerLevel lvl = build_base_seven_cube();
  lvl.cert.fitting_height = 3;
  CHECK_THROWS_AS(cross_validate(lvl), CertificationError);

  lvl = build_base_seven_cube();
  lvl.cert.cd_support = {1, 6, 22};
  CHECK_THROWS_AS(cross_validate(lvl), CertificationError);

  lvl = build_base_seven_cube();
  lvl.cert.min_normal_order = 3;
  CHECK_THROWS_AS(cross_validate(lvl), CertificationError);

  lvl = build_base_seven_cube();
  lvl.cert.order = lvl.cert.order.times(2);
  CHECK_THROWS_AS(cross_validate(lvl), CertificationError);

  lvl = build_base_seven_cube();
  lvl.cert.div_rules[0].divisors = {2, 3, 7};
  CHECK_THROWS_AS(cross_validate(lvl), CertificationError);
}

TEST_CASE("cross-validation of an explicit step") {
  TowerLevel lvl = build_step(fixture_cyclic(3), 11, 5, StepMode::Auto);
  REQUIRE(lvl.group.module);
  cross_validate(lvl);

  // The order check fires right after enumeration, so tampering it keeps
  // the negative case cheap at this size.
  TowerLevel bad = lvl;
  bad.cert.order = bad.cert.order.times(2);
  CHECK_THROWS_AS(cross_validate(bad), CertificationError);
}
