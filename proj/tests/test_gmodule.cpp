#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdg/errors.hpp"
#include "cdg/gmodule.hpp"
#include "cdg/groupcore.hpp"

using namespace cdg;

namespace {

FpMatrix mat_pow_naive(FpMatrix m, u64 k) {
  FpMatrix acc = FpMatrix::identity(m.p(), m.rows());
  for (u64 i = 0; i < k; ++i) acc = mat_mul(acc, m);
  return acc;
}

MatModule swap_module(u32 p) {
  MatModule m;
  m.p = p;
  m.dim = 2;
  m.action["s"] = from_rows(p, {{0, 1}, {1, 0}}, 2);
  return m;
}

}  // namespace

TEST_CASE("irreducible cyclic modules") {
  MatModule m7 = irreducible_cyclic_module(7, 2);
  CHECK(m7.p == 2);
  CHECK(m7.dim == 3);  // order of 2 mod 7
  validate_module(m7);
  FpMatrix g = m7.action.at("g");
  CHECK_FALSE(g == FpMatrix::identity(2, 3));
  CHECK(mat_pow_naive(g, 7) == FpMatrix::identity(2, 3));

  CHECK(irreducible_cyclic_module(43, 7).dim == 6);
  CHECK(irreducible_cyclic_module(13, 7).dim == 12);
  CHECK(irreducible_cyclic_module(11, 5).dim == 5);

  // 43 = 1 mod 7: linear factors; the first companion is the root 41 = -2.
  MatModule lin = irreducible_cyclic_module(7, 43);
  CHECK(lin.dim == 1);
  CHECK(lin.action.at("g").at(0, 0) == 41);
  CHECK(mul_order(41, 43) == 7);

  CHECK_THROWS_AS(irreducible_cyclic_module(1, 5), DomainError);
  CHECK_THROWS_AS(irreducible_cyclic_module(6, 3), CoprimalityError);
}

TEST_CASE("validation rejects bad shapes") {
  MatModule bad;
  bad.p = 5;
  bad.dim = 2;
  bad.action["g"] = FpMatrix(5, 2, 3);
  CHECK_THROWS_AS(validate_module(bad), DescriptorError);

  bad.action["g"] = FpMatrix(5, 2, 2);  // zero matrix
  CHECK_THROWS_AS(validate_module(bad), SingularMatrixError);
}

TEST_CASE("pairing and duals") {
  MatModule m = irreducible_cyclic_module(7, 2);
  DualModule d = dual(m);
  CHECK(d.dim == m.dim);
  CHECK(d.action.at("g") == dual_action_of(m, "g"));

  FpMatrix g = m.action.at("g");
  FpMatrix gd = d.action.at("g");
  std::vector<u32> alpha{1, 0, 1}, v{0, 1, 1};
  CHECK(pairing(row_times(alpha, gd), row_times(v, g), 2) ==
        pairing(alpha, v, 2));
  CHECK(pairing({1, 2, 3}, {3, 2, 1}, 7) == 3);

  CHECK_THROWS_AS(dual_action_of(m, "h"), DescriptorError);
}

TEST_CASE("fixed spaces") {
  MatModule m = swap_module(3);
  auto fixed = fixed_space(m, {"s"});
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == std::vector<u32>{1, 1});

  // No generators fix everything.
  CHECK(fixed_space(m, {}).size() == 2);

  // The companion of an irreducible non-linear factor fixes nothing.
  MatModule m7 = irreducible_cyclic_module(7, 2);
  CHECK(fixed_space(m7, {"g"}).empty());
}

TEST_CASE("fitting decomposition") {
  MatModule m = swap_module(3);
  FittingSplit split = fitting_decompose(m, {"s"});
  REQUIRE(split.fixed.size() == 1);
  REQUIRE(split.commutator.size() == 1);
  CHECK(split.fixed[0] == std::vector<u32>{1, 1});
  CHECK(split.commutator[0] == std::vector<u32>{1, 2});

  // Swap in characteristic 2: the group order is divisible by p.
  CHECK_THROWS_AS(fitting_decompose(swap_module(2), {"s"}), CoprimalityError);
}

TEST_CASE("dual fixed-point check") {
  MatModule m7 = irreducible_cyclic_module(7, 2);
  CHECK(dual_fixed_check(m7, {"g"}));

  MatModule id;
  id.p = 3;
  id.dim = 2;
  id.action["g"] = FpMatrix::identity(3, 2);
  CHECK_FALSE(dual_fixed_check(id, {"g"}));
  CHECK_FALSE(dual_fixed_check(id, {}));

  // The swap fixes (1,1) in the dual as well.
  MatModule sw = swap_module(3);
  CHECK_FALSE(dual_fixed_check(sw, {"s"}));
}

TEST_CASE("spun module over a cyclic group") {
  ConcreteGroup h = make_cyclic_group(6);
  Subgroup n = subgroup_closure(h, {h.id_of({2})});
  REQUIRE(n.ids.size() == 3);

  SpunModule spun = module_with_trivial_fixed_points(h, n, 5);
  CHECK(spun.module.p == 5);
  CHECK(spun.module.dim == 4);  // 6 * (1 - 1/3)
  CHECK(spun.group_labels == std::vector<std::string>{"g0"});
  CHECK(spun.normal_labels == std::vector<std::string>{"n0"});
  CHECK(spun.attempts >= 1);
  validate_module(spun.module);

  FpMatrix g0 = spun.module.action.at("g0");
  CHECK(mat_pow_naive(g0, 6) == FpMatrix::identity(5, 4));
  // n0 is the generator picked inside N, which is g0 squared here.
  CHECK(spun.module.action.at("n0") == mat_mul(g0, g0));

  CHECK(fixed_space(spun.module, spun.normal_labels).empty());
  CHECK(fixed_space(spun.module, spun.group_labels).empty());
  CHECK(dual_fixed_check(spun.module, spun.group_labels));
  CHECK(dual_fixed_check(spun.module, spun.normal_labels));

  // Determinism: the same inputs spin the same module.
  SpunModule again = module_with_trivial_fixed_points(h, n, 5);
  CHECK(again.module == spun.module);
  CHECK(again.seed == spun.seed);
}

TEST_CASE("spun module error paths") {
  ConcreteGroup h = make_cyclic_group(6);
  Subgroup trivial{{0}};
  CHECK_THROWS_AS(module_with_trivial_fixed_points(h, trivial, 5),
                  NoSuchModuleError);

  Subgroup n = subgroup_closure(h, {h.id_of({2})});
  CHECK_THROWS_AS(module_with_trivial_fixed_points(h, n, 3), CoprimalityError);
  CHECK_THROWS_AS(module_with_trivial_fixed_points(h, n, 5, 2), CapError);

  // A non-normal subgroup is rejected.
  ConcreteGroup e = make_extraspecial_group(EGroup{3, 1});
  Subgroup line = subgroup_closure(e, {e.id_of({1, 0, 0})});
  REQUIRE(line.ids.size() == 3);
  CHECK_FALSE(is_normal(e, line));
  CHECK_THROWS_AS(module_with_trivial_fixed_points(e, line, 5),
                  NormalityError);
}
