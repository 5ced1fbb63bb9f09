#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdg/errors.hpp"
#include "cdg/extraspecial.hpp"
#include "cdg/gmodule.hpp"

using namespace cdg;

TEST_CASE("orders and identity") {
  CHECK(e_order(EGroup{3, 1}) == 27);
  CHECK(e_order(EGroup{7, 1}) == 343);
  CHECK(e_order(EGroup{11, 2}) == 161051);
  CHECK_THROWS_AS(e_order(EGroup{3, 20}), DomainError);  // 3^41 > 2^64

  EGroup g{3, 1};
  EElement id = e_identity(g);
  CHECK(id.v == std::vector<u32>{0});
  CHECK(id.alpha == std::vector<u32>{0});
  CHECK(id.z == 0);
}

TEST_CASE("group law") {
  EGroup g{3, 1};
  EElement a{{1}, {1}, 0};
  EElement b{{1}, {2}, 0};
  EElement ab = e_mul(g, a, b);
  CHECK(ab.v == std::vector<u32>{2});
  CHECK(ab.alpha == std::vector<u32>{0});
  CHECK(ab.z == 2);  // alpha_b(v_a) = 2 * 1

  // Noncommutative: the twist reads the other operand's coordinates.
  EElement ba = e_mul(g, b, a);
  CHECK(ba.z == 1);
  CHECK_FALSE(ab == ba);

  CHECK(e_mul(g, a, e_identity(g)) == a);
  CHECK(e_mul(g, e_identity(g), a) == a);
  CHECK(e_mul(g, a, e_inv(g, a)) == e_identity(g));
  CHECK(e_mul(g, e_inv(g, a), a) == e_identity(g));

  // Associativity on a noncommuting triple.
  EElement c{{2}, {1}, 1};
  CHECK(e_mul(g, e_mul(g, a, b), c) == e_mul(g, a, e_mul(g, b, c)));

  CHECK_THROWS_AS(e_mul(g, EElement{{1, 2}, {0, 0}, 0}, a), DescriptorError);
}

TEST_CASE("powers") {
  EGroup g{3, 1};
  EElement x{{1}, {1}, 1};
  CHECK(e_pow(g, x, 0) == e_identity(g));
  CHECK(e_pow(g, x, 1) == x);
  CHECK(e_pow(g, x, 2) == e_mul(g, x, x));
  CHECK(e_pow(g, x, 3) == e_identity(g));  // exponent p
  CHECK(e_pow(g, x, -1) == e_inv(g, x));
  CHECK(e_pow(g, x, -2) == e_inv(g, e_mul(g, x, x)));
  CHECK(e_pow(g, x, 7) == e_pow(g, x, 1));
}

TEST_CASE("generators and commutators") {
  EGroup g{3, 2};
  std::vector<EElement> gens = e_generators(g);
  REQUIRE(gens.size() == 4);  // x1, x2, y1, y2

  auto comm = [&](const EElement& a, const EElement& b) {
    return e_mul(g, e_mul(g, e_inv(g, a), e_inv(g, b)), e_mul(g, a, b));
  };
  // [x_i, y_j] = (0, 0, delta_ij)
  EElement z = comm(gens[0], gens[2]);
  CHECK(z.v == std::vector<u32>{0, 0});
  CHECK(z.alpha == std::vector<u32>{0, 0});
  CHECK(z.z == 1);
  CHECK(comm(gens[0], gens[3]) == e_identity(g));
  CHECK(comm(gens[1], gens[2]) == e_identity(g));
  CHECK(comm(gens[0], gens[1]) == e_identity(g));
  CHECK(comm(gens[1], gens[3]).z == 1);
}

TEST_CASE("word encoding") {
  EGroup g{5, 2};
  EElement a{{1, 2}, {3, 4}, 2};
  std::vector<u32> w = e_encode(g, a);
  CHECK(w == std::vector<u32>{1, 2, 3, 4, 2});
  CHECK(e_decode(g, w) == a);
  CHECK_THROWS_AS(e_decode(g, {1, 2, 3}), DescriptorError);
}

TEST_CASE("automorphism constructors") {
  EGroup g{3, 1};
  FpMatrix two = scalar_matrix(3, 1, 2);
  EAut t = make_eaut(two, two, 4);  // B A^T = 4I = I, s = 1
  CHECK(t.s == 1);
  CHECK_THROWS_AS(make_eaut(FpMatrix::identity(3, 1), two, 1), DescriptorError);
  CHECK_THROWS_AS(make_eaut(two, two, 3), DescriptorError);  // s = 0 mod p

  EAut sigma = eaut_sigma(EGroup{7, 1}, 5);
  CHECK(sigma.s == 4);  // 25 mod 7
  CHECK(sigma.a == scalar_matrix(7, 1, 5));
  CHECK_THROWS_AS(eaut_sigma(EGroup{7, 1}, 7), DomainError);

  EAut id = eaut_identity(g);
  CHECK(id.s == 1);
  EElement x{{1}, {2}, 1};
  CHECK(eaut_apply(id, x) == x);
}

TEST_CASE("module matrices act as automorphisms") {
  MatModule m = irreducible_cyclic_module(7, 43);
  EAut t = eaut_from_matrix(m.action.at("g"));
  CHECK(t.s == 1);
  EGroup g{43, 1};

  // Homomorphism on a grid of pairs, and center fixed pointwise.
  for (u32 i = 0; i < 3; ++i) {
    for (u32 j = 0; j < 3; ++j) {
      EElement a{{i + 1}, {2 * i}, j};
      EElement b{{5 * j}, {i + j}, i};
      CHECK(eaut_apply(t, e_mul(g, a, b)) ==
            e_mul(g, eaut_apply(t, a), eaut_apply(t, b)));
    }
  }
  EElement central{{0}, {0}, 7};
  CHECK(eaut_apply(t, central) == central);

  EAut s = eaut_sigma(g, 6);
  EElement image = eaut_apply(s, central);
  CHECK(image.z == mod_mul(36 % 43, 7, 43));
}

TEST_CASE("automorphism composition") {
  EGroup g{7, 1};
  // Scalings compose multiplicatively: sigma_6 then sigma_2 is sigma_5.
  CHECK(eaut_equal(eaut_compose(eaut_sigma(g, 6), eaut_sigma(g, 2)),
                   eaut_sigma(g, 12)));
  CHECK(eaut_equal(eaut_sigma(g, 12), eaut_sigma(g, 5)));

  MatModule m = irreducible_cyclic_module(7, 2);
  FpMatrix a = m.action.at("g");
  FpMatrix b = mat_mul(a, a);
  EAut t = eaut_compose(eaut_from_matrix(a), eaut_from_matrix(b));
  CHECK(eaut_equal(t, eaut_from_matrix(mat_mul(a, b))));

  // compose(first, next) applies first, then next.
  EElement x{{1, 0, 0}, {0, 1, 1}, 1};
  EElement lhs = eaut_apply(t, x);
  EElement rhs = eaut_apply(eaut_from_matrix(b), eaut_apply(eaut_from_matrix(a), x));
  CHECK(lhs == rhs);
}
