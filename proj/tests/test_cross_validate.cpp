#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdg/chardeg.hpp"
#include "cdg/errors.hpp"
#include "cdg/tower.hpp"

using namespace cdg;

// Full enumeration of the (7, 43, 3) base: 43^3 * 7 * 3 = 1669647 elements,
// 207 conjugacy classes.  This drives every certificate claim through the
// brute-force path, including the class-algebra degree computation and the
// degree-family divisor rules on the quotients.
TEST_CASE("order-1669647 base validates by full enumeration") {
  TowerLevel lvl = build_base_three_prime(7, 43, 3);

  ConcreteGroup g = build_concrete(lvl.group);
  CHECK(g.order() == 1669647);

  DegreeMultiset dm = char_degrees(g);
  DegreeMultiset expected{{1, 21}, {21, 88}, {129, 98}};
  CHECK(dm == expected);  // 21 + 88*21^2 + 98*129^2 = 1669647
  CHECK(is_cdg(dm));

  cross_validate(lvl);
}
