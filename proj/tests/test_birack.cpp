#include <doctest.h>

#include "birackforge/birack.hpp"
#include "birackforge/search.hpp"
#include "fixtures.hpp"

using namespace birackforge;

TEST_SUITE("birack") {
  TEST_CASE("small biracks validate with their ranks") {
    Birack e0 = fixtures::ex0();
    CHECK(e0.rank() == 2);
    CHECK(cycle_string(e0.pi()) == "(1 2)");
    Birack h = fixtures::hopf_birack();
    CHECK(h.rank() == 2);
    CHECK(cycle_string(h.pi()) == "(1 2)");
    Birack f = fixtures::flip();
    CHECK(f.rank() == 1);
    CHECK(f.is_bikei());
  }

  TEST_CASE("non-injective map is rejected") {
    CHECK_THROWS_AS(Birack::from_matrix({{1, 1}, {1, 1}}, {{1, 1}, {2, 2}}), AxiomViolation);
    try {
      Birack::from_matrix({{1, 1}, {1, 1}}, {{1, 1}, {2, 2}});
    } catch (const AxiomViolation& e) {
      CHECK(!e.which().empty());
      CHECK(!e.witness().empty());
    }
  }

  TEST_CASE("matrix encoding") {
    // B(x_i, x_j) = (x_{U[j][i]}, x_{L[i][j]})
    Birack h = fixtures::hopf_birack();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int sigma[3] = {1, 0, 2};
        CHECK(h.up(i, j) == sigma[j]);
        CHECK(h.down(i, j) == i);
      }
  }

  TEST_CASE("constant action family") {
    CHECK(constant_action(2, {1, 0}, {1, 0}) == fixtures::flip());
    CHECK(constant_action(3, {1, 0, 2}, {0, 1, 2}) == fixtures::hopf_birack());
    CHECK_THROWS_AS(constant_action(3, {1, 0, 2}, {2, 1, 0}), InvalidConstantAction);
    CHECK_THROWS_AS(constant_action(3, {1, 2, 0}, {0, 1, 2}), InvalidConstantAction);
  }

  TEST_CASE("tsr family") {
    Birack b = tsr_birack(4, 1, 2, 1);
    CHECK(b.size() == 4);
    Birack sw = tsr_birack(2, 1, 0, 1);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) CHECK(sw.apply(x, y) == std::pair{y, x});
    CHECK(sw.rank() == 1);
    CHECK(sw.is_kei());
    CHECK_THROWS_AS(tsr_birack(3, 1, 1, 1), InvalidTSR);
  }

  TEST_CASE("derived maps agree with their definitions") {
    for (const Birack& b : enumerate_biracks(3, true)) {
      for (int x = 0; x < b.size(); ++x) {
        const Element a = b.alpha()[x];
        auto [s1, s2] = b.apply_inverse(a, a);
        CHECK(s2 == x);
        CHECK(s1 == b.pi()[x]);
        CHECK(b.pi()[b.pi()[x]] == x);
      }
      CHECK((b.rank() == 1 || b.rank() == 2));
    }
  }

  TEST_CASE("matrix round-trip") {
    for (const Birack& b : enumerate_biracks(2))
      CHECK(Birack::from_matrix(b.upper_block(), b.lower_block()) == b);
  }
}
