#include <doctest.h>

#include <random>

#include "birackforge/laurent_poly.hpp"
#include "birackforge/matrix.hpp"
#include "birackforge/mod_int.hpp"
#include "fixtures.hpp"

using namespace birackforge;
using fixtures::mat;
using P = LaurentPoly;

namespace {

P random_poly(std::mt19937_64& rng, const VarList& vars) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-3, 3), terms(0, 4);
  P p = P::constant(0, vars);
  for (int t = terms(rng); t > 0; --t) {
    P::Exponents e;
    for (std::size_t i = 0; i < vars->size(); ++i) e.push_back(expo(rng));
    p += P::monomial(vars, e, coef(rng));
  }
  return p;
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("laurent arithmetic basics") {
    auto v = make_vars({"A"});
    P A = P::variable(v, "A");
    CHECK(A * A.inverse() == P::constant(1, v));
    CHECK((A + A.inverse()) * (A - A.inverse()) == P::parse("A^2-A^-2", v));
    CHECK(P::parse("-A^3", v).inverse() == P::parse("-A^-3", v));
    auto n = make_vars({"n"});
    CHECK(P::parse("n^-1", n).inverse() == P::parse("n", n));
    CHECK_THROWS_AS(P::parse("A+1", v).inverse(), NotAUnit);
  }

  TEST_CASE("render and parse round-trip") {
    auto v = make_vars({"a", "b", "n"});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      P p = random_poly(rng, v);
      CHECK(P::parse(p.to_string(), v) == p);
      CHECK(p + P::constant(0, v) == p);
    }
    CHECK(P::parse("2*y^2", make_vars({"y"})).to_string() == "2*y^2");
  }

  TEST_CASE("ring axioms on random polynomials") {
    auto v = make_vars({"x", "y"});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      P a = random_poly(rng, v), b = random_poly(rng, v), c = random_poly(rng, v);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a - a == P::constant(0, v));
    }
  }

  TEST_CASE("unknown variables are rejected") {
    CHECK_THROWS_AS(P::parse("q^2", make_vars({"A"})), ParseError);
  }

  TEST_CASE("mod arithmetic") {
    ModInt a(3, 5), b(4, 5);
    CHECK((a * b).value() == 2);
    CHECK((a + b).value() == 2);
    CHECK((a * a.inverse()).value() == 1);
    CHECK_THROWS_AS(ModInt(0, 5).inverse(), NotAUnit);
  }

  TEST_CASE("matrix products") {
    auto v = make_vars({"A"});
    auto I2 = Matrix<P>::identity(2, P::constant(1, v));
    CHECK(kron(I2, I2) == Matrix<P>::identity(4, P::constant(1, v)));
    auto N = mat(v, {{"0", "A", "-A^-1", "0"}});
    auto U = mat(v, {{"0"}, {"-A"}, {"A^-1"}, {"0"}});
    CHECK((N * U)(0, 0) == P::parse("-A^2-A^-2", v));
    auto y = make_vars({"y"});
    CHECK(mat(y, {{"y^2", "0"}, {"0", "y^2"}}).trace() == P::parse("2*y^2", y));
  }

  TEST_CASE("matrix inverse") {
    auto y = make_vars({"y"});
    CHECK(inverse(mat(y, {{"0", "1"}, {"y", "0"}})) == mat(y, {{"0", "y^-1"}, {"1", "0"}}));
    CHECK_THROWS_AS(inverse(mat(y, {{"1", "1"}, {"1", "1"}})), NotInvertibleOverRing);
    CHECK(inverse(fixtures::flip_x(false)) == fixtures::flip_x(true));
  }

  TEST_CASE("kronecker mixed-product property") {
    auto v = make_vars({"x", "y"});
    std::mt19937_64 rng(3);
    auto rand_mat = [&](std::size_t r, std::size_t c) {
      std::vector<P> d;
      for (std::size_t i = 0; i < r * c; ++i) d.push_back(random_poly(rng, v));
      return Matrix<P>(r, c, d);
    };
    for (int t = 0; t < 50; ++t) {
      auto A = rand_mat(2, 2), B = rand_mat(2, 1), C = rand_mat(2, 2), D = rand_mat(1, 2);
      CHECK(kron(A, B) * kron(C, D) == kron(A * C, B * D));
      auto E = rand_mat(2, 2), F = rand_mat(2, 2);
      CHECK((E * F).trace() == (F * E).trace());
    }
  }
}
