#include <doctest.h>

#include "birackforge/qweight.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace birackforge;
using fixtures::mat;
using P = LaurentPoly;

TEST_SUITE("qweight") {
  TEST_CASE("Kauffman data is a quantum weight") {
    CHECK(verify_weight(fixtures::kauffman(fixtures::singleton())).ok());
    CHECK(verify_weight(fixtures::kauffman(fixtures::hopf_birack())).ok());
    CHECK(verify_weight(fixtures::kauffman(fixtures::flip())).ok());
  }

  TEST_CASE("wrong kink scalar fails axiom VI") {
    auto r = verify_weight(fixtures::kauffman(fixtures::singleton(), "A^3"));
    CHECK(!r.ok());
    for (const auto& c : r.checks) {
      if (c.axiom == "VI") {
        CHECK(!c.passed);
        CHECK(!c.witness.empty());
      } else {
        CHECK(c.passed);
      }
    }
  }

  TEST_CASE("flip weight data is a quantum weight") { CHECK(verify_weight(fixtures::flip_weight()).ok()); }

  TEST_CASE("unknot and zigzag") {
    auto q = fixtures::kauffman(fixtures::singleton());
    auto A = fixtures::kauffman_vars();
    auto ls = enumerate_labelings(fixtures::unknot(), q.birack());
    REQUIRE(ls.size() == 1);
    CHECK(evaluate(fixtures::unknot(), ls[0], q) == mat(A, {{"-A^2-A^-2"}}));
    auto zig = parse_diagram("id cup / cap id", 1);
    auto w = fixtures::flip_weight();
    for (const auto& f : enumerate_labelings(zig, w.birack())) CHECK(evaluate(zig, f, w).is_identity());
  }

  TEST_CASE("normalization arithmetic") {
    auto A = fixtures::kauffman_vars();
    Matrix<P> one = mat(A, {{"1"}});
    P delta = P::parse("-A^3", A);
    CHECK(normalize(one, {3}, 1, delta) == mat(A, {{"-A^-9"}}));
    CHECK(normalize(one, {0, 0}, 2, delta) == one);
    CHECK(normalize(one, {3}, 2, delta) == mat(A, {{"-A^-3"}}));
    CHECK(floor_div(-1, 2) == -1);
    CHECK(floor_div(-2, 2) == -1);
  }

  TEST_CASE("flip weight contractions") {
    auto w = fixtures::flip_weight();
    auto v = fixtures::flip_vars();
    auto I = w.id();
    // hand expansion of (I (x) N_2 (x) I)(X_{1,2}^-1 (x) X_{2,1}^-1)(I (x) U_2 (x) I)
    auto literal = kron(kron(I, w.N(1)), I) * kron(w.Xinv(0, 1), w.Xinv(1, 0)) * kron(kron(I, w.U(1)), I);
    CHECK(literal == mat(v, {{"0", "0", "0", "0"}, {"0", "-a^2", "b^-2", "0"}, {"0", "b^-2", "-a^2", "0"}, {"0", "0", "0", "0"}}));
    auto expected = mat(v, {{"0", "0", "0", "0"}, {"0", "a^-2", "-b^2", "0"}, {"0", "-b^2", "a^-2", "0"}, {"0", "0", "0", "0"}});
    CHECK(kron(kron(I, w.N(1)), I) * kron(w.Xinv(1, 1), w.Xinv(1, 1)) * kron(kron(I, w.U(0)), I) == expected);
    auto T3 = SlicedDiagram(2, {{Piece::Cup, 1}, {Piece::Xneg, 0}, {Piece::Xneg, 2}, {Piece::Cap, 1}});
    auto ls = enumerate_labelings(T3, w.birack(), std::vector<Element>{0, 0});
    REQUIRE(ls.size() == 2);
    CHECK(evaluate(T3, ls[0], w) == expected);
  }

  TEST_CASE("flip weight multisets on small tangles") {
    auto w = fixtures::flip_weight();
    auto v = fixtures::flip_vars();
    auto T1 = parse_diagram("id id", 2);
    auto m1 = phi_qm(T1, w);
    CHECK(m1.size() == 4);
    REQUIRE(m1.entries().size() == 1);
    CHECK(m1.entries()[0].first.is_identity());

    auto T2 = SlicedDiagram(2, {{Piece::Cap, 0}, {Piece::Cup, 0}});
    SignatureMultiset<P> e2;
    e2.add(mat(v, {{"0", "0", "0", "0"}, {"0", "-1", "1", "0"}, {"0", "1", "-1", "0"}, {"0", "0", "0", "0"}}), 2);
    e2.add(mat(v, {{"0", "0", "0", "0"}, {"0", "1", "-1", "0"}, {"0", "-1", "1", "0"}, {"0", "0", "0", "0"}}), 2);
    CHECK(phi_qm(T2, w) == e2);

    auto T3 = SlicedDiagram(2, {{Piece::Cup, 1}, {Piece::Xneg, 0}, {Piece::Xneg, 2}, {Piece::Cap, 1}});
    SignatureMultiset<P> e3;
    e3.add(mat(v, {{"0", "0", "0", "0"}, {"0", "a^-2", "-b^2", "0"}, {"0", "-b^2", "a^-2", "0"}, {"0", "0", "0", "0"}}), 2);
    e3.add(mat(v, {{"0", "0", "0", "0"}, {"0", "-a^2", "b^-2", "0"}, {"0", "b^-2", "-a^2", "0"}, {"0", "0", "0", "0"}}), 2);
    CHECK(phi_qm(T3, w) == e3);
  }

  TEST_CASE("local contraction agrees with the Kronecker route") {
    auto w = fixtures::flip_weight();
    for (const auto& d : {parse_diagram("xpos1 / cup2 / xneg3 / cap2 / xpos1", 2), fixtures::hopf(), fixtures::trefoil()})
      for (const auto& f : enumerate_labelings(d, w.birack())) CHECK(evaluate(d, f, w) == evaluate_by_kronecker(d, f, w));
  }

  TEST_CASE("Kauffman values match the skein state sum") {
    auto q = fixtures::kauffman(fixtures::singleton());
    for (const auto& d : {fixtures::unknot(), fixtures::trefoil(), fixtures::mirror_trefoil(), fixtures::hopf(),
                          braid_closure(BraidWord{3, {1, -2, 1, -2}}), insert_kinks(fixtures::unknot(), {2})}) {
      auto ms = phi_qm(d, q);
      REQUIRE(ms.entries().size() == 1);
      CHECK(ms.entries()[0].first(0, 0) == oracle::kauffman_state_sum(d));
    }
  }

  TEST_CASE("rendering") {
    auto A = fixtures::kauffman_vars();
    SignatureMultiset<P> m;
    m.add(mat(A, {{"-A^2-A^-2"}}));
    CHECK(phi_q_polynomial(m) == "u^{-A^2-A^-2}");
    SignatureMultiset<P> three;
    three.add(mat(make_vars({"s"}), {{"s"}}), 3);
    CHECK(phi_q_polynomial(three) == "3·u^{s}");
  }

  TEST_CASE("signature count equals the integral count") {
    auto q = fixtures::kauffman(fixtures::hopf_birack());
    for (const auto& d : {fixtures::unknot(), fixtures::hopf(), fixtures::trefoil()})
      CHECK(phi_qm(d, q).size() == phi_integral(d, q.birack()).total);
  }

  TEST_CASE("classification") {
    auto k = classify_weight(fixtures::kauffman(fixtures::flip()));
    CHECK(k.homogeneous);
    CHECK(!k.strongly_heterogeneous);
    CHECK(!classify_weight(fixtures::flip_weight()).homogeneous);
    ModInt one(1, 5);
    Matrix<ModInt> s(1, 1, {one});
    ModWeight ones(fixtures::flip(), 1, std::vector<Matrix<ModInt>>(4, s), std::vector<Matrix<ModInt>>(2, s),
                   std::vector<Matrix<ModInt>>(2, s), one);
    auto c = classify_weight(ones);
    CHECK(c.homogeneous);
    CHECK(std::all_of(c.ybe.begin(), c.ybe.end(), [](bool b) { return b; }));
  }
}
