#include <doctest.h>

#include <random>

#include "birackforge/bweight.hpp"
#include "fixtures.hpp"

using namespace birackforge;
using fixtures::mat;
using P = LaurentPoly;

namespace {

SignatureMultiset<P> scalar_multiset(const VarList& v, std::vector<std::pair<std::string, long>> items) {
  SignatureMultiset<P> m;
  for (auto& [text, mult] : items) m.add(mat(v, {{text}}), mult);
  return m;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord r{w.strands, {}};
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r.word.push_back(-*it);
  return r;
}

}  // namespace

TEST_SUITE("bweight") {
  TEST_CASE("the reference table is a braid weight") {
    auto r = verify_braid_weight(fixtures::reference_braid_weight());
    CHECK(r.ok());
    CHECK(!r.literal_reading.passed);
  }

  TEST_CASE("breaking the symmetry is detected") {
    auto w = fixtures::antidiag_weight({"x", "y", "z", "w", "w", "z", "y", "y"});
    auto r = verify_braid_weight(w);
    CHECK(!r.ok());
    bool braid_failed = false;
    for (const auto& c : r.checks)
      if (c.axiom == "braid" && !c.passed) {
        braid_failed = true;
        CHECK(c.witness.size() == 4);
      }
    CHECK(braid_failed);
  }

  TEST_CASE("identity weight passes") {
    auto v = fixtures::braid_vars();
    auto I = Matrix<P>::identity(2, P::constant(1, v));
    PolyBraidWeight id(fixtures::flip(), 3, 2, std::vector<Matrix<P>>(8, I));
    CHECK(verify_braid_weight(id).ok());
  }

  TEST_CASE("word products") {
    auto w = fixtures::reference_braid_weight();
    auto v = fixtures::braid_vars();
    CHECK(evaluate_braid(BraidWord{3, {1, 1, 1, 2}}, {0, 1, 0}, w) == mat(v, {{"y^2", "0"}, {"0", "y^2"}}));
    CHECK(evaluate_braid(BraidWord{3, {1, -1, 1, 2}}, {0, 1, 0}, w) == mat(v, {{"y", "0"}, {"0", "y"}}));
    CHECK(evaluate_braid(BraidWord{3, {}}, {0, 1, 0}, w).is_identity());
  }

  TEST_CASE("trace multisets") {
    auto w = fixtures::reference_braid_weight();
    auto v = fixtures::braid_vars();
    CHECK(phi_mw(BraidWord{3, {1, 1, 1, 2}}, w) == scalar_multiset(v, {{"2*y^2", 1}, {"2*z^2", 1}}));
    CHECK(phi_mw(BraidWord{3, {1, -1, 1, 2}}, w) == scalar_multiset(v, {{"2*y", 1}, {"2*z", 1}}));
    CHECK(phi_mw(BraidWord{2, {}}, w) == scalar_multiset(v, {{"2", 4}}));
  }

  TEST_CASE("conjugation invariance") {
    auto w = fixtures::reference_braid_weight();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(0, 3), gen(1, 2), sign(0, 1);
    auto random_word = [&](int n) {
      BraidWord b{3, {}};
      for (int i = 0; i < n; ++i) b.word.push_back(gen(rng) * (sign(rng) ? 1 : -1));
      return b;
    };
    for (int t = 0; t < 50; ++t) {
      BraidWord beta = random_word(len(rng) + 1), alpha = random_word(len(rng));
      BraidWord conj = alpha;
      conj.word.insert(conj.word.end(), beta.word.begin(), beta.word.end());
      auto ainv = inverse_word(alpha);
      conj.word.insert(conj.word.end(), ainv.word.begin(), ainv.word.end());
      CHECK(phi_mw(conj, w) == phi_mw(beta, w));
    }
  }
}
