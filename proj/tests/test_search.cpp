#include <doctest.h>

#include <algorithm>
#include <map>

#include "birackforge/search.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace birackforge;

namespace {

/// Slot pattern of an antidiagonal weight up to renaming of variables.
std::vector<int> slot_pattern(const PolyBraidWeight& w) {
  std::map<std::string, int> seen;
  std::vector<int> out;
  for (const auto& m : w.table()) {
    auto key = m(1, 0).to_string();
    auto it = seen.try_emplace(key, static_cast<int>(seen.size())).first;
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("birack enumeration") {
    CHECK(enumerate_biracks(1).size() == 1);
    auto two = enumerate_biracks(2);
    CHECK(std::find(two.begin(), two.end(), fixtures::ex0()) != two.end());
    CHECK(std::find(two.begin(), two.end(), fixtures::flip()) != two.end());
    CHECK_THROWS_AS(enumerate_biracks(4), UnsupportedSize);
  }

  TEST_CASE("n = 2 agrees with a naive loop") {
    auto naive = oracle::naive_biracks_n2();
    auto found = enumerate_biracks(2);
    REQUIRE(found.size() == naive.size());
    for (const auto& [U, L] : naive) {
      Birack b = Birack::from_matrix(U, L);
      CHECK(std::find(found.begin(), found.end(), b) != found.end());
    }
  }

  TEST_CASE("dedup keeps one per relabeling class") {
    auto all = enumerate_biracks(3, false, 2);
    auto ded = enumerate_biracks(3, true, 2);
    std::set<std::vector<Element>> keys;
    for (const auto& b : all) keys.insert(birack_canonical_key(b));
    CHECK(keys.size() == ded.size());
  }

  TEST_CASE("braid weight search rediscovers the reference table") {
    BraidSearchSpec spec;
    spec.workers = 2;
    auto found = search_braid_weights(fixtures::flip(), 3, spec);
    const auto target = slot_pattern(fixtures::reference_braid_weight());
    bool hit = false;
    for (const auto& w : found) {
      CHECK(verify_braid_weight(w).ok());
      hit = hit || slot_pattern(w) == target;
    }
    CHECK(hit);
  }

  TEST_CASE("scalar template finds the all-ones weight") {
    BraidSearchSpec spec;
    spec.shape = BraidTemplate::Scalar;
    spec.dim = 1;
    auto found = search_braid_weights(fixtures::flip(), 3, spec);
    bool ones = false;
    for (const auto& w : found)
      ones = ones || std::all_of(w.table().begin(), w.table().end(), [](const auto& m) { return m.is_identity(); });
    CHECK(ones);
  }

  TEST_CASE("budget refusal") {
    BraidSearchSpec spec;
    spec.budget = 10;
    CHECK_THROWS_AS(search_braid_weights(fixtures::flip(), 3, spec), RefusedBudget);
    QuantumSearchSpec q;
    q.dim = 2;
    q.budget = 10;
    CHECK_THROWS_AS(search_quantum_weights(fixtures::flip(), q), RefusedBudget);
  }

  TEST_CASE("quantum weight search over Z_p") {
    QuantumSearchSpec spec;
    auto ones = search_quantum_weights(fixtures::singleton(), spec);
    CHECK(!ones.empty());
    bool all_one = false;
    for (const auto& q : ones) {
      CHECK(verify_weight(q).ok());
      all_one = all_one || (q.X(0, 0)(0, 0).value() == 1 && q.N(0)(0, 0).value() == 1 && q.U(0)(0, 0).value() == 1 &&
                            q.delta().value() == 1);
    }
    CHECK(all_one);
    spec.modulus = 3;
    for (const auto& q : search_quantum_weights(fixtures::flip(), spec)) CHECK(verify_weight(q).ok());
  }

  TEST_CASE("cocycle mode returns quandle 2-cocycles") {
    QuantumSearchSpec spec;
    spec.cocycle = true;
    Birack kei = tsr_birack(2, 1, 0, 1);
    oracle::Table op(2, std::vector<int>(2));
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) op[x][y] = x;  // trivial quandle
    auto found = search_quantum_weights(kei, spec);
    CHECK(!found.empty());
    for (const auto& q : found) {
      std::vector<std::vector<ModInt>> phi(2, std::vector<ModInt>(2));
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) phi[x][y] = q.X(x, y)(0, 0);
      CHECK(oracle::is_quandle_cocycle(phi, op, ModInt(1, spec.modulus)));
      CHECK(q.delta().value() == 1);
    }
  }
}
