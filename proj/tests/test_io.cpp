#include <doctest.h>

#include "birackforge/io.hpp"
#include "birackforge/search.hpp"
#include "fixtures.hpp"

using namespace birackforge;

TEST_SUITE("io") {
  TEST_CASE("birack documents round-trip") {
    for (const auto& b : enumerate_biracks(2)) CHECK(birack_from_json(json::parse(birack_to_json(b).dump())) == b);
    CHECK_THROWS_AS(birack_from_json(json::parse(R"({"n":2,"U":[[1,3],[1,1]],"L":[[1,1],[2,2]]})")), ParseError);
    CHECK_THROWS_AS(birack_from_json(json::parse(R"({"U":[[1,1],[1,1]],"L":[[1,1],[2,2]]})")), AxiomViolation);
  }

  TEST_CASE("diagram documents") {
    auto d = diagram_from_json(json::parse(R"({"type":"braid","strands":2,"word":[1,1,1]})"));
    CHECK(d.braid.has_value());
    CHECK(d.diagram == fixtures::trefoil());
    auto h = diagram_from_json(diagram_to_json(fixtures::hopf()));
    CHECK(h.diagram == fixtures::hopf());
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"type":"pretzel"})")), ParseError);
  }

  TEST_CASE("weight documents round-trip") {
    auto w = fixtures::flip_weight();
    auto doc = json::parse(weight_to_json(w).dump());
    auto back = poly_weight_from_json(doc, ".");
    CHECK(back.birack() == w.birack());
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) CHECK(back.X(x, y).to_string() == w.X(x, y).to_string());
      CHECK(back.N(x).to_string() == w.N(x).to_string());
    }
    CHECK(verify_weight(back).ok());
    CHECK(phi_qm(fixtures::hopf(), back).to_string() == phi_qm(fixtures::hopf(), w).to_string());
  }

  TEST_CASE("mod weight documents") {
    QuantumSearchSpec spec;
    spec.modulus = 3;
    for (const auto& q : search_quantum_weights(fixtures::flip(), spec)) {
      auto doc = json::parse(weight_to_json(q).dump());
      CHECK(is_mod_weight(doc));
      CHECK(doc["modulus"] == 3);
      auto back = mod_weight_from_json(doc, ".");
      CHECK(verify_weight(back).ok());
    }
  }

  TEST_CASE("braid weight documents round-trip") {
    auto w = fixtures::reference_braid_weight();
    auto back = braid_weight_from_json(json::parse(braid_weight_to_json(w).dump()), ".");
    CHECK(phi_mw(BraidWord{3, {1, 1, 1, 2}}, back).to_string() == phi_mw(BraidWord{3, {1, 1, 1, 2}}, w).to_string());
  }

  TEST_CASE("missing fields are parse errors") {
    CHECK_THROWS_AS(poly_weight_from_json(json::parse(R"({"dim":2})"), "."), ParseError);
    CHECK_THROWS_AS(load_json("/nonexistent/file.json"), ParseError);
  }
}
