#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "birackforge/birack.hpp"
#include "birackforge/bweight.hpp"
#include "birackforge/qweight.hpp"
#include "birackforge/tangle.hpp"

namespace birackforge {

using json = nlohmann::json;

std::string read_file(const std::string& path);
json load_json(const std::string& path);

/// {"n": 3, "U": [[...]], "L": [[...]]}, 1-based entries.
Birack birack_from_json(const json& doc);
json birack_to_json(const Birack& b);
/// A birack document inline, or a path resolved against `base_dir`.
Birack birack_ref_from_json(const json& ref, const std::string& base_dir);
Birack load_birack(const std::string& path);

struct DiagramInput {
  SlicedDiagram diagram;
  std::optional<BraidWord> braid;
};

/// {"type":"sliced","boundary_in":k,"slices":["cup ; cup", ...]} or
/// {"type":"braid","strands":n,"word":[1,1,1,2]}.
DiagramInput diagram_from_json(const json& doc);
json diagram_to_json(const SlicedDiagram& d);

/// A JSON file path if it exists, otherwise inline slice grammar.
DiagramInput load_diagram(const std::string& arg, int boundary_in = 0);

template <class T>
json matrix_to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

/// Weight documents: {"birack", "dim", "delta", "X": {"i,j": [[...]]},
/// "N": {"i": [[...]]}, "U": {"i": [[...]]}}; a "modulus" field marks Z_p entries.
PolyWeight poly_weight_from_json(const json& doc, const std::string& base_dir);
ModWeight mod_weight_from_json(const json& doc, const std::string& base_dir);
bool is_mod_weight(const json& doc);

template <class T>
json weight_to_json(const QuantumWeight<T>& q) {
  json doc;
  doc["birack"] = birack_to_json(q.birack());
  doc["dim"] = q.dim();
  doc["delta"] = q.delta().to_string();
  const int m = q.birack().size();
  json X = json::object(), N = json::object(), U = json::object();
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) X[std::to_string(x + 1) + "," + std::to_string(y + 1)] = matrix_to_json(q.X(x, y));
    N[std::to_string(x + 1)] = matrix_to_json(q.N(x));
    U[std::to_string(x + 1)] = matrix_to_json(q.U(x));
  }
  doc["X"] = X;
  doc["N"] = N;
  doc["U"] = U;
  if constexpr (std::is_same_v<T, ModInt>) {
    int p = q.delta().modulus();
    for (int x = 0; x < m && !p; ++x)
      for (int y = 0; y < m && !p; ++y)
        for (std::size_t i = 0; i < q.X(x, y).rows() * q.X(x, y).cols() && !p; ++i)
          p = q.X(x, y)(i / q.X(x, y).cols(), i % q.X(x, y).cols()).modulus();
    doc["modulus"] = p;
  }
  return doc;
}

/// {"birack", "strands", "dim", "sigma": {"j|x,y": [[...]]}}.
PolyBraidWeight braid_weight_from_json(const json& doc, const std::string& base_dir);
json braid_weight_to_json(const PolyBraidWeight& w);

/// Directory part of a path, "." if none.
std::string dirname_of(const std::string& path);

}  // namespace birackforge
