#include "birackforge/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace birackforge {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int int_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

IntMatrix int_matrix(const json& v, const char* name) {
  if (!v.is_array()) throw ParseError(std::string(name) + " must be an array of rows");
  IntMatrix m;
  for (const auto& row : v) {
    if (!row.is_array()) throw ParseError(std::string(name) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw ParseError(std::string(name) + " entries must be integers");
      r.push_back(e.get<int>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::string entry_text(const json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long>());
  throw ParseError("matrix entries must be strings or integers");
}

void collect_texts(const json& v, std::set<std::string>& names) {
  if (v.is_string()) {
    for (auto& n : collect_variables(v.get<std::string>())) names.insert(n);
  } else if (v.is_array() || v.is_object()) {
    for (const auto& e : v) collect_texts(e, names);
  }
}

template <class T, class Parse>
Matrix<T> matrix_from_json(const json& v, const std::string& name, Parse parse) {
  if (!v.is_array() || v.empty()) throw ParseError(name + " must be a non-empty array of rows");
  const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
  std::vector<T> data;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != cols) throw ParseError(name + " has ragged or malformed rows");
    for (const auto& e : row) data.push_back(parse(entry_text(e)));
  }
  return Matrix<T>(v.size(), cols, std::move(data));
}

template <class T, class Parse>
QuantumWeight<T> weight_from_json(const json& doc, const std::string& base_dir, Parse parse) {
  Birack b = birack_ref_from_json(field(doc, "birack"), base_dir);
  const int dim = int_field(doc, "dim");
  const int m = b.size();
  const json& X = field(doc, "X");
  const json& N = field(doc, "N");
  const json& U = field(doc, "U");
  std::vector<Matrix<T>> xs, ns, us;
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) {
      const std::string key = std::to_string(x) + "," + std::to_string(y);
      if (!X.contains(key)) throw ParseError("X is missing block \"" + key + "\"");
      xs.push_back(matrix_from_json<T>(X.at(key), "X[" + key + "]", parse));
    }
  for (int x = 1; x <= m; ++x) {
    const std::string key = std::to_string(x);
    if (!N.contains(key)) throw ParseError("N is missing block \"" + key + "\"");
    if (!U.contains(key)) throw ParseError("U is missing block \"" + key + "\"");
    ns.push_back(matrix_from_json<T>(N.at(key), "N[" + key + "]", parse));
    us.push_back(matrix_from_json<T>(U.at(key), "U[" + key + "]", parse));
  }
  return QuantumWeight<T>(std::move(b), dim, std::move(xs), std::move(ns), std::move(us),
                          parse(entry_text(field(doc, "delta"))));
}

VarList doc_vars(const json& doc, std::initializer_list<const char*> keys) {
  std::set<std::string> names;
  for (const char* k : keys)
    if (doc.contains(k)) collect_texts(doc.at(k), names);
  return make_vars(std::vector<std::string>(names.begin(), names.end()));
}

}  // namespace

std::string dirname_of(const std::string& path) {
  auto parent = std::filesystem::path(path).parent_path();
  return parent.empty() ? "." : parent.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Birack birack_from_json(const json& doc) {
  IntMatrix U = int_matrix(field(doc, "U"), "U");
  IntMatrix L = int_matrix(field(doc, "L"), "L");
  if (doc.contains("n") && int_field(doc, "n") != static_cast<int>(U.size()))
    throw ParseError("n does not match the size of U");
  for (const auto* m : {&U, &L})
    for (const auto& row : *m)
      for (int e : row)
        if (e < 1 || e > static_cast<int>(U.size()))
          throw ParseError("birack entries must lie in 1.." + std::to_string(U.size()));
  return Birack::from_matrix(U, L);
}

json birack_to_json(const Birack& b) {
  return json{{"n", b.size()}, {"U", b.upper_block()}, {"L", b.lower_block()}};
}

Birack birack_ref_from_json(const json& ref, const std::string& base_dir) {
  if (ref.is_string()) {
    std::filesystem::path p(ref.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return load_birack(p.string());
  }
  return birack_from_json(ref);
}

Birack load_birack(const std::string& path) { return birack_from_json(load_json(path)); }

DiagramInput diagram_from_json(const json& doc) {
  const json& type = field(doc, "type");
  if (type == "braid") {
    const int strands = int_field(doc, "strands");
    const json& word = field(doc, "word");
    std::string text;
    if (word.is_string()) {
      text = word.get<std::string>();
    } else if (word.is_array()) {
      for (const auto& g : word) {
        if (!g.is_number_integer()) throw ParseError("braid word entries must be integers");
        text += std::to_string(g.get<int>()) + " ";
      }
    } else {
      throw ParseError("braid word must be an array or a string");
    }
    BraidWord b = parse_braid(text, strands);
    return {braid_closure(b), b};
  }
  if (type == "sliced") {
    const int boundary = doc.contains("boundary_in") ? int_field(doc, "boundary_in") : 0;
    const json& slices = field(doc, "slices");
    std::string text;
    if (slices.is_string()) {
      text = slices.get<std::string>();
    } else if (slices.is_array()) {
      for (std::size_t i = 0; i < slices.size(); ++i) {
        if (!slices[i].is_string()) throw ParseError("slices must be strings");
        if (i) text += " / ";
        text += slices[i].get<std::string>();
      }
    } else {
      throw ParseError("slices must be an array of strings");
    }
    return {parse_diagram(text, boundary), std::nullopt};
  }
  throw ParseError("diagram type must be \"sliced\" or \"braid\"");
}

json diagram_to_json(const SlicedDiagram& d) {
  json slices = json::array();
  std::string text = d.to_string();
  std::size_t start = 0;
  while (!text.empty()) {
    std::size_t cut = text.find(" / ", start);
    slices.push_back(text.substr(start, cut == std::string::npos ? std::string::npos : cut - start));
    if (cut == std::string::npos) break;
    start = cut + 3;
  }
  return json{{"type", "sliced"}, {"boundary_in", d.boundary_in()}, {"slices", slices}};
}

DiagramInput load_diagram(const std::string& arg, int boundary_in) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return diagram_from_json(load_json(arg));
  return {parse_diagram(arg, boundary_in), std::nullopt};
}

bool is_mod_weight(const json& doc) { return doc.is_object() && doc.contains("modulus"); }

PolyWeight poly_weight_from_json(const json& doc, const std::string& base_dir) {
  if (is_mod_weight(doc)) throw ParseError("weight has a modulus; it is a Z_p weight");
  VarList vars = doc_vars(doc, {"X", "N", "U", "delta"});
  return weight_from_json<LaurentPoly>(doc, base_dir, [&](const std::string& t) { return LaurentPoly::parse(t, vars); });
}

ModWeight mod_weight_from_json(const json& doc, const std::string& base_dir) {
  const int p = int_field(doc, "modulus");
  if (p < 2) throw ParseError("modulus must be at least 2");
  return weight_from_json<ModInt>(doc, base_dir, [&](const std::string& t) {
    try {
      std::size_t used = 0;
      long v = std::stol(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return ModInt(v, p);
    } catch (const std::exception&) {
      throw ParseError("Z_p entry '" + t + "' is not an integer");
    }
  });
}

PolyBraidWeight braid_weight_from_json(const json& doc, const std::string& base_dir) {
  Birack b = birack_ref_from_json(field(doc, "birack"), base_dir);
  const int strands = int_field(doc, "strands");
  const int dim = int_field(doc, "dim");
  const json& sigma = field(doc, "sigma");
  VarList vars = doc_vars(doc, {"sigma"});
  auto parse = [&](const std::string& t) { return LaurentPoly::parse(t, vars); };
  std::vector<Matrix<LaurentPoly>> table;
  const int m = b.size();
  for (int j = 1; j < strands; ++j)
    for (int x = 1; x <= m; ++x)
      for (int y = 1; y <= m; ++y) {
        const std::string key = std::to_string(j) + "|" + std::to_string(x) + "," + std::to_string(y);
        if (!sigma.contains(key)) throw ParseError("sigma is missing \"" + key + "\"");
        table.push_back(matrix_from_json<LaurentPoly>(sigma.at(key), "sigma[" + key + "]", parse));
      }
  return PolyBraidWeight(std::move(b), strands, dim, std::move(table));
}

json braid_weight_to_json(const PolyBraidWeight& w) {
  json sigma = json::object();
  const int m = w.birack().size();
  for (int j = 1; j < w.strands(); ++j)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        sigma[std::to_string(j) + "|" + std::to_string(x + 1) + "," + std::to_string(y + 1)] =
            matrix_to_json(w.sigma(j, x, y));
  return json{{"birack", birack_to_json(w.birack())}, {"strands", w.strands()}, {"dim", w.dim()}, {"sigma", sigma}};
}

}  // namespace birackforge
