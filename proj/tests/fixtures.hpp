#pragma once

#include <string>
#include <vector>

#include "birackforge/birack.hpp"
#include "birackforge/bweight.hpp"
#include "birackforge/qweight.hpp"
#include "birackforge/tangle.hpp"

namespace fixtures {

using namespace birackforge;
using P = LaurentPoly;
using Rows = std::vector<std::vector<std::string>>;

inline Matrix<P> mat(const VarList& vars, const Rows& rows) {
  std::vector<P> data;
  for (const auto& r : rows)
    for (const auto& e : r) data.push_back(P::parse(e, vars));
  return Matrix<P>(rows.size(), rows.front().size(), std::move(data));
}

inline Birack singleton() { return Birack::from_matrix({{1}}, {{1}}); }
inline Birack ex0() { return Birack::from_matrix({{1, 1}, {2, 2}}, {{2, 2}, {1, 1}}); }
inline Birack hopf_birack() { return Birack::from_matrix({{2, 2, 2}, {1, 1, 1}, {3, 3, 3}}, {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}); }
/// sigma = tau = (1 2) on two elements.
inline Birack flip() { return Birack::from_matrix({{2, 2}, {1, 1}}, {{2, 2}, {1, 1}}); }

inline VarList kauffman_vars() { return make_vars({"A"}); }

/// The Kauffman data copied onto every pair of `b`. The kink scalar is the
/// product over N kinks, (-A^3)^N, unless given.
inline PolyWeight kauffman(const Birack& b, const std::string& delta = "") {
  auto A = kauffman_vars();
  auto X = mat(A, {{"A", "0", "0", "0"}, {"0", "0", "A^-1", "0"}, {"0", "A^-1", "A-A^-3", "0"}, {"0", "0", "0", "A"}});
  auto N = mat(A, {{"0", "A", "-A^-1", "0"}});
  auto U = mat(A, {{"0"}, {"-A"}, {"A^-1"}, {"0"}});
  const std::size_t m = static_cast<std::size_t>(b.size());
  return PolyWeight(b, 2, std::vector<Matrix<P>>(m * m, X), std::vector<Matrix<P>>(m, N),
                    std::vector<Matrix<P>>(m, U),
                    delta.empty() ? P::parse("-A^3", A).pow(b.rank()) : P::parse(delta, A));
}

inline VarList flip_vars() { return make_vars({"a", "b", "n"}); }

inline Matrix<P> flip_x(bool same) {
  auto v = flip_vars();
  if (same) return mat(v, {{"0", "0", "0", "b^-1"}, {"0", "a", "0", "0"}, {"0", "0", "a", "0"}, {"b^-1", "0", "0", "0"}});
  return mat(v, {{"0", "0", "0", "b"}, {"0", "a^-1", "0", "0"}, {"0", "0", "a^-1", "0"}, {"b", "0", "0", "0"}});
}

inline PolyWeight flip_weight() {
  auto v = flip_vars();
  auto N1 = mat(v, {{"0", "n", "-n", "0"}});
  auto N2 = mat(v, {{"0", "-n", "n", "0"}});
  auto U1 = mat(v, {{"0"}, {"-n^-1"}, {"n^-1"}, {"0"}});
  auto U2 = mat(v, {{"0"}, {"n^-1"}, {"-n^-1"}, {"0"}});
  return PolyWeight(flip(), 2, {flip_x(true), flip_x(false), flip_x(false), flip_x(true)}, {N1, N2}, {U1, U2},
                    P::parse("-a^-1", v));
}

inline VarList braid_vars() { return make_vars({"w", "x", "y", "z"}); }

/// Antidiagonal [[0,1],[v,0]] with v read from `names` in (j, x, y) order.
inline PolyBraidWeight antidiag_weight(const std::vector<std::string>& names) {
  auto v = braid_vars();
  std::vector<Matrix<P>> table;
  for (const auto& name : names) table.push_back(mat(v, {{"0", "1"}, {name, "0"}}));
  return PolyBraidWeight(flip(), 3, 2, std::move(table));
}

inline PolyBraidWeight reference_braid_weight() { return antidiag_weight({"x", "y", "z", "w", "w", "z", "y", "x"}); }

inline SlicedDiagram unknot() { return parse_diagram("cup / cap"); }
inline SlicedDiagram hopf() { return parse_diagram("cup ; cup / id xpos1 id / id xpos1 id / cap ; cap"); }
inline SlicedDiagram trefoil() { return braid_closure(BraidWord{2, {1, 1, 1}}); }
inline SlicedDiagram mirror_trefoil() { return braid_closure(BraidWord{2, {-1, -1, -1}}); }

}  // namespace fixtures
