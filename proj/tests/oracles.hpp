#pragma once

// Independent reference implementations used to cross-check the library.
// They read only the raw slice list and the raw [U|L] tables.

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "birackforge/laurent_poly.hpp"
#include "birackforge/tangle.hpp"

namespace oracle {

using birackforge::LaurentPoly;
using birackforge::Piece;
using birackforge::Slice;
using birackforge::SlicedDiagram;
using Table = std::vector<std::vector<int>>;

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

/// Node numbering for a sliced diagram: node (level, pos) -> id.
struct Layout {
  std::vector<int> offset;  // first id of each level
  std::vector<int> width;
  int total = 0;

  explicit Layout(const SlicedDiagram& d) {
    int w = d.boundary_in();
    for (const Slice& s : d.slices()) {
      width.push_back(w);
      if (s.piece == Piece::Cup) w += 2;
      if (s.piece == Piece::Cap) w -= 2;
    }
    width.push_back(w);
    for (int x : width) {
      offset.push_back(total);
      total += x;
    }
  }
  int id(std::size_t level, int pos) const { return offset[level] + pos; }
};

/// Joins the passive strands of slice i and reports the active nodes.
inline void pass_through(const Layout& L, std::size_t i, const Slice& s, DisjointSets& ds) {
  const int in = s.piece == Piece::Cup ? 0 : 2;
  const int out = s.piece == Piece::Cap ? 0 : 2;
  for (int q = 0; q < L.width[i]; ++q) {
    if (q >= s.pos && q < s.pos + in) continue;
    const int up = q < s.pos ? q : q - in + out;
    ds.join(L.id(i, q), L.id(i + 1, up));
  }
}

/// Semiarcs: nodes joined by identities, cups and caps.
inline std::pair<DisjointSets, Layout> semiarc_sets(const SlicedDiagram& d) {
  Layout L(d);
  DisjointSets ds(L.total);
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const Slice& s = d.slices()[i];
    pass_through(L, i, s, ds);
    if (s.piece == Piece::Cup) ds.join(L.id(i + 1, s.pos), L.id(i + 1, s.pos + 1));
    if (s.piece == Piece::Cap) ds.join(L.id(i, s.pos), L.id(i, s.pos + 1));
  }
  return {std::move(ds), std::move(L)};
}

inline int semiarc_count(const SlicedDiagram& d) {
  auto [ds, L] = semiarc_sets(d);
  std::set<int> roots;
  for (int v = 0; v < L.total; ++v) roots.insert(ds.find(v));
  return static_cast<int>(roots.size());
}

/// B(x_i, x_j) = (x_{U[j][i]}, x_{L[i][j]}), 0-based in and out.
inline std::pair<int, int> raw_b(const Table& U, const Table& Lo, int x, int y) {
  return {U[y][x] - 1, Lo[x][y] - 1};
}

/// Counts labelings by trying every assignment of elements to semiarcs.
inline long brute_force_count(const SlicedDiagram& d, const Table& U, const Table& Lo) {
  const int n = static_cast<int>(U.size());
  auto [ds, L] = semiarc_sets(d);
  std::vector<int> root_index(static_cast<std::size_t>(L.total), -1);
  int arcs = 0;
  for (int v = 0; v < L.total; ++v)
    if (ds.find(v) == v) root_index[v] = arcs++;
  std::vector<int> arc_of(static_cast<std::size_t>(L.total));
  for (int v = 0; v < L.total; ++v) arc_of[v] = root_index[ds.find(v)];

  std::vector<int> assign(static_cast<std::size_t>(arcs), 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < d.slices().size() && ok; ++i) {
      const Slice& s = d.slices()[i];
      if (!s.is_crossing()) continue;
      const int a = assign[arc_of[L.id(i, s.pos)]], b = assign[arc_of[L.id(i, s.pos + 1)]];
      const int c = assign[arc_of[L.id(i + 1, s.pos)]], e = assign[arc_of[L.id(i + 1, s.pos + 1)]];
      // Xpos: top = B(bottom). Xneg: B(top) = bottom.
      auto [p, q] = s.piece == Piece::Xpos ? raw_b(U, Lo, a, b) : raw_b(U, Lo, c, e);
      ok = s.piece == Piece::Xpos ? (p == c && q == e) : (p == a && q == b);
    }
    if (ok) ++count;
    int k = 0;
    while (k < arcs && assign[k] == n - 1) assign[k++] = 0;
    if (k == arcs) break;
    ++assign[k];
  }
  return count;
}

/// Kauffman state sum d^{loops} * A^{(#A)-(#A^-1)}, normalized by (-A^3)^{-w}
/// where w is the signed count of self-crossings.
inline LaurentPoly kauffman_state_sum(const SlicedDiagram& d) {
  const auto vars = birackforge::make_vars({"A"});
  const LaurentPoly A = LaurentPoly::variable(vars, "A");
  const LaurentPoly Ainv = A.inverse();
  const LaurentPoly loop = -(A * A) - Ainv * Ainv;
  Layout L(d);
  std::vector<std::size_t> crossings;
  for (std::size_t i = 0; i < d.slices().size(); ++i)
    if (d.slices()[i].is_crossing()) crossings.push_back(i);

  // Strands through crossings determine which crossings are self-crossings.
  DisjointSets strands(L.total);
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const Slice& s = d.slices()[i];
    pass_through(L, i, s, strands);
    if (s.piece == Piece::Cup) strands.join(L.id(i + 1, s.pos), L.id(i + 1, s.pos + 1));
    if (s.piece == Piece::Cap) strands.join(L.id(i, s.pos), L.id(i, s.pos + 1));
    if (s.is_crossing()) {
      strands.join(L.id(i, s.pos), L.id(i + 1, s.pos + 1));
      strands.join(L.id(i, s.pos + 1), L.id(i + 1, s.pos));
    }
  }
  int writhe = 0;
  for (std::size_t i : crossings) {
    const Slice& s = d.slices()[i];
    if (strands.find(L.id(i, s.pos)) == strands.find(L.id(i, s.pos + 1))) writhe += s.piece == Piece::Xpos ? 1 : -1;
  }

  std::vector<bool> vertical(crossings.size());
  std::function<LaurentPoly(std::size_t)> recurse = [&](std::size_t k) -> LaurentPoly {
    if (k < crossings.size()) {
      const bool positive = d.slices()[crossings[k]].piece == Piece::Xpos;
      vertical[k] = true;
      LaurentPoly v = recurse(k + 1) * (positive ? A : Ainv);
      vertical[k] = false;
      LaurentPoly h = recurse(k + 1) * (positive ? Ainv : A);
      return v + h;
    }
    DisjointSets ds(L.total);
    std::size_t c = 0;
    for (std::size_t i = 0; i < d.slices().size(); ++i) {
      const Slice& s = d.slices()[i];
      pass_through(L, i, s, ds);
      const int a = L.id(i, s.pos), b = L.id(i, s.pos + 1);
      const int t = L.id(i + 1, s.pos), u = L.id(i + 1, s.pos + 1);
      if (s.piece == Piece::Cup) ds.join(t, u);
      if (s.piece == Piece::Cap) ds.join(a, b);
      if (s.is_crossing()) {
        if (vertical[c]) {
          ds.join(a, t);
          ds.join(b, u);
        } else {
          ds.join(a, b);
          ds.join(t, u);
        }
        ++c;
      }
    }
    std::set<int> roots;
    for (int v = 0; v < L.total; ++v) roots.insert(ds.find(v));
    return loop.pow(static_cast<int>(roots.size()));
  };
  const LaurentPoly kink = -(A * A * A);
  return recurse(0) * kink.pow(-writhe);
}

/// All involutory biracks on two elements, as [U|L] pairs, by checking the
/// axioms directly on each of the 24 bijections of the four pairs.
inline std::vector<std::pair<Table, Table>> naive_biracks_n2() {
  std::vector<std::pair<Table, Table>> out;
  std::array<int, 4> image{0, 1, 2, 3};
  do {
    auto B = [&](int x, int y) { return std::pair{image[x * 2 + y] / 2, image[x * 2 + y] % 2}; };
    bool ok = true;
    // (tau B)^2 = id
    for (int x = 0; x < 2 && ok; ++x)
      for (int y = 0; y < 2 && ok; ++y) {
        auto [p, q] = B(x, y);
        auto [r, s] = B(q, p);
        ok = s == x && r == y;
      }
    // both components of tau B Delta are bijections
    if (ok) ok = B(0, 0).first != B(1, 1).first && B(0, 0).second != B(1, 1).second;
    // set-theoretic Yang-Baxter
    for (int x = 0; x < 2 && ok; ++x)
      for (int y = 0; y < 2 && ok; ++y)
        for (int z = 0; z < 2 && ok; ++z) {
          std::array<int, 3> l{x, y, z}, r{x, y, z};
          auto step = [&](std::array<int, 3>& t, int j) { std::tie(t[j], t[j + 1]) = B(t[j], t[j + 1]); };
          step(l, 0), step(l, 1), step(l, 0);
          step(r, 1), step(r, 0), step(r, 1);
          ok = l == r;
        }
    if (!ok) continue;
    Table U(2, std::vector<int>(2)), Lo(2, std::vector<int>(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        U[j][i] = B(i, j).first + 1;
        Lo[i][j] = B(i, j).second + 1;
      }
    out.emplace_back(U, Lo);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

/// Multiplicative quandle 2-cocycle condition for the quandle x*y = `op[x][y]`:
/// phi(x,x) = 1 and phi(x,y) phi(x*y,z) = phi(x,z) phi(x*z, y*z).
template <class T>
bool is_quandle_cocycle(const std::vector<std::vector<T>>& phi, const Table& op, const T& one) {
  const int n = static_cast<int>(phi.size());
  for (int x = 0; x < n; ++x)
    if (!(phi[x][x] == one)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!(phi[x][y] * phi[op[x][y]][z] == phi[x][z] * phi[op[x][z]][op[y][z]])) return false;
  return true;
}

}  // namespace oracle
