#pragma once

#include <cstdlib>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "birackforge/birack.hpp"
#include "birackforge/matrix.hpp"
#include "birackforge/qweight.hpp"
#include "birackforge/tangle.hpp"

namespace birackforge {

/// Braid weight: an m x m matrix sigma_j^{x,y} for each generator j in
/// 1..n-1 and each pair of birack elements.
template <class T>
class BraidWeight {
 public:
  /// `sigma[(j-1)*|X|^2 + x*|X| + y]`, elements 0-based.
  BraidWeight(Birack birack, int strands, int dim, std::vector<Matrix<T>> sigma)
      : birack_(std::move(birack)), strands_(strands), dim_(dim), sigma_(std::move(sigma)) {
    const std::size_t mm = static_cast<std::size_t>(birack_.size()) * birack_.size();
    if (strands_ < 2) throw ShapeError("braid weights need at least 2 strands");
    if (dim_ < 1) throw ShapeError("braid weight dimension must be positive");
    if (sigma_.size() != mm * static_cast<std::size_t>(strands_ - 1))
      throw ShapeError("sigma table needs " + std::to_string(mm * (strands_ - 1)) + " matrices");
    for (const auto& s : sigma_)
      if (s.rows() != static_cast<std::size_t>(dim_) || s.cols() != static_cast<std::size_t>(dim_))
        throw ShapeError("sigma matrix is " + s.shape_string() + ", expected " + std::to_string(dim_) + "x" +
                         std::to_string(dim_));
    inv_.resize(sigma_.size());
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
      try {
        inv_[i] = inverse(sigma_[i]);
      } catch (const NotInvertibleOverRing&) {
      }
    }
  }

  const Birack& birack() const { return birack_; }
  int strands() const { return strands_; }
  int dim() const { return dim_; }
  const std::vector<Matrix<T>>& table() const { return sigma_; }

  /// j is 1-based.
  const Matrix<T>& sigma(int j, Element x, Element y) const { return sigma_[index(j, x, y)]; }
  bool invertible(int j, Element x, Element y) const { return inv_[index(j, x, y)].has_value(); }
  const Matrix<T>& sigma_inv(int j, Element x, Element y) const {
    const auto& inv = inv_[index(j, x, y)];
    if (!inv)
      throw NotInvertibleOverRing("sigma_" + std::to_string(j) + "^{" + std::to_string(x + 1) + "," +
                                  std::to_string(y + 1) + "} is not invertible");
    return *inv;
  }

 private:
  std::size_t index(int j, Element x, Element y) const {
    const int m = birack_.size();
    return static_cast<std::size_t>((j - 1) * m * m + x * m + y);
  }

  Birack birack_;
  int strands_, dim_;
  std::vector<Matrix<T>> sigma_;
  std::vector<std::optional<Matrix<T>>> inv_;
};

/// Relations checked: "invertible", "braid", "far-commutativity" (|j-k| >= 2).
/// `literal_reading` reports commutativity for |j-k| < 2, which the
/// standard braid presentation does not impose; it never affects ok().
struct BraidReport {
  std::vector<AxiomCheck> checks;
  AxiomCheck literal_reading;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
  }
};

template <class T>
std::optional<std::pair<Matrix<T>, Matrix<T>>> braid_relation_instance(const BraidWeight<T>& w, int j, Element x,
                                                                       Element y, Element z) {
  const Birack& b = w.birack();
  const Element yx = b.up(x, y), xy = b.down(x, y);
  const Element zy = b.up(y, z), yz = b.down(y, z);
  Matrix<T> lhs = w.sigma(j, x, y) * w.sigma(j + 1, xy, z) * w.sigma(j, yx, b.up(xy, z));
  Matrix<T> rhs = w.sigma(j + 1, y, z) * w.sigma(j, x, zy) * w.sigma(j + 1, b.down(x, zy), yz);
  if (lhs == rhs) return std::nullopt;
  return std::pair{std::move(lhs), std::move(rhs)};
}

template <class T>
BraidReport verify_braid_weight(const BraidWeight<T>& w) {
  const int m = w.birack().size();
  const int n = w.strands();
  BraidReport r;
  AxiomCheck inv, braid, far;
  inv.axiom = "invertible";
  braid.axiom = "braid";
  far.axiom = "far-commutativity";
  r.literal_reading.axiom = "commutativity |j-k|<2";
  for (int j = 1; j < n && inv.passed; ++j)
    for (int x = 0; x < m && inv.passed; ++x)
      for (int y = 0; y < m && inv.passed; ++y)
        if (!w.invertible(j, x, y)) detail::record(inv, {j - 1, x, y}, w.sigma(j, x, y), w.sigma(j, x, y));
  for (int j = 1; j + 1 < n && braid.passed; ++j)
    for (int x = 0; x < m && braid.passed; ++x)
      for (int y = 0; y < m && braid.passed; ++y)
        for (int z = 0; z < m && braid.passed; ++z)
          if (auto bad = braid_relation_instance(w, j, x, y, z)) detail::record(braid, {j - 1, x, y, z}, bad->first, bad->second);
  for (int j = 1; j < n; ++j)
    for (int k = 1; k < n; ++k) {
      AxiomCheck& c = std::abs(j - k) >= 2 ? far : r.literal_reading;
      for (int x = 0; x < m && c.passed; ++x)
        for (int y = 0; y < m && c.passed; ++y)
          for (int u = 0; u < m && c.passed; ++u)
            for (int v = 0; v < m && c.passed; ++v) {
              Matrix<T> lhs = w.sigma(j, x, y) * w.sigma(k, u, v);
              Matrix<T> rhs = w.sigma(k, u, v) * w.sigma(j, x, y);
              if (lhs != rhs) detail::record(c, {j - 1, k - 1, x, y, u, v}, lhs, rhs);
            }
    }
  r.checks = {inv, braid, far};
  return r;
}

/// Product in word order with incoming labels `bottom`; negative letters use
/// (sigma_j^{u,v})^-1 with (u,v) = B^-1 of the incoming labels.
template <class T>
Matrix<T> evaluate_braid(const BraidWord& word, const std::vector<Element>& bottom, const BraidWeight<T>& w,
                         std::vector<Element>* top = nullptr) {
  if (static_cast<int>(bottom.size()) != word.strands) throw ShapeError("labeling does not match the strand count");
  if (word.strands > w.strands()) throw ShapeError("braid has more strands than the weight");
  std::vector<Element> labels = bottom;
  Matrix<T> acc = Matrix<T>::identity(static_cast<std::size_t>(w.dim()));
  bool first = true;
  for (int g : word.word) {
    const int j = std::abs(g);
    const Element x = labels[j - 1], y = labels[j];
    Matrix<T> factor;
    if (g > 0) {
      factor = w.sigma(j, x, y);
      std::tie(labels[j - 1], labels[j]) = w.birack().apply(x, y);
    } else {
      auto [u, v] = w.birack().apply_inverse(x, y);
      factor = w.sigma_inv(j, u, v);
      labels[j - 1] = u;
      labels[j] = v;
    }
    acc = first ? factor : acc * factor;
    first = false;
  }
  if (top) *top = labels;
  return acc;
}

/// Bottom label tuples of closure labelings, lexicographic.
inline std::vector<std::vector<Element>> closure_labelings(const BraidWord& word, const Birack& b) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> labels(static_cast<std::size_t>(word.strands), 0);
  while (true) {
    std::vector<Element> cur = labels;
    for (int g : word.word) {
      const int j = std::abs(g);
      auto [u, v] = g > 0 ? b.apply(cur[j - 1], cur[j]) : b.apply_inverse(cur[j - 1], cur[j]);
      cur[j - 1] = u;
      cur[j] = v;
    }
    if (cur == labels) out.push_back(labels);
    std::size_t i = labels.size();
    while (i > 0 && labels[i - 1] == b.size() - 1) labels[--i] = 0;
    if (i == 0) break;
    ++labels[i - 1];
  }
  return out;
}

/// Multiset of traces over all closure labelings.
template <class T>
SignatureMultiset<T> phi_mw(const BraidWord& word, const BraidWeight<T>& w) {
  SignatureMultiset<T> out;
  for (const auto& f : closure_labelings(word, w.birack())) {
    Matrix<T> m = evaluate_braid(word, f, w);
    out.add(Matrix<T>(1, 1, {m.trace()}));
  }
  return out;
}

using PolyBraidWeight = BraidWeight<LaurentPoly>;

}  // namespace birackforge
