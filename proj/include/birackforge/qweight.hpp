#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birackforge/birack.hpp"
#include "birackforge/labeling.hpp"
#include "birackforge/laurent_poly.hpp"
#include "birackforge/matrix.hpp"
#include "birackforge/mod_int.hpp"
#include "birackforge/parallel.hpp"
#include "birackforge/tangle.hpp"

namespace birackforge {

/**
 * Quantum weight (X, N, U, delta) over an involutory birack with m elements
 * and a d-dimensional V. X_{x,y} is d^2 x d^2, N_x is 1 x d^2, U_x is
 * d^2 x 1. T is LaurentPoly or ModInt.
 *
 * Construction checks shapes and that delta is a unit; the axioms are left
 * to verify_weight so that failures can be reported rather than thrown.
 */
template <class T>
class QuantumWeight {
 public:
  using scalar_type = T;

  QuantumWeight(Birack birack, int dim, std::vector<Matrix<T>> X, std::vector<Matrix<T>> N,
                std::vector<Matrix<T>> U, T delta)
      : birack_(std::move(birack)), dim_(dim), X_(std::move(X)), N_(std::move(N)), U_(std::move(U)),
        delta_(std::move(delta)) {
    const std::size_t m = static_cast<std::size_t>(birack_.size());
    const std::size_t dd = static_cast<std::size_t>(dim_) * dim_;
    if (dim_ < 1) throw ShapeError("weight dimension must be positive");
    if (X_.size() != m * m) throw ShapeError("X table needs " + std::to_string(m * m) + " blocks");
    if (N_.size() != m || U_.size() != m) throw ShapeError("N and U tables need " + std::to_string(m) + " blocks");
    for (std::size_t i = 0; i < X_.size(); ++i)
      if (X_[i].rows() != dd || X_[i].cols() != dd)
        throw ShapeError("X_" + pair_name(i) + " is " + X_[i].shape_string() + ", expected " + std::to_string(dd) +
                         "x" + std::to_string(dd));
    for (std::size_t x = 0; x < m; ++x) {
      if (N_[x].rows() != 1 || N_[x].cols() != dd)
        throw ShapeError("N_" + std::to_string(x + 1) + " is " + N_[x].shape_string() + ", expected 1x" + std::to_string(dd));
      if (U_[x].rows() != dd || U_[x].cols() != 1)
        throw ShapeError("U_" + std::to_string(x + 1) + " is " + U_[x].shape_string() + ", expected " + std::to_string(dd) + "x1");
    }
    if (!delta_.is_unit()) throw NotAUnit("delta = " + delta_.to_string() + " is not a unit");
    Xinv_.resize(X_.size());
    for (std::size_t i = 0; i < X_.size(); ++i) {
      try {
        Xinv_[i] = inverse(X_[i]);
      } catch (const NotInvertibleOverRing&) {
      }
    }
  }

  const Birack& birack() const { return birack_; }
  int dim() const { return dim_; }
  int rank() const { return birack_.rank(); }
  const T& delta() const { return delta_; }

  const Matrix<T>& X(Element x, Element y) const { return X_[index(x, y)]; }
  const Matrix<T>& N(Element x) const { return N_[x]; }
  const Matrix<T>& U(Element x) const { return U_[x]; }
  bool invertible(Element x, Element y) const { return Xinv_[index(x, y)].has_value(); }
  const Matrix<T>& Xinv(Element x, Element y) const {
    const auto& inv = Xinv_[index(x, y)];
    if (!inv) throw NotInvertibleOverRing("X_" + pair_name(index(x, y)) + " is not invertible");
    return *inv;
  }

  const std::vector<Matrix<T>>& X_table() const { return X_; }
  const std::vector<Matrix<T>>& N_table() const { return N_; }
  const std::vector<Matrix<T>>& U_table() const { return U_; }

  Matrix<T> id() const { return Matrix<T>::identity(static_cast<std::size_t>(dim_), one()); }
  T one() const { return delta_ * delta_.inverse(); }

 private:
  std::size_t index(Element x, Element y) const { return static_cast<std::size_t>(x * birack_.size() + y); }
  std::string pair_name(std::size_t i) const {
    const std::size_t m = static_cast<std::size_t>(birack_.size());
    return "{" + std::to_string(i / m + 1) + "," + std::to_string(i % m + 1) + "}";
  }

  Birack birack_;
  int dim_;
  std::vector<Matrix<T>> X_, N_, U_;
  std::vector<std::optional<Matrix<T>>> Xinv_;
  T delta_;
};

struct AxiomCheck {
  std::string axiom;              // "I", "II", "III", "IV", "IV'", "V", "VI"
  bool passed = true;
  std::vector<int> witness;       // 1-based elements of the first failure
  std::string lhs, rhs;           // the mismatching sides
};

struct WeightReport {
  std::vector<AxiomCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
  }
};

namespace detail {

template <class T>
void record(AxiomCheck& c, std::vector<int> witness, const Matrix<T>& lhs, const Matrix<T>& rhs) {
  if (!c.passed) return;
  c.passed = false;
  for (int& w : witness) w += 1;
  c.witness = std::move(witness);
  c.lhs = lhs.to_string();
  c.rhs = rhs.to_string();
}

// Kink map (N_a (x) I)(I (x) X_{a,x})(U_a (x) I) with a = alpha(x).
template <class W>
auto kink(const W& q, Element x) {
  const auto I = q.id();
  const Element a = q.birack().alpha()[x];
  return kron(q.N(a), I) * kron(I, q.X(a, x)) * kron(q.U(a), I);
}

}  // namespace detail

/// Axioms of a quantum weight; IVp is IV'.
enum class AxiomSet { I, II, III, IV, IVp, V, VI };

/// Checks axiom `which` for the given elements; returns nullopt on success or
/// the (lhs, rhs) pair on failure. Axiom II returns {X, X} on failure. W is
/// a QuantumWeight or anything with the same accessors.
template <class W, class T = typename W::scalar_type>
std::optional<std::pair<Matrix<T>, Matrix<T>>> check_instance(const W& q, AxiomSet which, Element x, Element y = 0,
                                                              Element z = 0) {
  const Birack& b = q.birack();
  const Matrix<T> I = q.id();
  auto differ = [](Matrix<T> l, Matrix<T> r) -> std::optional<std::pair<Matrix<T>, Matrix<T>>> {
    if (l == r) return std::nullopt;
    return std::pair{std::move(l), std::move(r)};
  };
  switch (which) {
    case AxiomSet::I: {
      const Element a = b.alpha()[x];
      const Element ap = b.alpha()[b.pi()[x]];
      return differ(kron(q.N(a), I) * kron(I, q.X(a, x)) * kron(q.U(a), I),
                    kron(I, q.N(ap)) * kron(q.X(x, ap), I) * kron(I, q.U(ap)));
    }
    case AxiomSet::II:
      if (q.invertible(x, y)) return std::nullopt;
      return std::pair{q.X(x, y), q.X(x, y)};
    case AxiomSet::III: {
      const Element yx = b.up(x, y), xy = b.down(x, y);
      const Element zy = b.up(y, z), yz = b.down(y, z);
      const Element z_xy = b.up(xy, z);
      const Element x_zy = b.down(x, zy);
      return differ(kron(q.X(yx, z_xy), I) * kron(I, q.X(xy, z)) * kron(q.X(x, y), I),
                    kron(I, q.X(x_zy, yz)) * kron(q.X(x, zy), I) * kron(I, q.X(y, z)));
    }
    case AxiomSet::IV: {
      const Element yx = b.up(x, y), xy = b.down(x, y);
      if (!q.invertible(xy, y)) return std::pair{q.X(xy, y), q.X(xy, y)};
      return differ(kron(q.N(yx), I) * kron(I, q.X(x, y)), kron(I, q.N(y)) * kron(q.Xinv(xy, y), I));
    }
    case AxiomSet::IVp: {
      const Element yx = b.up(x, y), xy = b.down(x, y);
      if (!q.invertible(x, yx)) return std::pair{q.X(x, yx), q.X(x, yx)};
      return differ(kron(q.N(x), I) * kron(I, q.Xinv(x, yx)), kron(I, q.N(xy)) * kron(q.X(x, y), I));
    }
    case AxiomSet::V: {
      Matrix<T> left = kron(I, q.N(x)) * kron(q.U(x), I);
      if (left != I) return std::pair{left, I};
      return differ(kron(q.N(x), I) * kron(I, q.U(x)), I);
    }
    case AxiomSet::VI: {
      Matrix<T> lhs = detail::kink(q, x);
      if (q.rank() == 2) lhs = detail::kink(q, b.pi()[x]) * lhs;
      return differ(lhs, I.scaled(q.delta()));
    }
  }
  return std::nullopt;
}

/// Exhaustive check of axioms I-VI exactly as stated, first witness per axiom.
template <class T>
WeightReport verify_weight(const QuantumWeight<T>& q) {
  const int m = q.birack().size();
  WeightReport r;
  const std::pair<AxiomSet, const char*> order[] = {{AxiomSet::I, "I"},   {AxiomSet::II, "II"}, {AxiomSet::III, "III"},
                                                    {AxiomSet::IV, "IV"}, {AxiomSet::IVp, "IV'"}, {AxiomSet::V, "V"},
                                                    {AxiomSet::VI, "VI"}};
  for (auto [which, name] : order) {
    AxiomCheck c;
    c.axiom = name;
    const int arity = which == AxiomSet::III ? 3 : (which == AxiomSet::II || which == AxiomSet::IV || which == AxiomSet::IVp) ? 2 : 1;
    for (int x = 0; x < m && c.passed; ++x)
      for (int y = 0; y < (arity >= 2 ? m : 1) && c.passed; ++y)
        for (int z = 0; z < (arity >= 3 ? m : 1) && c.passed; ++z) {
          if (auto bad = check_instance(q, which, x, y, z)) {
            std::vector<int> w{x, y, z};
            w.resize(static_cast<std::size_t>(arity));
            detail::record(c, w, bad->first, bad->second);
          }
        }
    r.checks.push_back(std::move(c));
  }
  return r;
}

/// Matrix of one piece in a labeled slice.
template <class T>
Matrix<T> piece_matrix(const QuantumWeight<T>& q, const Slice& s, const std::vector<Element>& below,
                       const std::vector<Element>& above) {
  switch (s.piece) {
    case Piece::Cup:
      return q.U(above[s.pos]);
    case Piece::Cap:
      return q.N(below[s.pos]);
    case Piece::Xpos:
      return q.X(below[s.pos], below[s.pos + 1]);
    case Piece::Xneg: {
      auto [u, v] = q.birack().apply_inverse(below[s.pos], below[s.pos + 1]);
      return q.Xinv(u, v);
    }
  }
  return {};
}

namespace detail {

inline std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Applies I^{pos} (x) P (x) I^{rest} to the rows of `state` without forming
// the Kronecker product. Row index digits are strands, leftmost most significant.
template <class T>
Matrix<T> apply_local(const Matrix<T>& state, const Matrix<T>& P, int dim, int width, const Slice& s) {
  const std::size_t d = static_cast<std::size_t>(dim);
  const std::size_t in_sz = ipow(d, s.in_span()), out_sz = ipow(d, s.out_span());
  const std::size_t suffix = ipow(d, width - s.pos - s.in_span());
  const std::size_t prefix = ipow(d, s.pos);
  const std::size_t cols = state.cols();
  Matrix<T> next(prefix * out_sz * suffix, cols);
  for (std::size_t a = 0; a < prefix; ++a)
    for (std::size_t mid = 0; mid < in_sz; ++mid)
      for (std::size_t c = 0; c < suffix; ++c) {
        const std::size_t row = (a * in_sz + mid) * suffix + c;
        for (std::size_t col = 0; col < cols; ++col) {
          const T& v = state(row, col);
          if (v.is_zero()) continue;
          for (std::size_t o = 0; o < out_sz; ++o) {
            const T& p = P(o, mid);
            if (!p.is_zero()) next((a * out_sz + o) * suffix + c, col) += p * v;
          }
        }
      }
  return next;
}

}  // namespace detail

/// Q(f): slice by slice local contraction, bottom to top. Returns a
/// d^{out} x d^{in} matrix (1x1 for closed diagrams).
template <class T>
Matrix<T> evaluate(const SlicedDiagram& d, const Labeling& f, const QuantumWeight<T>& q) {
  if (!is_labeling(d, q.birack(), f)) throw DomainError("labeling is not valid for this diagram and birack");
  Matrix<T> state = Matrix<T>::identity(detail::ipow(static_cast<std::size_t>(q.dim()), d.boundary_in()), q.one());
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const Slice& s = d.slices()[i];
    Matrix<T> P = piece_matrix(q, s, f.levels[i], f.levels[i + 1]);
    state = detail::apply_local(state, P, q.dim(), d.width(i), s);
  }
  return state;
}

/// Same value through explicit Kronecker products of whole slices.
template <class T>
Matrix<T> evaluate_by_kronecker(const SlicedDiagram& d, const Labeling& f, const QuantumWeight<T>& q) {
  if (!is_labeling(d, q.birack(), f)) throw DomainError("labeling is not valid for this diagram and birack");
  const std::size_t dim = static_cast<std::size_t>(q.dim());
  Matrix<T> acc = Matrix<T>::identity(detail::ipow(dim, d.boundary_in()), q.one());
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const Slice& s = d.slices()[i];
    Matrix<T> left = Matrix<T>::identity(detail::ipow(dim, s.pos), q.one());
    Matrix<T> right = Matrix<T>::identity(detail::ipow(dim, d.width(i) - s.pos - s.in_span()), q.one());
    Matrix<T> full = kron(kron(left, piece_matrix(q, s, f.levels[i], f.levels[i + 1])), right);
    acc = full * acc;
  }
  return acc;
}

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

/// delta^{-sum q_k} * value with w_k = q_k N + r_k, 0 <= r_k < N.
template <class T>
Matrix<T> normalize(const Matrix<T>& value, const std::vector<int>& framing, int rank, const T& delta) {
  int total = 0;
  for (int w : framing) total += floor_div(w, rank);
  if (total == 0) return value;
  return value.scaled(delta.pow(-total));
}

/// Multiset of signatures, canonical order by rendered string.
template <class T>
class SignatureMultiset {
 public:
  void add(const Matrix<T>& sig, long mult = 1) {
    auto [it, inserted] = entries_.try_emplace(sig.to_string(), sig, 0);
    it->second.second += mult;
  }
  void merge(const SignatureMultiset& o) {
    for (const auto& [k, v] : o.entries_) add(v.first, v.second);
  }

  /// (signature, multiplicity) in canonical order.
  std::vector<std::pair<Matrix<T>, long>> entries() const {
    std::vector<std::pair<Matrix<T>, long>> r;
    for (const auto& [k, v] : entries_) r.push_back(v);
    return r;
  }
  long size() const {
    long n = 0;
    for (const auto& [k, v] : entries_) n += v.second;
    return n;
  }
  bool all_scalar() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.second.first.rows() == 1 && e.second.first.cols() == 1; });
  }

  /// `{2×-A^2-A^-2, 1×[[1,0],[0,1]]}`; scalars print without brackets.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : entries_) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(v.second) + "×" + render(v.first);
    }
    return s + "}";
  }

  static std::string render(const Matrix<T>& m) {
    return m.rows() == 1 && m.cols() == 1 ? m(0, 0).to_string() : m.to_string();
  }

  friend bool operator==(const SignatureMultiset& a, const SignatureMultiset& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    auto i = a.entries_.begin();
    for (auto j = b.entries_.begin(); j != b.entries_.end(); ++i, ++j)
      if (i->first != j->first || i->second.second != j->second.second) return false;
    return true;
  }

 private:
  std::map<std::string, std::pair<Matrix<T>, long>> entries_;
};

/// Normalized signatures over all labelings of every framing-tile diagram.
template <class T>
SignatureMultiset<T> phi_qm(const SlicedDiagram& d, const QuantumWeight<T>& q, int workers = 1) {
  SignatureMultiset<T> out;
  for (const auto& v : framing_tile(d, q.rank())) {
    auto labelings = enumerate_labelings(v.diagram, q.birack(), std::nullopt, workers);
    std::vector<Matrix<T>> values(labelings.size());
    parallel_for(labelings.size(), workers, [&](std::size_t i) {
      values[i] = normalize(evaluate(v.diagram, labelings[i], q), v.framing, q.rank(), q.delta());
    });
    for (const auto& m : values) out.add(m);
  }
  return out;
}

/// `u^{-A^2-A^-2} + 3·u^{s}`.
template <class T>
std::string phi_q_polynomial(const SignatureMultiset<T>& m) {
  if (!m.all_scalar()) throw NotALink("signatures are not scalars; the diagram has open boundary");
  std::string s;
  for (const auto& [sig, mult] : m.entries()) {
    if (!s.empty()) s += " + ";
    if (mult != 1) s += std::to_string(mult) + "·";
    s += "u^{" + sig(0, 0).to_string() + "}";
  }
  return s.empty() ? "0" : s;
}

struct WeightClass {
  bool homogeneous = true;
  bool strongly_heterogeneous = false;
  /// ybe[x*m+y]: whether X_{x,y} alone satisfies the unlabeled Yang-Baxter equation.
  std::vector<bool> ybe;
};

template <class T>
WeightClass classify_weight(const QuantumWeight<T>& q) {
  WeightClass c;
  const int m = q.birack().size();
  for (int x = 0; x < m; ++x) {
    if (q.N(x) != q.N(0) || q.U(x) != q.U(0)) c.homogeneous = false;
    for (int y = 0; y < m; ++y)
      if (q.X(x, y) != q.X(0, 0)) c.homogeneous = false;
  }
  const Matrix<T> I = q.id();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const Matrix<T>& X = q.X(x, y);
      const bool ok = kron(I, X) * kron(X, I) * kron(I, X) == kron(X, I) * kron(I, X) * kron(X, I);
      c.ybe.push_back(ok);
      if (!ok) c.strongly_heterogeneous = true;
    }
  return c;
}

using PolyWeight = QuantumWeight<LaurentPoly>;
using ModWeight = QuantumWeight<ModInt>;

}  // namespace birackforge
