#include "birackforge/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "birackforge/parallel.hpp"

namespace birackforge {

double birack_candidate_count(int n) {
  double c = 1;
  for (int i = 2; i <= n * n; ++i) c *= i;
  return c;
}

std::vector<Element> birack_canonical_key(const Birack& b) {
  const int n = b.size();
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Element> best;
  do {
    std::vector<Element> key(2 * n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int i = sigma[x] * n + sigma[y];
        key[i] = sigma[b.up(x, y)];
        key[n * n + i] = sigma[b.down(x, y)];
      }
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

std::vector<Birack> enumerate_biracks(int n, bool dedup, int workers) {
  if (n < 1) throw DomainError("birack size must be positive");
  if (n > 3) throw UnsupportedSize("exhaustive enumeration supports n <= 3; use the constant-action or (t,s,r) families");
  const int pairs = n * n;
  std::vector<std::vector<Birack>> parts(static_cast<std::size_t>(pairs));
  parallel_for(parts.size(), workers, [&](std::size_t first) {
    std::vector<int> rest;
    for (int v = 0; v < pairs; ++v)
      if (v != static_cast<int>(first)) rest.push_back(v);
    std::vector<Element> up(pairs), down(pairs);
    do {
      up[0] = static_cast<int>(first) / n;
      down[0] = static_cast<int>(first) % n;
      for (int i = 1; i < pairs; ++i) {
        up[i] = rest[i - 1] / n;
        down[i] = rest[i - 1] % n;
      }
      if (!Birack::check_axioms(n, up, down)) parts[first].push_back(Birack::from_tables(n, up, down));
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  std::vector<Birack> all;
  std::set<std::vector<Element>> seen;
  for (auto& part : parts)
    for (auto& b : part) {
      if (dedup && !seen.insert(birack_canonical_key(b)).second) continue;
      all.push_back(std::move(b));
    }
  return all;
}

// ---------------------------------------------------------------- braid weights

namespace {

const char* const kVarPool[] = {"x", "y", "z", "w", "v", "u", "s", "t"};

void rgs_all(std::size_t slots, int max_vars, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(slots, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int used) {
    if (pos == slots) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= used + 1; ++v) {
      if (v == used + 1 && used == max_vars) break;
      cur[pos] = v;
      rec(pos + 1, std::max(used, v));
    }
  };
  rec(0, 0);
}

}  // namespace

std::string template_name(BraidTemplate t) {
  switch (t) {
    case BraidTemplate::Antidiag: return "antidiag";
    case BraidTemplate::Diag: return "diag";
    case BraidTemplate::Scalar: return "scalar";
  }
  return "?";
}

BraidTemplate parse_template(const std::string& name) {
  for (BraidTemplate t : {BraidTemplate::Antidiag, BraidTemplate::Diag, BraidTemplate::Scalar})
    if (template_name(t) == name) return t;
  throw ParseError("unknown template '" + name + "' (antidiag, diag, scalar)");
}

Matrix<LaurentPoly> template_matrix(BraidTemplate t, int dim, const VarList& vars, const std::string& var) {
  const std::size_t m = static_cast<std::size_t>(dim);
  const LaurentPoly one = LaurentPoly::constant(1, vars);
  const LaurentPoly c = var.empty() ? one : LaurentPoly::variable(vars, var);
  Matrix<LaurentPoly> r(m, m);
  switch (t) {
    case BraidTemplate::Antidiag:
      for (std::size_t i = 0; i < m; ++i) r(i, m - 1 - i) = i + 1 == m ? c : one;
      break;
    case BraidTemplate::Diag:
      for (std::size_t i = 0; i < m; ++i) r(i, i) = i + 1 == m ? c : one;
      break;
    case BraidTemplate::Scalar:
      for (std::size_t i = 0; i < m; ++i) r(i, i) = c;
      break;
  }
  return r;
}

double braid_candidate_count(const Birack& b, int strands, const BraidSearchSpec& spec) {
  const std::size_t slots = static_cast<std::size_t>(strands - 1) * b.size() * b.size();
  const int k_max = std::min(spec.max_vars, 8);
  // ways[k] = completions of the remaining suffix given k variables in use.
  std::vector<double> ways(static_cast<std::size_t>(k_max) + 1, 1.0);
  for (std::size_t pos = 0; pos < slots; ++pos) {
    std::vector<double> next(ways.size());
    for (int k = 0; k <= k_max; ++k) next[k] = (1 + k) * ways[k] + (k < k_max ? ways[k + 1] : 0.0);
    ways = std::move(next);
  }
  return ways[0];
}

std::vector<PolyBraidWeight> search_braid_weights(const Birack& b, int strands, const BraidSearchSpec& spec) {
  if (strands < 2) throw DomainError("braid weights need at least 2 strands");
  if (spec.shape == BraidTemplate::Antidiag && spec.dim < 2) throw DomainError("antidiag template needs dim >= 2");
  if (spec.max_vars < 0 || spec.max_vars > 8) throw DomainError("max_vars must be in 0..8");
  const double count = braid_candidate_count(b, strands, spec);
  if (count > spec.budget)
    throw RefusedBudget(count, "braid weight search would test " + std::to_string(static_cast<long long>(count)) +
                                   " candidates, above the budget");
  const std::size_t slots = static_cast<std::size_t>(strands - 1) * b.size() * b.size();
  std::vector<std::vector<int>> candidates;
  rgs_all(slots, spec.max_vars, candidates);

  std::vector<std::optional<PolyBraidWeight>> found(candidates.size());
  parallel_for(candidates.size(), spec.workers, [&](std::size_t i) {
    const auto& c = candidates[i];
    const int used = *std::max_element(c.begin(), c.end());
    std::vector<std::string> names(kVarPool, kVarPool + used);
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    VarList vars = make_vars(sorted);
    std::vector<Matrix<LaurentPoly>> per_value;
    per_value.push_back(template_matrix(spec.shape, spec.dim, vars, ""));
    for (const auto& n : names) per_value.push_back(template_matrix(spec.shape, spec.dim, vars, n));
    std::vector<Matrix<LaurentPoly>> table;
    for (int v : c) table.push_back(per_value[v]);
    PolyBraidWeight w(b, strands, spec.dim, std::move(table));
    if (verify_braid_weight(w).ok()) found[i] = std::move(w);
  });
  std::vector<PolyBraidWeight> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  return out;
}

// -------------------------------------------------------------- quantum weights

namespace {

// Mutable candidate exposing the accessors check_instance expects.
struct PartialWeight {
  using scalar_type = ModInt;

  PartialWeight(const Birack& b, int dim, int p) : b_(b), d_(dim), p_(p) {
    const std::size_t m = static_cast<std::size_t>(b.size());
    const std::size_t dd = static_cast<std::size_t>(dim) * dim;
    const ModInt zero(0, p);
    N_.assign(m, Matrix<ModInt>(1, dd, std::vector<ModInt>(dd, zero)));
    U_.assign(m, Matrix<ModInt>(dd, 1, std::vector<ModInt>(dd, zero)));
    X_.assign(m * m, Matrix<ModInt>(dd, dd, std::vector<ModInt>(dd * dd, zero)));
    Xinv_.assign(m * m, std::nullopt);
    delta_ = ModInt(1, p);
  }

  const Birack& birack() const { return b_; }
  int rank() const { return b_.rank(); }
  Matrix<ModInt> id() const { return Matrix<ModInt>::identity(static_cast<std::size_t>(d_), ModInt(1, p_)); }
  const ModInt& delta() const { return delta_; }
  const Matrix<ModInt>& N(Element x) const { return N_[x]; }
  const Matrix<ModInt>& U(Element x) const { return U_[x]; }
  const Matrix<ModInt>& X(Element x, Element y) const { return X_[x * b_.size() + y]; }
  bool invertible(Element x, Element y) const { return Xinv_[x * b_.size() + y].has_value(); }
  const Matrix<ModInt>& Xinv(Element x, Element y) const { return *Xinv_[x * b_.size() + y]; }

  const Birack& b_;
  int d_, p_;
  std::vector<Matrix<ModInt>> N_, U_, X_;
  std::vector<std::optional<Matrix<ModInt>>> Xinv_;
  ModInt delta_;
};

// Matrix ids: N_x = x, U_x = m + x, X_{x,y} = 2m + x*m + y.
struct SlotRef {
  int matrix;
  std::size_t entry;
};

struct Instance {
  AxiomSet which;
  Element x, y, z;
};

class QuantumSearch {
 public:
  QuantumSearch(const Birack& b, const QuantumSearchSpec& spec) : b_(b), spec_(spec) {
    const int m = b.size();
    const std::size_t dd = static_cast<std::size_t>(spec.dim) * spec.dim;
    if (!spec.cocycle)
      for (int x = 0; x < m; ++x) {
        for (std::size_t e = 0; e < dd; ++e) slots_.push_back({x, e});
        for (std::size_t e = 0; e < dd; ++e) slots_.push_back({m + x, e});
      }
    for (int i = 0; i < m * m; ++i)
      for (std::size_t e = 0; e < dd * dd; ++e) slots_.push_back({2 * m + i, e});

    last_slot_.assign(static_cast<std::size_t>(2 * m + m * m), -1);
    for (std::size_t s = 0; s < slots_.size(); ++s) last_slot_[slots_[s].matrix] = static_cast<int>(s);

    buckets_.assign(slots_.size() + 1, {});
    auto N = [&](Element x) { return x; };
    auto U = [&](Element x) { return m + x; };
    auto X = [&](Element x, Element y) { return 2 * m + x * m + y; };
    auto add = [&](Instance inst, std::initializer_list<int> mats) {
      int last = -1;
      for (int mat : mats) last = std::max(last, last_slot_[mat]);
      buckets_[static_cast<std::size_t>(last + 1)].push_back(inst);
    };
    // Order within a bucket follows insertion: V, II, IV, IV', III, I.
    for (int x = 0; x < m; ++x) add({AxiomSet::V, x, 0, 0}, {N(x), U(x)});
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) add({AxiomSet::II, x, y, 0}, {X(x, y)});
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        const Element yx = b.up(x, y), xy = b.down(x, y);
        add({AxiomSet::IV, x, y, 0}, {N(yx), N(y), X(x, y), X(xy, y)});
      }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        const Element yx = b.up(x, y), xy = b.down(x, y);
        add({AxiomSet::IVp, x, y, 0}, {N(x), N(xy), X(x, yx), X(x, y)});
      }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
          const Element yx = b.up(x, y), xy = b.down(x, y), zy = b.up(y, z), yz = b.down(y, z);
          add({AxiomSet::III, x, y, z},
              {X(yx, b.up(xy, z)), X(xy, z), X(x, y), X(b.down(x, zy), yz), X(x, zy), X(y, z)});
        }
    for (int x = 0; x < m; ++x) {
      const Element a = b.alpha()[x], ap = b.alpha()[b.pi()[x]];
      add({AxiomSet::I, x, 0, 0}, {N(a), X(a, x), U(a), N(ap), X(x, ap), U(ap)});
    }
  }

  // Solutions with the first slot pinned to `first` (or free when < 0).
  std::vector<PartialWeight> run(int first) {
    PartialWeight w(b_, spec_.dim, spec_.modulus);
    if (spec_.cocycle) {
      for (auto& n : w.N_) n(0, 0) = ModInt(1, spec_.modulus);
      for (auto& u : w.U_) u(0, 0) = ModInt(1, spec_.modulus);
    }
    out_.clear();
    if (!bucket_ok(w, 0)) return {};
    assign(w, 0, first);
    return std::move(out_);
  }

 private:
  bool bucket_ok(PartialWeight& w, std::size_t bucket) {
    for (const Instance& inst : buckets_[bucket]) {
      if (inst.which == AxiomSet::II) {
        auto& inv = w.Xinv_[inst.x * b_.size() + inst.y];
        try {
          inv = inverse(w.X(inst.x, inst.y));
        } catch (const NotInvertibleOverRing&) {
          inv.reset();
          return false;
        }
        continue;
      }
      if (check_instance(w, inst.which, inst.x, inst.y, inst.z)) return false;
    }
    return true;
  }

  Matrix<ModInt>& matrix(PartialWeight& w, int id) {
    const int m = b_.size();
    if (id < m) return w.N_[id];
    if (id < 2 * m) return w.U_[id - m];
    return w.X_[id - 2 * m];
  }

  void assign(PartialWeight& w, std::size_t s, int pinned) {
    if (s == slots_.size()) {
      finish(w);
      return;
    }
    Matrix<ModInt>& target = matrix(w, slots_[s].matrix);
    ModInt& entry = target(slots_[s].entry / target.cols(), slots_[s].entry % target.cols());
    int lo = 0, hi = spec_.modulus;
    if (pinned >= 0) lo = pinned, hi = pinned + 1;
    for (int v = lo; v < hi; ++v) {
      entry = ModInt(v, spec_.modulus);
      if (bucket_ok(w, s + 1)) assign(w, s + 1, -1);
    }
    entry = ModInt(0, spec_.modulus);
  }

  void finish(PartialWeight& w) {
    // delta from the kink at the first element, then VI for every element.
    if (!spec_.cocycle) {
      Matrix<ModInt> k = detail::kink(w, 0);
      if (b_.rank() == 2) k = detail::kink(w, b_.pi()[0]) * k;
      const ModInt d = k(0, 0);
      if (!d.is_unit() || k != w.id().scaled(d)) return;
      w.delta_ = d;
    }
    for (int x = 0; x < b_.size(); ++x)
      if (check_instance(w, AxiomSet::VI, x)) return;
    out_.push_back(w);
  }

  const Birack& b_;
  QuantumSearchSpec spec_;
  std::vector<SlotRef> slots_;
  std::vector<int> last_slot_;
  std::vector<std::vector<Instance>> buckets_;
  std::vector<PartialWeight> out_;
};

}  // namespace

double quantum_candidate_count(const Birack& b, const QuantumSearchSpec& spec) {
  const double m = b.size(), d2 = double(spec.dim) * spec.dim;
  const double free_slots = (spec.cocycle ? 0 : 2 * m * d2) + m * m * d2 * d2;
  return std::pow(double(spec.modulus), free_slots);
}

std::vector<ModWeight> search_quantum_weights(const Birack& b, const QuantumSearchSpec& spec) {
  const int p = spec.modulus;
  if (p < 2) throw DomainError("modulus must be a prime");
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (spec.dim < 1) throw DomainError("dimension must be positive");
  if (spec.cocycle && spec.dim != 1) throw DomainError("--cocycle applies to dimension 1 only");
  const double estimate = quantum_candidate_count(b, spec);
  if (estimate > spec.budget)
    throw RefusedBudget(estimate, "quantum weight search space has " + std::to_string(estimate) +
                                      " candidates, above the budget of " + std::to_string(spec.budget));

  std::vector<std::vector<PartialWeight>> parts(static_cast<std::size_t>(p));
  parallel_for(parts.size(), spec.workers, [&](std::size_t v) {
    QuantumSearch search(b, spec);
    parts[v] = search.run(static_cast<int>(v));
  });

  std::vector<ModWeight> out;
  for (auto& part : parts)
    for (auto& w : part) {
      ModWeight q(b, spec.dim, w.X_, w.N_, w.U_, w.delta_);
      if (!verify_weight(q).ok()) throw std::logic_error("search produced a candidate that fails verification");
      out.push_back(std::move(q));
    }
  return out;
}

}  // namespace birackforge
