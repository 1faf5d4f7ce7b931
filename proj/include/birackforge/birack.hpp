#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birackforge/errors.hpp"

namespace birackforge {

/// Birack elements are 0-based internally; every text/JSON boundary prints
/// and reads them 1-based, matching the [U|L] operation tables.
using Element = int;
using Permutation = std::vector<Element>;
using IntMatrix = std::vector<std::vector<int>>;

/// Result of checking the involutory birack axioms on a raw pair map.
struct AxiomFailure {
  std::string which;
  std::vector<int> witness;  // 1-based
  std::string message;
};

/**
 * Finite involutory birack on {0..n-1}.
 *
 * The map B(x, y) = (y^x, x_y) is stored as two tables indexed by the pair
 * index x*n + y, together with its inverse. Construction always validates:
 * B is a bijection, (tau B)^2 = id, the components of tau B Delta are
 * bijections, and B satisfies the set-theoretic Yang-Baxter equation.
 */
class Birack {
 public:
  /// From the [U|L] blocks, 1-based entries: B(x_i, x_j) = (x_{U[j][i]}, x_{L[i][j]}).
  static Birack from_matrix(const IntMatrix& upper, const IntMatrix& lower);
  /// From the two component tables over pair index x*n + y, 0-based.
  static Birack from_tables(int n, std::vector<Element> up, std::vector<Element> down);

  /// Validation without throwing; nullopt means all axioms hold.
  static std::optional<AxiomFailure> check_axioms(int n, const std::vector<Element>& up,
                                                  const std::vector<Element>& down);

  int size() const { return n_; }

  /// y^x, the first output of B(x, y).
  Element up(Element x, Element y) const { return up_[pair(x, y)]; }
  /// x_y, the second output of B(x, y).
  Element down(Element x, Element y) const { return down_[pair(x, y)]; }
  std::pair<Element, Element> apply(Element x, Element y) const { return {up(x, y), down(x, y)}; }
  std::pair<Element, Element> apply_inverse(Element x, Element y) const {
    int p = inv_[pair(x, y)];
    return {p / n_, p % n_};
  }
  /// Sideways map S = tau B tau = B^-1.
  std::pair<Element, Element> sideways(Element x, Element y) const { return apply_inverse(x, y); }

  const Permutation& alpha() const { return alpha_; }
  const Permutation& pi() const { return pi_; }
  int rank() const { return rank_; }
  bool is_bikei() const { return rank_ == 1; }
  bool is_kei() const;

  IntMatrix upper_block() const;  // U, 1-based
  IntMatrix lower_block() const;  // L, 1-based

  const std::vector<Element>& up_table() const { return up_; }
  const std::vector<Element>& down_table() const { return down_; }

  friend bool operator==(const Birack& a, const Birack& b) {
    return a.n_ == b.n_ && a.up_ == b.up_ && a.down_ == b.down_;
  }

 private:
  Birack() = default;
  int pair(Element x, Element y) const { return x * n_ + y; }

  int n_ = 0;
  std::vector<Element> up_, down_;
  std::vector<int> inv_;
  Permutation alpha_, pi_;
  int rank_ = 1;
};

/// B(x, y) = (sigma(y), tau(x)) for commuting involutions sigma, tau (0-based images).
Birack constant_action(int n, const Permutation& sigma, const Permutation& tau);

/// B(x, y) = (t y + s x, r x) on Z_n; residue v is element v (printed v+1).
Birack tsr_birack(int n, int t, int s, int r);

/// Order of a permutation.
int permutation_order(const Permutation& p);

/// 1-based cycle notation, e.g. "(1 2)" or "()".
std::string cycle_string(const Permutation& p);

}  // namespace birackforge
