#include "birackforge/birack.hpp"

#include <numeric>
#include <sstream>

namespace birackforge {

namespace {

std::string pair_str(int x, int y) { return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")"; }

bool is_permutation(int n, const Permutation& p) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (Element v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

}  // namespace

int permutation_order(const Permutation& p) {
  Permutation id(p.size());
  std::iota(id.begin(), id.end(), 0);
  Permutation q = p;
  int order = 1;
  while (q != id) {
    q = compose(p, q);
    ++order;
  }
  return order;
}

std::string cycle_string(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<Element>(i)) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

std::optional<AxiomFailure> Birack::check_axioms(int n, const std::vector<Element>& up,
                                                 const std::vector<Element>& down) {
  auto idx = [n](int x, int y) { return x * n + y; };
  auto B = [&](int x, int y) { return std::pair{up[idx(x, y)], down[idx(x, y)]}; };

  // B invertible
  std::vector<int> preimage(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = B(x, y);
      int img = idx(a, b);
      if (preimage[img] >= 0) {
        int px = preimage[img] / n, py = preimage[img] % n;
        return AxiomFailure{"invertible", {px + 1, py + 1, x + 1, y + 1},
                            "B is not injective: B" + pair_str(px, py) + " = B" + pair_str(x, y) + " = " +
                                pair_str(a, b)};
      }
      preimage[img] = idx(x, y);
    }

  // (i) (tau B)^2 = I
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = B(x, y);       // tau B (x,y) = (b, a)
      auto [c, d] = B(b, a);       // tau B (b,a) = (d, c)
      if (d != x || c != y)
        return AxiomFailure{"(i) (tau B)^2 = I", {x + 1, y + 1},
                            "(tau B)^2 " + pair_str(x, y) + " = " + pair_str(d, c)};
    }

  // (ii) components of tau B Delta are bijections
  for (int comp = 0; comp < 2; ++comp) {
    std::vector<int> hit(n, -1);
    for (int x = 0; x < n; ++x) {
      auto [a, b] = B(x, x);
      int v = comp == 0 ? b : a;
      if (hit[v] >= 0)
        return AxiomFailure{"(ii) tau B Delta bijective", {hit[v] + 1, x + 1},
                            "component " + std::to_string(comp + 1) + " of tau B Delta sends " +
                                std::to_string(hit[v] + 1) + " and " + std::to_string(x + 1) + " to " +
                                std::to_string(v + 1)};
      hit[v] = x;
    }
  }

  // (iii) (B x I)(I x B)(B x I) = (I x B)(B x I)(I x B)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto [l1, l2] = B(x, y);
        auto [l3, l4] = B(l2, z);
        auto [l5, l6] = B(l1, l3);
        auto [r1, r2] = B(y, z);
        auto [r3, r4] = B(x, r1);
        auto [r5, r6] = B(r4, r2);
        if (l5 != r3 || l6 != r5 || l4 != r6)
          return AxiomFailure{"(iii) Yang-Baxter", {x + 1, y + 1, z + 1},
                              "Yang-Baxter fails at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
                                  std::to_string(z + 1) + ")"};
      }
  return std::nullopt;
}

Birack Birack::from_tables(int n, std::vector<Element> up, std::vector<Element> down) {
  if (n <= 0) throw ParseError("birack size must be positive");
  if (static_cast<int>(up.size()) != n * n || static_cast<int>(down.size()) != n * n)
    throw ParseError("birack tables must have n^2 entries");
  for (int i = 0; i < n * n; ++i)
    if (up[i] < 0 || up[i] >= n || down[i] < 0 || down[i] >= n)
      throw ParseError("birack table entry out of range 1.." + std::to_string(n));
  if (auto fail = check_axioms(n, up, down)) throw AxiomViolation(fail->which, fail->witness, fail->message);

  Birack b;
  b.n_ = n;
  b.up_ = std::move(up);
  b.down_ = std::move(down);
  b.inv_.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) b.inv_[b.pair(b.up(x, y), b.down(x, y))] = b.pair(x, y);

  // S Delta (x) = tau B (x, x) = (x_x, x^x); alpha inverts x -> x^x, pi = (x -> x_x) o alpha.
  b.alpha_.assign(n, 0);
  for (int x = 0; x < n; ++x) b.alpha_[b.up(x, x)] = x;
  b.pi_.assign(n, 0);
  for (int x = 0; x < n; ++x) b.pi_[x] = b.down(b.alpha_[x], b.alpha_[x]);
  b.rank_ = permutation_order(b.pi_);
  return b;
}

Birack Birack::from_matrix(const IntMatrix& upper, const IntMatrix& lower) {
  const int n = static_cast<int>(upper.size());
  if (n == 0 || static_cast<int>(lower.size()) != n) throw ParseError("U and L must be non-empty and of equal size");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(upper[i].size()) != n || static_cast<int>(lower[i].size()) != n)
      throw ParseError("U and L must be square " + std::to_string(n) + "x" + std::to_string(n));
  std::vector<Element> up(n * n), down(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      up[i * n + j] = upper[j][i] - 1;
      down[i * n + j] = lower[i][j] - 1;
    }
  return from_tables(n, std::move(up), std::move(down));
}

bool Birack::is_kei() const {
  if (rank_ != 1) return false;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (down(x, y) != x) return false;
  return true;
}

IntMatrix Birack::upper_block() const {
  IntMatrix u(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) u[j][i] = up(i, j) + 1;
  return u;
}

IntMatrix Birack::lower_block() const {
  IntMatrix l(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) l[i][j] = down(i, j) + 1;
  return l;
}

Birack constant_action(int n, const Permutation& sigma, const Permutation& tau) {
  if (!is_permutation(n, sigma)) throw InvalidConstantAction("sigma is not a permutation of 1.." + std::to_string(n));
  if (!is_permutation(n, tau)) throw InvalidConstantAction("tau is not a permutation of 1.." + std::to_string(n));
  for (int x = 0; x < n; ++x) {
    if (sigma[sigma[x]] != x) throw InvalidConstantAction("sigma is not an involution: sigma^2 moves " + std::to_string(x + 1));
    if (tau[tau[x]] != x) throw InvalidConstantAction("tau is not an involution: tau^2 moves " + std::to_string(x + 1));
    if (sigma[tau[x]] != tau[sigma[x]])
      throw InvalidConstantAction("sigma and tau do not commute at " + std::to_string(x + 1));
  }
  std::vector<Element> up(n * n), down(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      up[x * n + y] = sigma[y];
      down[x * n + y] = tau[x];
    }
  return Birack::from_tables(n, std::move(up), std::move(down));
}

Birack tsr_birack(int n, int t, int s, int r) {
  if (n <= 0) throw InvalidTSR("modulus must be positive");
  auto mod = [n](long v) { return static_cast<int>(((v % n) + n) % n); };
  std::vector<std::string> violated;
  if (mod(long(s) * s - long(s) * (1 - long(t) * r)) != 0) violated.push_back("s^2-s(1-tr)");
  if (mod(1 - long(t) * t) != 0) violated.push_back("1-t^2");
  if (mod(1 - long(r) * r) != 0) violated.push_back("1-r^2");
  if (mod(long(t + r) * s) != 0) violated.push_back("(t+r)s");
  if (mod(long(1 - r) * s) != 0) violated.push_back("(1-r)s");
  if (!violated.empty()) {
    std::string msg = "relations nonzero in Z_" + std::to_string(n) + ":";
    for (const auto& v : violated) msg += " " + v;
    throw InvalidTSR(msg);
  }
  std::vector<Element> up(n * n), down(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      up[x * n + y] = mod(long(t) * y + long(s) * x);
      down[x * n + y] = mod(long(r) * x);
    }
  return Birack::from_tables(n, std::move(up), std::move(down));
}

}  // namespace birackforge
