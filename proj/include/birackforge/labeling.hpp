#pragma once

#include <optional>
#include <vector>

#include "birackforge/birack.hpp"
#include "birackforge/tangle.hpp"

namespace birackforge {

/// Labels of every node, indexed [level][pos], 0-based elements.
struct Labeling {
  std::vector<std::vector<Element>> levels;

  const std::vector<Element>& bottom() const { return levels.front(); }
  const std::vector<Element>& top() const { return levels.back(); }
  friend bool operator==(const Labeling& a, const Labeling& b) { return a.levels == b.levels; }
};

/**
 * All X-labelings of `d`, by propagation from the bottom: each bottom
 * strand and each cup is a free variable, crossings are forced, caps impose
 * equality of their legs. Free variables are taken in order of appearance
 * and values ascend, so the output order is deterministic. A fixed `bottom`
 * pins the bottom boundary labels.
 */
std::vector<Labeling> enumerate_labelings(const SlicedDiagram& d, const Birack& b,
                                          const std::optional<std::vector<Element>>& bottom = std::nullopt,
                                          int workers = 1);

/// Checks the crossing and cup/cap rules for a complete labeling.
bool is_labeling(const SlicedDiagram& d, const Birack& b, const Labeling& f);

/// Label of each semiarc; nullopt if the labeling disagrees along a semiarc.
std::optional<std::vector<Element>> semiarc_labels(const SlicedDiagram& d, const Labeling& f);

long phi_basic(const SlicedDiagram& d, const Birack& b, int workers = 1);

/// One cell of the framing tile: `residues` kinks added to each closed
/// component (in component order), giving `framing`.
struct FramedVariant {
  std::vector<int> residues;
  std::vector<int> framing;
  SlicedDiagram diagram;
};

/// The N^c diagrams obtained by adding 0..N-1 positive kinks to each closed
/// component, residue vectors in lexicographic order.
std::vector<FramedVariant> framing_tile(const SlicedDiagram& d, int rank);

struct FramingCount {
  std::vector<int> residues;
  std::vector<int> framing;
  long count;
};

struct IntegralCount {
  long total = 0;
  std::vector<FramingCount> cells;
};

IntegralCount phi_integral(const SlicedDiagram& d, const Birack& b, int workers = 1);

}  // namespace birackforge
