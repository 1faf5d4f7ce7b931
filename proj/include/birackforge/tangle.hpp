#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "birackforge/errors.hpp"

namespace birackforge {

enum class Piece { Cup, Cap, Xpos, Xneg };

/// One elementary slice: a single piece at 0-based strand position `pos`,
/// identities on every other strand. Crossings and caps consume strands
/// pos and pos+1 of the slice input; cups create strands pos and pos+1 of
/// the slice output.
struct Slice {
  Piece piece;
  int pos;

  int in_span() const { return piece == Piece::Cup ? 0 : 2; }
  int out_span() const { return piece == Piece::Cap ? 0 : 2; }
  bool is_crossing() const { return piece == Piece::Xpos || piece == Piece::Xneg; }
  friend bool operator==(const Slice& a, const Slice& b) { return a.piece == b.piece && a.pos == b.pos; }
};

/**
 * Blackboard-framed unoriented tangle cut into horizontal slices.
 *
 * Multi-piece slices from the text grammar are expanded into consecutive
 * elementary slices; evaluation treats a piece at `pos` as I^{pos} (x) P (x) I^{rest},
 * which agrees with the Kronecker product of a full slice by the
 * interchange law. Level i is the row of strands below slice i; level 0 is
 * the bottom boundary and level slices.size() the top boundary.
 */
class SlicedDiagram {
 public:
  SlicedDiagram() = default;
  SlicedDiagram(int boundary_in, std::vector<Slice> slices);

  int boundary_in() const { return boundary_in_; }
  int boundary_out() const { return widths_.back(); }
  bool is_closed() const { return boundary_in_ == 0 && boundary_out() == 0; }
  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t level_count() const { return widths_.size(); }
  int width(std::size_t level) const { return widths_[level]; }
  std::size_t crossing_count() const;

  /// One elementary slice per `/`-group, e.g. "cup1 / xpos1 / cap1".
  std::string to_string() const;

  friend bool operator==(const SlicedDiagram& a, const SlicedDiagram& b) {
    return a.boundary_in_ == b.boundary_in_ && a.slices_ == b.slices_;
  }

 private:
  int boundary_in_ = 0;
  std::vector<Slice> slices_;
  std::vector<int> widths_{0};
};

/// Slice grammar: `/` separates slices; pieces `id`, `cup`, `cap`, `xpos`, `xneg`,
/// optionally suffixed by a 1-based strand position; `;` is ignored. A slice
/// with a single positioned piece places it at that position with identities
/// elsewhere; otherwise pieces are laid out left to right and must cover
/// the slice's input width exactly.
SlicedDiagram parse_diagram(std::string_view text, int boundary_in = 0);

struct BraidWord {
  int strands = 1;
  std::vector<int> word;  // +-(1..strands-1)
};

/// Whitespace-separated signed generator indices, e.g. "1 1 1 2" or "1 -1".
BraidWord parse_braid(std::string_view text, int strands);
std::string braid_to_string(const BraidWord& b);

/// Nested cups, the braid on the left strands, nested caps; return strands
/// run on the right.
SlicedDiagram braid_closure(const BraidWord& b);

/// A node is a strand position on a level.
struct Node {
  int level;
  int pos;
  friend bool operator==(const Node& a, const Node& b) { return a.level == b.level && a.pos == b.pos; }
};

struct ComponentInfo {
  int count = 0;
  std::vector<bool> closed;        // per component
  std::vector<Node> first_node;    // first node in bottom-to-top, left-to-right order
  /// Signed self-crossing count per component; 0 for open components.
  std::vector<int> framing;
  /// Component id of each node, indexed [level][pos].
  std::vector<std::vector<int>> node_component;

  int closed_count() const;
  /// Framing restricted to closed components, in component order.
  std::vector<int> closed_framing() const;
  std::vector<int> closed_ids() const;
};

ComponentInfo trace_components(const SlicedDiagram& d);

/// Semiarc id of every node (nodes joined by identities, cups and caps),
/// plus the semiarc count.
struct SemiarcMap {
  int count = 0;
  std::vector<std::vector<int>> node_semiarc;
};
SemiarcMap semiarcs(const SlicedDiagram& d);

/// Inserts |kinks[k]| kinks (cup, crossing, cap) of the sign of kinks[k]
/// into component k at its first node. `kinks` is indexed by component id and must have one
/// entry per component; open components must get 0.
SlicedDiagram insert_kinks(const SlicedDiagram& d, const std::vector<int>& kinks);

/// Positive (sign > 0) or negative kink slices to the right of strand `pos`.
std::vector<Slice> kink_slices(int pos, int sign);

enum class Move {
  RII,          // crossing followed by its inverse
  RIII,         // sigma_k sigma_{k+1} sigma_k <-> sigma_{k+1} sigma_k sigma_{k+1}, all one sign
  FramedRI,     // positive kink next to a negative kink
  PhoneCord,    // N like-signed kinks
  Zigzag,       // cup/cap snake on a single strand
  Interchange,  // swap two consecutive slices with disjoint support
  CapSlide,     // [X at k+1, cap at k] <-> [X^-1 at k, cap at k+1]
};

enum class MoveDirection { Insert, Delete };

/// Where and how to apply a move.
///  * Insert moves act on strand `pos` (and `pos+1` for RII) of `level`.
///  * Delete moves and RIII/Interchange/CapSlide match slices starting at index `level`.
///  * `sign` picks the crossing sign for RII/RIII/PhoneCord inserts and the
///    kink order for FramedRI (+1: positive kink first) or the snake side for
///    Zigzag (+1: cup to the right).
///  * `count` is N for PhoneCord.
struct MoveSite {
  Move move;
  MoveDirection direction = MoveDirection::Insert;
  int level = 0;
  int pos = 0;
  int sign = 1;
  int count = 1;
};

SlicedDiagram apply_framed_move(const SlicedDiagram& d, const MoveSite& site);

/// Every site at which `move` can be applied in direction `dir` (insertions
/// list all strand positions of every level).
std::vector<MoveSite> move_sites(const SlicedDiagram& d, Move move, MoveDirection dir, int count = 1);

struct RandomMoveOptions {
  int phone_cord_n = 1;        // N for phone-cord moves (the birack rank)
  int max_width = 8;           // moves that would exceed this width are skipped
  std::size_t max_slices = 48;
  bool allow_cap_slide = true;
};

/// Applies `steps` randomly chosen moves (both directions where a delete
/// site exists) and returns the applied sites in order.
std::vector<MoveSite> random_moves(SlicedDiagram& d, std::mt19937_64& rng, int steps,
                                   const RandomMoveOptions& opt = {});

std::string move_name(Move m);
std::optional<Move> parse_move_name(std::string_view name);

}  // namespace birackforge
