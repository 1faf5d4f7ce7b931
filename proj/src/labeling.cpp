#include "birackforge/labeling.hpp"

#include "birackforge/parallel.hpp"

namespace birackforge {

namespace {

class Enumerator {
 public:
  Enumerator(const SlicedDiagram& d, const Birack& b) : d_(d), b_(b), rows_(d.level_count()) {}

  // Runs the search with the first free variable pinned to `first`, or
  // unrestricted when first < 0.
  std::vector<Labeling> run(const std::optional<std::vector<Element>>& bottom, int first) {
    out_.clear();
    first_ = first;
    if (bottom) {
      rows_[0] = *bottom;
      slices_from(0);
    } else {
      rows_[0].assign(d_.boundary_in(), 0);
      choose_bottom(0);
    }
    return std::move(out_);
  }

 private:
  // Values tried at the next choice point; the pin applies only to the first.
  std::pair<int, int> range() {
    if (first_ >= 0) {
      int v = first_;
      first_ = -1;
      return {v, v + 1};
    }
    return {0, b_.size()};
  }

  void choose_bottom(int p) {
    if (p == d_.boundary_in()) {
      slices_from(0);
      return;
    }
    auto [lo, hi] = range();
    for (int v = lo; v < hi; ++v) {
      rows_[0][p] = v;
      choose_bottom(p + 1);
    }
  }

  void slices_from(std::size_t i) {
    if (i == d_.slices().size()) {
      out_.push_back(Labeling{rows_});
      return;
    }
    const Slice& s = d_.slices()[i];
    const auto& row = rows_[i];
    auto& next = rows_[i + 1];
    const auto k = static_cast<std::ptrdiff_t>(s.pos);
    switch (s.piece) {
      case Piece::Cup: {
        auto [lo, hi] = range();
        for (int v = lo; v < hi; ++v) {
          next.assign(row.begin(), row.begin() + k);
          next.push_back(v);
          next.push_back(v);
          next.insert(next.end(), row.begin() + k, row.end());
          slices_from(i + 1);
        }
        return;
      }
      case Piece::Cap:
        if (row[s.pos] != row[s.pos + 1]) return;
        next.assign(row.begin(), row.begin() + k);
        next.insert(next.end(), row.begin() + k + 2, row.end());
        slices_from(i + 1);
        return;
      case Piece::Xpos:
      case Piece::Xneg: {
        next = row;
        auto [u, v] = s.piece == Piece::Xpos ? b_.apply(row[s.pos], row[s.pos + 1])
                                             : b_.apply_inverse(row[s.pos], row[s.pos + 1]);
        next[s.pos] = u;
        next[s.pos + 1] = v;
        slices_from(i + 1);
        return;
      }
    }
  }

  const SlicedDiagram& d_;
  const Birack& b_;
  std::vector<std::vector<Element>> rows_;
  std::vector<Labeling> out_;
  int first_ = -1;
};

}  // namespace

std::vector<Labeling> enumerate_labelings(const SlicedDiagram& d, const Birack& b,
                                          const std::optional<std::vector<Element>>& bottom, int workers) {
  if (bottom) {
    if (static_cast<int>(bottom->size()) != d.boundary_in())
      throw ShapeError("boundary labeling has " + std::to_string(bottom->size()) + " labels for " +
                       std::to_string(d.boundary_in()) + " strands");
    for (Element e : *bottom)
      if (e < 0 || e >= b.size()) throw DomainError("boundary label out of range");
  }
  const bool first_is_choice = bottom ? (!d.slices().empty() && d.slices()[0].piece == Piece::Cup)
                                      : (d.boundary_in() > 0 || (!d.slices().empty() && d.slices()[0].piece == Piece::Cup));
  if (workers <= 1 || !first_is_choice) return Enumerator(d, b).run(bottom, -1);

  std::vector<std::vector<Labeling>> parts(b.size());
  parallel_for(parts.size(), workers, [&](std::size_t v) { parts[v] = Enumerator(d, b).run(bottom, static_cast<int>(v)); });
  std::vector<Labeling> all;
  for (auto& p : parts)
    for (auto& f : p) all.push_back(std::move(f));
  return all;
}

bool is_labeling(const SlicedDiagram& d, const Birack& b, const Labeling& f) {
  if (f.levels.size() != d.level_count()) return false;
  for (std::size_t l = 0; l < d.level_count(); ++l) {
    if (static_cast<int>(f.levels[l].size()) != d.width(l)) return false;
    for (Element e : f.levels[l])
      if (e < 0 || e >= b.size()) return false;
  }
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const Slice& s = d.slices()[i];
    const auto& lo = f.levels[i];
    const auto& hi = f.levels[i + 1];
    for (int p = 0; p < d.width(i); ++p) {
      if (p >= s.pos && p < s.pos + s.in_span()) continue;
      const int q = p < s.pos ? p : p - s.in_span() + s.out_span();
      if (lo[p] != hi[q]) return false;
    }
    switch (s.piece) {
      case Piece::Cup:
        if (hi[s.pos] != hi[s.pos + 1]) return false;
        break;
      case Piece::Cap:
        if (lo[s.pos] != lo[s.pos + 1]) return false;
        break;
      case Piece::Xpos:
      case Piece::Xneg: {
        auto expect = s.piece == Piece::Xpos ? b.apply(lo[s.pos], lo[s.pos + 1]) : b.apply_inverse(lo[s.pos], lo[s.pos + 1]);
        if (expect != std::pair{hi[s.pos], hi[s.pos + 1]}) return false;
        break;
      }
    }
  }
  return true;
}

std::optional<std::vector<Element>> semiarc_labels(const SlicedDiagram& d, const Labeling& f) {
  SemiarcMap m = semiarcs(d);
  std::vector<Element> labels(m.count, -1);
  for (std::size_t l = 0; l < d.level_count(); ++l)
    for (int p = 0; p < d.width(l); ++p) {
      Element& slot = labels[m.node_semiarc[l][p]];
      if (slot >= 0 && slot != f.levels[l][p]) return std::nullopt;
      slot = f.levels[l][p];
    }
  return labels;
}

long phi_basic(const SlicedDiagram& d, const Birack& b, int workers) {
  return static_cast<long>(enumerate_labelings(d, b, std::nullopt, workers).size());
}

std::vector<FramedVariant> framing_tile(const SlicedDiagram& d, int rank) {
  ComponentInfo info = trace_components(d);
  const std::vector<int> ids = info.closed_ids();
  std::vector<FramedVariant> tile;
  std::vector<int> residues(ids.size(), 0);
  while (true) {
    std::vector<int> kinks(info.count, 0);
    for (std::size_t i = 0; i < ids.size(); ++i) kinks[ids[i]] = residues[i];
    SlicedDiagram kinked = insert_kinks(d, kinks);
    tile.push_back({residues, trace_components(kinked).closed_framing(), std::move(kinked)});
    std::size_t i = residues.size();
    while (i > 0 && residues[i - 1] == rank - 1) residues[--i] = 0;
    if (i == 0) break;
    ++residues[i - 1];
  }
  return tile;
}

IntegralCount phi_integral(const SlicedDiagram& d, const Birack& b, int workers) {
  IntegralCount r;
  for (auto& v : framing_tile(d, b.rank())) {
    long c = phi_basic(v.diagram, b, workers);
    r.total += c;
    r.cells.push_back({v.residues, v.framing, c});
  }
  return r;
}

}  // namespace birackforge
