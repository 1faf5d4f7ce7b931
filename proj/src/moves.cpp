#include <algorithm>

#include "birackforge/tangle.hpp"

namespace birackforge {

namespace {

Piece crossing(int sign) { return sign > 0 ? Piece::Xpos : Piece::Xneg; }
Piece flipped(Piece p) { return p == Piece::Xpos ? Piece::Xneg : Piece::Xpos; }

bool slices_match(const std::vector<Slice>& s, std::size_t at, const std::vector<Slice>& pattern) {
  if (at + pattern.size() > s.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), s.begin() + static_cast<std::ptrdiff_t>(at));
}

std::vector<Slice> repeated_kinks(int pos, int sign, int count) {
  std::vector<Slice> out;
  for (int i = 0; i < count; ++i) {
    auto k = kink_slices(pos, sign);
    out.insert(out.end(), k.begin(), k.end());
  }
  return out;
}

[[noreturn]] void mismatch(const MoveSite& site, const std::string& why) {
  throw PatternMismatch(move_name(site.move) + " at level " + std::to_string(site.level) + ", strand " +
                        std::to_string(site.pos + 1) + ": " + why);
}

// Replacement for the slices starting at `at`, or nullopt if the move does
// not apply there.
struct Rewrite {
  std::size_t at;
  std::size_t erase;
  std::vector<Slice> insert;
};

std::optional<Rewrite> match_delete(const std::vector<Slice>& s, const MoveSite& site) {
  const std::size_t i = static_cast<std::size_t>(site.level);
  if (i >= s.size()) return std::nullopt;
  switch (site.move) {
    case Move::RII:
      if (i + 1 < s.size() && s[i].is_crossing() && s[i + 1].is_crossing() && s[i].pos == s[i + 1].pos &&
          s[i].piece != s[i + 1].piece)
        return Rewrite{i, 2, {}};
      return std::nullopt;
    case Move::FramedRI:
      if (s[i].piece != Piece::Cup || s[i].pos < 1) return std::nullopt;
      for (int sign : {1, -1}) {
        auto pattern = kink_slices(s[i].pos - 1, sign);
        auto second = kink_slices(s[i].pos - 1, -sign);
        pattern.insert(pattern.end(), second.begin(), second.end());
        if (slices_match(s, i, pattern)) return Rewrite{i, pattern.size(), {}};
      }
      return std::nullopt;
    case Move::PhoneCord:
      if (s[i].piece != Piece::Cup || s[i].pos < 1) return std::nullopt;
      for (int sign : {1, -1}) {
        auto pattern = repeated_kinks(s[i].pos - 1, sign, site.count);
        if (slices_match(s, i, pattern)) return Rewrite{i, pattern.size(), {}};
      }
      return std::nullopt;
    case Move::Zigzag:
      if (i + 1 < s.size() && s[i].piece == Piece::Cup && s[i + 1].piece == Piece::Cap &&
          (s[i + 1].pos == s[i].pos - 1 || s[i + 1].pos == s[i].pos + 1))
        return Rewrite{i, 2, {}};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<Rewrite> match_rewrite(const std::vector<Slice>& s, const MoveSite& site) {
  const std::size_t i = static_cast<std::size_t>(site.level);
  switch (site.move) {
    case Move::RIII: {
      if (i + 2 >= s.size()) return std::nullopt;
      const Slice &a = s[i], &b = s[i + 1], &c = s[i + 2];
      if (!a.is_crossing() || a.piece != b.piece || b.piece != c.piece || a.pos != c.pos) return std::nullopt;
      if (b.pos == a.pos + 1)
        return Rewrite{i, 3, {{a.piece, a.pos + 1}, {a.piece, a.pos}, {a.piece, a.pos + 1}}};
      if (b.pos == a.pos - 1)
        return Rewrite{i, 3, {{a.piece, a.pos - 1}, {a.piece, a.pos}, {a.piece, a.pos - 1}}};
      return std::nullopt;
    }
    case Move::Interchange: {
      if (i + 1 >= s.size()) return std::nullopt;
      const Slice& lo = s[i];
      const Slice& hi = s[i + 1];
      if (hi.pos + hi.in_span() <= lo.pos)
        return Rewrite{i, 2, {hi, {lo.piece, lo.pos + hi.out_span() - hi.in_span()}}};
      if (hi.pos >= lo.pos + lo.out_span())
        return Rewrite{i, 2, {{hi.piece, hi.pos - lo.out_span() + lo.in_span()}, lo}};
      return std::nullopt;
    }
    case Move::CapSlide: {
      if (i + 1 >= s.size()) return std::nullopt;
      const Slice& x = s[i];
      const Slice& cap = s[i + 1];
      if (!x.is_crossing() || cap.piece != Piece::Cap) return std::nullopt;
      if (x.pos == cap.pos + 1) return Rewrite{i, 2, {{flipped(x.piece), cap.pos}, {Piece::Cap, cap.pos + 1}}};
      if (x.pos == cap.pos - 1) return Rewrite{i, 2, {{flipped(x.piece), cap.pos}, {Piece::Cap, cap.pos - 1}}};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::string move_name(Move m) {
  switch (m) {
    case Move::RII: return "RII";
    case Move::RIII: return "RIII";
    case Move::FramedRI: return "framed-RI";
    case Move::PhoneCord: return "phone-cord";
    case Move::Zigzag: return "zigzag";
    case Move::Interchange: return "interchange";
    case Move::CapSlide: return "cap-slide";
  }
  return "?";
}

std::optional<Move> parse_move_name(std::string_view name) {
  for (Move m : {Move::RII, Move::RIII, Move::FramedRI, Move::PhoneCord, Move::Zigzag, Move::Interchange,
                 Move::CapSlide})
    if (move_name(m) == name) return m;
  if (name == "planar") return Move::Interchange;
  return std::nullopt;
}

SlicedDiagram apply_framed_move(const SlicedDiagram& d, const MoveSite& site) {
  std::vector<Slice> s = d.slices();
  const bool rewrite_only = site.move == Move::RIII || site.move == Move::Interchange || site.move == Move::CapSlide;

  if (!rewrite_only && site.direction == MoveDirection::Insert) {
    if (site.level < 0 || site.level >= static_cast<int>(d.level_count())) mismatch(site, "no such level");
    const int w = d.width(static_cast<std::size_t>(site.level));
    const int need = site.move == Move::RII ? 2 : 1;
    if (site.pos < 0 || site.pos + need > w) mismatch(site, "strand out of range for width " + std::to_string(w));
    if (site.move == Move::PhoneCord && site.count < 1) mismatch(site, "phone-cord needs N >= 1");
    std::vector<Slice> add;
    switch (site.move) {
      case Move::RII:
        add = {{crossing(site.sign), site.pos}, {crossing(-site.sign), site.pos}};
        break;
      case Move::FramedRI:
        add = kink_slices(site.pos, site.sign);
        for (const Slice& k : kink_slices(site.pos, -site.sign)) add.push_back(k);
        break;
      case Move::PhoneCord:
        add = repeated_kinks(site.pos, site.sign, site.count);
        break;
      case Move::Zigzag:
        if (site.sign > 0) add = {{Piece::Cup, site.pos + 1}, {Piece::Cap, site.pos}};
        else add = {{Piece::Cup, site.pos}, {Piece::Cap, site.pos + 1}};
        break;
      default:
        break;
    }
    s.insert(s.begin() + site.level, add.begin(), add.end());
    return SlicedDiagram(d.boundary_in(), std::move(s));
  }

  auto rw = rewrite_only ? match_rewrite(s, site) : match_delete(s, site);
  if (!rw) mismatch(site, "pattern not found at slice " + std::to_string(site.level + 1));
  auto first = s.begin() + static_cast<std::ptrdiff_t>(rw->at);
  s.erase(first, first + static_cast<std::ptrdiff_t>(rw->erase));
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(rw->at), rw->insert.begin(), rw->insert.end());
  return SlicedDiagram(d.boundary_in(), std::move(s));
}

std::vector<MoveSite> move_sites(const SlicedDiagram& d, Move move, MoveDirection dir, int count) {
  std::vector<MoveSite> sites;
  const bool rewrite_only = move == Move::RIII || move == Move::Interchange || move == Move::CapSlide;
  if (!rewrite_only && dir == MoveDirection::Insert) {
    const int need = move == Move::RII ? 2 : 1;
    for (std::size_t l = 0; l < d.level_count(); ++l)
      for (int p = 0; p + need <= d.width(l); ++p) sites.push_back({move, dir, static_cast<int>(l), p, 1, count});
    return sites;
  }
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    MoveSite site{move, dir, static_cast<int>(i), 0, 1, count};
    auto rw = rewrite_only ? match_rewrite(d.slices(), site) : match_delete(d.slices(), site);
    if (rw) {
      site.pos = d.slices()[i].pos;
      sites.push_back(site);
    }
  }
  return sites;
}

}  // namespace birackforge

namespace birackforge {

namespace {

int max_width(const SlicedDiagram& d) {
  int w = 0;
  for (std::size_t l = 0; l < d.level_count(); ++l) w = std::max(w, d.width(l));
  return w;
}

}  // namespace

std::vector<MoveSite> random_moves(SlicedDiagram& d, std::mt19937_64& rng, int steps, const RandomMoveOptions& opt) {
  static const Move kMoves[] = {Move::RII,     Move::RIII,        Move::FramedRI, Move::PhoneCord,
                                Move::Zigzag,  Move::Interchange, Move::CapSlide};
  std::vector<MoveSite> applied;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  int attempts = 0;
  while (static_cast<int>(applied.size()) < steps && attempts++ < steps * 50) {
    const Move move = kMoves[pick(std::size(kMoves))];
    if (move == Move::CapSlide && !opt.allow_cap_slide) continue;
    const bool rewrite_only = move == Move::RIII || move == Move::Interchange || move == Move::CapSlide;
    const MoveDirection dir = rewrite_only || pick(2) == 0 ? MoveDirection::Delete : MoveDirection::Insert;
    const int count = move == Move::PhoneCord ? opt.phone_cord_n : 1;
    std::vector<MoveSite> sites = move_sites(d, move, dir, count);
    if (sites.empty()) continue;
    MoveSite site = sites[pick(sites.size())];
    site.sign = pick(2) == 0 ? 1 : -1;
    SlicedDiagram next = apply_framed_move(d, site);
    if (max_width(next) > opt.max_width || next.slices().size() > opt.max_slices) continue;
    d = std::move(next);
    applied.push_back(site);
  }
  return applied;
}

}  // namespace birackforge
