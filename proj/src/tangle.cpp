#include "birackforge/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <cctype>
#include <numeric>
#include <sstream>
#include <tuple>

namespace birackforge {

namespace {

std::string piece_name(Piece p) {
  switch (p) {
    case Piece::Cup: return "cup";
    case Piece::Cap: return "cap";
    case Piece::Xpos: return "xpos";
    case Piece::Xneg: return "xneg";
  }
  return "?";
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::string> tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

struct Token {
  std::optional<Piece> piece;  // nullopt for id
  std::optional<int> pos;      // 1-based, as written
};

Token parse_token(const std::string& tok, std::size_t slice_index) {
  static const std::pair<const char*, std::optional<Piece>> names[] = {
      {"xpos", Piece::Xpos}, {"xneg", Piece::Xneg}, {"cup", Piece::Cup}, {"cap", Piece::Cap}, {"id", std::nullopt}};
  for (const auto& [name, piece] : names) {
    std::string_view n(name);
    if (tok.compare(0, n.size(), n) != 0) continue;
    std::string rest = tok.substr(n.size());
    Token t{piece, std::nullopt};
    if (!rest.empty()) {
      if (!std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }))
        break;
      t.pos = std::stoi(rest);
      if (*t.pos < 1) throw ParseError("slice " + std::to_string(slice_index + 1) + ": positions are 1-based");
    }
    return t;
  }
  throw ParseError("slice " + std::to_string(slice_index + 1) + ": unknown piece '" + tok + "'");
}

// Position of a strand of the slice input after the slice, for strands
// outside the piece's input span.
int pass_through(const Slice& s, int p) { return p < s.pos ? p : p - s.in_span() + s.out_span(); }

}  // namespace

SlicedDiagram::SlicedDiagram(int boundary_in, std::vector<Slice> slices)
    : boundary_in_(boundary_in), slices_(std::move(slices)) {
  if (boundary_in_ < 0) throw ParseError("negative boundary width");
  widths_.assign(1, boundary_in_);
  widths_.reserve(slices_.size() + 1);
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    const Slice& s = slices_[i];
    const int w = widths_.back();
    const bool ok = s.pos >= 0 && (s.piece == Piece::Cup ? s.pos <= w : s.pos + 1 < w);
    if (!ok)
      throw ParseError("slice " + std::to_string(i + 1) + ": " + piece_name(s.piece) + " at strand " +
                       std::to_string(s.pos + 1) + " does not fit width " + std::to_string(w));
    widths_.push_back(w - s.in_span() + s.out_span());
  }
}

std::size_t SlicedDiagram::crossing_count() const {
  return static_cast<std::size_t>(std::count_if(slices_.begin(), slices_.end(), [](const Slice& s) { return s.is_crossing(); }));
}

std::string SlicedDiagram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    if (i) out += " / ";
    out += piece_name(slices_[i].piece) + std::to_string(slices_[i].pos + 1);
  }
  return out;
}

SlicedDiagram parse_diagram(std::string_view text, int boundary_in) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ';', ' ');
  std::vector<Slice> slices;
  int width = boundary_in;
  auto trimmed_empty = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  };
  if (trimmed_empty(cleaned)) return SlicedDiagram(boundary_in, {});
  auto groups = split(cleaned, '/');
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto toks = tokens(groups[gi]);
    if (toks.empty()) throw ParseError("slice " + std::to_string(gi + 1) + " is empty");
    std::vector<Token> parsed;
    for (const auto& t : toks) parsed.push_back(parse_token(t, gi));

    if (parsed.size() == 1 && parsed[0].pos) {
      if (!parsed[0].piece) continue;  // a lone positioned id is a no-op
      Slice s{*parsed[0].piece, *parsed[0].pos - 1};
      const bool fits = s.piece == Piece::Cup ? s.pos <= width : s.pos + 1 < width;
      if (!fits)
        throw ParseError("slice " + std::to_string(gi + 1) + ": " + toks[0] + " does not fit width " +
                         std::to_string(width));
      slices.push_back(s);
      width += s.out_span() - s.in_span();
      continue;
    }

    // Sequential layout; suffix positions are informational here.
    std::vector<std::pair<Piece, int>> placed;
    int offset = 0;
    int out_width = 0;
    for (const auto& t : parsed) {
      if (!t.piece) {
        offset += 1;
        out_width += 1;
        continue;
      }
      Slice s{*t.piece, offset};
      placed.emplace_back(s.piece, offset);
      offset += s.in_span();
      out_width += s.out_span();
    }
    if (offset != width)
      throw ParseError("slice " + std::to_string(gi + 1) + ": pieces consume " + std::to_string(offset) +
                       " strands but the incoming width is " + std::to_string(width));
    for (auto it = placed.rbegin(); it != placed.rend(); ++it) slices.push_back(Slice{it->first, it->second});
    width = out_width;
  }
  return SlicedDiagram(boundary_in, std::move(slices));
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw ParseError("braid needs at least one strand");
  BraidWord b{strands, {}};
  for (const auto& t : tokens(text)) {
    int g = 0;
    try {
      std::size_t used = 0;
      g = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw ParseError("braid: '" + t + "' is not an integer");
    }
    if (g == 0 || std::abs(g) >= strands)
      throw ParseError("braid: generator " + t + " out of range for " + std::to_string(strands) + " strands");
    b.word.push_back(g);
  }
  return b;
}

std::string braid_to_string(const BraidWord& b) {
  std::string s;
  for (std::size_t i = 0; i < b.word.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(b.word[i]);
  }
  return s;
}

SlicedDiagram braid_closure(const BraidWord& b) {
  const int n = b.strands;
  std::vector<Slice> slices;
  for (int i = 0; i < n; ++i) slices.push_back({Piece::Cup, i});
  for (int g : b.word) slices.push_back({g > 0 ? Piece::Xpos : Piece::Xneg, std::abs(g) - 1});
  for (int i = n - 1; i >= 0; --i) slices.push_back({Piece::Cap, i});
  return SlicedDiagram(0, std::move(slices));
}

int ComponentInfo::closed_count() const {
  return static_cast<int>(std::count(closed.begin(), closed.end(), true));
}

std::vector<int> ComponentInfo::closed_ids() const {
  std::vector<int> ids;
  for (int c = 0; c < count; ++c)
    if (closed[c]) ids.push_back(c);
  return ids;
}

std::vector<int> ComponentInfo::closed_framing() const {
  std::vector<int> f;
  for (int c : closed_ids()) f.push_back(framing[c]);
  return f;
}

ComponentInfo trace_components(const SlicedDiagram& d) {
  const int top = static_cast<int>(d.slices().size());
  ComponentInfo info;
  info.node_component.resize(d.level_count());
  for (std::size_t l = 0; l < d.level_count(); ++l) info.node_component[l].assign(d.width(l), -1);

  // Passages through each crossing slice: (component, direction).
  std::vector<std::vector<std::pair<int, int>>> passages(d.slices().size());

  struct Cursor {
    int level, pos, dir;  // dir +1 up, -1 down
  };
  // Advance one node along the strand; returns false at the boundary.
  auto step = [&](Cursor& c, int comp) -> bool {
    if (c.dir > 0) {
      if (c.level == top) return false;
      const Slice& s = d.slices()[c.level];
      const int k = s.pos;
      switch (s.piece) {
        case Piece::Cap:
          if (c.pos == k || c.pos == k + 1) {
            c.pos = c.pos == k ? k + 1 : k;
            c.dir = -1;
            return true;
          }
          break;
        case Piece::Xpos:
        case Piece::Xneg:
          if (c.pos == k || c.pos == k + 1) {
            passages[c.level].emplace_back(comp, +1);
            c.pos = c.pos == k ? k + 1 : k;
            c.level += 1;
            return true;
          }
          break;
        case Piece::Cup:
          break;
      }
      c.pos = pass_through(s, c.pos);
      c.level += 1;
      return true;
    }
    if (c.level == 0) return false;
    const Slice& s = d.slices()[c.level - 1];
    const int k = s.pos;
    switch (s.piece) {
      case Piece::Cup:
        if (c.pos == k || c.pos == k + 1) {
          c.pos = c.pos == k ? k + 1 : k;
          c.dir = +1;
          return true;
        }
        c.pos = c.pos < k ? c.pos : c.pos - 2;
        c.level -= 1;
        return true;
      case Piece::Cap:
        c.pos = c.pos < k ? c.pos : c.pos + 2;
        c.level -= 1;
        return true;
      case Piece::Xpos:
      case Piece::Xneg:
        if (c.pos == k || c.pos == k + 1) {
          passages[c.level - 1].emplace_back(comp, -1);
          c.pos = c.pos == k ? k + 1 : k;
        }
        c.level -= 1;
        return true;
    }
    return false;
  };

  for (int l = 0; l <= top; ++l) {
    for (int p = 0; p < d.width(l); ++p) {
      if (info.node_component[l][p] >= 0) continue;
      const int comp = info.count++;
      info.first_node.push_back({l, p});
      info.node_component[l][p] = comp;
      Cursor c{l, p, +1};
      bool closed = false;
      while (step(c, comp)) {
        if (c.level == l && c.pos == p) {
          closed = true;
          break;
        }
        info.node_component[c.level][c.pos] = comp;
      }
      if (!closed) {
        Cursor back{l, p, -1};
        while (step(back, comp)) info.node_component[back.level][back.pos] = comp;
      }
      info.closed.push_back(closed);
    }
  }

  info.framing.assign(info.count, 0);
  for (std::size_t i = 0; i < passages.size(); ++i) {
    const auto& ps = passages[i];
    if (ps.size() != 2 || ps[0].first != ps[1].first) continue;
    const int comp = ps[0].first;
    if (!info.closed[comp]) continue;
    const int base = d.slices()[i].piece == Piece::Xpos ? 1 : -1;
    info.framing[comp] += base * ps[0].second * ps[1].second;
  }
  return info;
}

SemiarcMap semiarcs(const SlicedDiagram& d) {
  std::vector<int> offset(d.level_count() + 1, 0);
  for (std::size_t l = 0; l < d.level_count(); ++l) offset[l + 1] = offset[l] + d.width(l);
  std::vector<int> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (std::size_t l = 0; l < d.slices().size(); ++l) {
    const Slice& s = d.slices()[l];
    for (int p = 0; p < d.width(l); ++p) {
      if (p >= s.pos && p < s.pos + s.in_span()) continue;
      unite(offset[l] + p, offset[l + 1] + pass_through(s, p));
    }
    if (s.piece == Piece::Cup) unite(offset[l + 1] + s.pos, offset[l + 1] + s.pos + 1);
    if (s.piece == Piece::Cap) unite(offset[l] + s.pos, offset[l] + s.pos + 1);
  }

  SemiarcMap m;
  m.node_semiarc.resize(d.level_count());
  std::vector<int> label(parent.size(), -1);
  for (std::size_t l = 0; l < d.level_count(); ++l) {
    m.node_semiarc[l].resize(d.width(l));
    for (int p = 0; p < d.width(l); ++p) {
      int r = find(offset[l] + p);
      if (label[r] < 0) label[r] = m.count++;
      m.node_semiarc[l][p] = label[r];
    }
  }
  return m;
}

std::vector<Slice> kink_slices(int pos, int sign) {
  return {{Piece::Cup, pos + 1}, {sign > 0 ? Piece::Xpos : Piece::Xneg, pos}, {Piece::Cap, pos + 1}};
}

SlicedDiagram insert_kinks(const SlicedDiagram& d, const std::vector<int>& kinks) {
  ComponentInfo info = trace_components(d);
  if (static_cast<int>(kinks.size()) != info.count)
    throw DomainError("kink vector has " + std::to_string(kinks.size()) + " entries for " +
                      std::to_string(info.count) + " components");
  std::vector<std::tuple<int, int, int>> sites;  // level, pos, count
  for (int c = 0; c < info.count; ++c) {
    if (kinks[c] == 0) continue;
    if (!info.closed[c]) throw DomainError("component " + std::to_string(c + 1) + " is not closed");
    sites.emplace_back(info.first_node[c].level, info.first_node[c].pos, kinks[c]);
  }
  std::sort(sites.rbegin(), sites.rend());
  std::vector<Slice> slices = d.slices();
  for (const auto& [level, pos, count] : sites) {
    std::vector<Slice> add;
    for (int i = 0; i < std::abs(count); ++i) {
      auto k = kink_slices(pos, count > 0 ? 1 : -1);
      add.insert(add.end(), k.begin(), k.end());
    }
    slices.insert(slices.begin() + level, add.begin(), add.end());
  }
  return SlicedDiagram(d.boundary_in(), std::move(slices));
}

}  // namespace birackforge
