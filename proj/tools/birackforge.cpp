#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "birackforge/io.hpp"
#include "birackforge/labeling.hpp"
#include "birackforge/parallel.hpp"
#include "birackforge/search.hpp"

using namespace birackforge;

namespace {

struct Globals {
  std::string format = "text";
  int workers = default_workers();
  bool json() const { return format == "json"; }
};

Globals g;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<int> one_based(const std::vector<Element>& v) {
  std::vector<int> r;
  for (Element e : v) r.push_back(e + 1);
  return r;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string t = text;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("'" + tok + "' is not an integer");
    }
  }
  return out;
}

Permutation parse_perm(const std::string& text, int n) {
  Permutation p;
  for (int v : parse_ints(text)) {
    if (v < 1 || v > n) throw ParseError("permutation entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    p.push_back(v - 1);
  }
  if (static_cast<int>(p.size()) != n) throw ParseError("permutation needs " + std::to_string(n) + " entries");
  return p;
}

json labeling_json(const Labeling& f) {
  json levels = json::array();
  for (const auto& row : f.levels) levels.push_back(one_based(row));
  return levels;
}

template <class T>
json signature_json(const Matrix<T>& m) {
  if (m.rows() == 1 && m.cols() == 1) return m(0, 0).to_string();
  return matrix_to_json(m);
}

template <class T>
json multiset_json(const SignatureMultiset<T>& ms) {
  json arr = json::array();
  for (const auto& [sig, mult] : ms.entries()) arr.push_back({{"multiplicity", mult}, {"signature", signature_json(sig)}});
  return arr;
}

json check_json(const AxiomCheck& c) {
  json j{{"axiom", c.axiom}, {"passed", c.passed}};
  if (!c.passed) {
    j["witness"] = c.witness;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
  }
  return j;
}

void print_checks(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks) {
    std::cout << std::left << std::setw(20) << c.axiom << (c.passed ? "ok" : "FAIL");
    if (!c.passed) std::cout << "  at (" << join(c.witness, ",") << ")\n    lhs " << c.lhs << "\n    rhs " << c.rhs;
    std::cout << "\n";
  }
}

json diagram_summary(const SlicedDiagram& d) {
  ComponentInfo info = trace_components(d);
  json comps = json::array();
  for (int c = 0; c < info.count; ++c)
    comps.push_back({{"closed", static_cast<bool>(info.closed[c])}, {"framing", info.framing[c]}});
  return {{"diagram", diagram_to_json(d)},
          {"text", d.to_string()},
          {"crossings", d.crossing_count()},
          {"boundary_out", d.boundary_out()},
          {"components", comps}};
}

void print_diagram(const SlicedDiagram& d) {
  std::cout << "diagram    " << (d.slices().empty() ? "(empty)" : d.to_string()) << "\n"
            << "boundary   " << d.boundary_in() << " -> " << d.boundary_out() << "\n"
            << "crossings  " << d.crossing_count() << "\n";
}

Birack read_birack(const std::string& path) { return load_birack(path); }

std::string direction_name(const MoveSite& s) {
  if (s.move == Move::RIII || s.move == Move::Interchange || s.move == Move::CapSlide) return "rewrite";
  return s.direction == MoveDirection::Insert ? "insert" : "delete";
}

// ---------------------------------------------------------------- birack

void birack_validate(const std::string& path) {
  json doc = load_json(path);
  try {
    Birack b = birack_from_json(doc);
    if (g.json())
      emit({{"valid", true}, {"n", b.size()}, {"rank", b.rank()}});
    else
      std::cout << "valid involutory birack, n=" << b.size() << ", rank " << b.rank() << "\n";
  } catch (const AxiomViolation& e) {
    if (g.json())
      emit({{"valid", false}, {"axiom", e.which()}, {"witness", e.witness()}, {"message", e.what()}});
    else
      std::cout << "invalid: " << e.what() << "\n";
    throw;
  }
}

void birack_info(const Birack& b) {
  const bool kei = b.is_kei();
  if (g.json()) {
    emit({{"n", b.size()},
          {"rank", b.rank()},
          {"pi", one_based(b.pi())},
          {"pi_cycles", cycle_string(b.pi())},
          {"alpha", one_based(b.alpha())},
          {"alpha_cycles", cycle_string(b.alpha())},
          {"bikei", b.is_bikei()},
          {"kei", kei},
          {"U", b.upper_block()},
          {"L", b.lower_block()}});
    return;
  }
  std::cout << "n      " << b.size() << "\nrank   " << b.rank() << "\npi     " << cycle_string(b.pi()) << "\nalpha  "
            << cycle_string(b.alpha()) << "\nbikei  " << (b.is_bikei() ? "yes" : "no") << "\nkei    "
            << (kei ? "yes" : "no") << "\n[U|L]\n";
  auto U = b.upper_block(), L = b.lower_block();
  for (int i = 0; i < b.size(); ++i) {
    std::cout << " ";
    for (int v : U[i]) std::cout << " " << v;
    std::cout << " |";
    for (int v : L[i]) std::cout << " " << v;
    std::cout << "\n";
  }
}

void print_birack_doc(const Birack& b) {
  if (g.json()) {
    emit(birack_to_json(b));
  } else {
    std::cout << birack_to_json(b).dump() << "\n";
  }
}

// ---------------------------------------------------------------- tangle

struct DiagramArgs {
  std::string diagram;
  int boundary = 0;
};

void add_diagram(CLI::App* app, DiagramArgs& a) {
  app->add_option("diagram", a.diagram, "diagram JSON file or slice text")->required();
  app->add_option("--boundary", a.boundary, "input boundary width for slice text");
}

SlicedDiagram read_diagram(const DiagramArgs& a) { return load_diagram(a.diagram, a.boundary).diagram; }

void tangle_components(const SlicedDiagram& d) {
  ComponentInfo info = trace_components(d);
  if (g.json()) {
    emit(diagram_summary(d));
    return;
  }
  std::cout << "component  closed  framing  first node\n";
  for (int c = 0; c < info.count; ++c)
    std::cout << std::left << std::setw(11) << c + 1 << std::setw(8) << (info.closed[c] ? "yes" : "no") << std::setw(9)
              << info.framing[c] << "level " << info.first_node[c].level << ", strand " << info.first_node[c].pos + 1
              << "\n";
}

// ---------------------------------------------------------------- counting

SlicedDiagram reframe(const SlicedDiagram& d, const std::vector<int>& target) {
  ComponentInfo info = trace_components(d);
  auto ids = info.closed_ids();
  if (target.size() != ids.size())
    throw ParseError("--framing needs " + std::to_string(ids.size()) + " values, one per closed component");
  std::vector<int> kinks(static_cast<std::size_t>(info.count), 0);
  for (std::size_t k = 0; k < ids.size(); ++k) kinks[ids[k]] = target[k] - info.framing[ids[k]];
  return insert_kinks(d, kinks);
}

// ---------------------------------------------------------------- qweight

template <class Fn>
void with_weight(const std::string& path, Fn fn) {
  json doc = load_json(path);
  if (is_mod_weight(doc))
    fn(mod_weight_from_json(doc, dirname_of(path)));
  else
    fn(poly_weight_from_json(doc, dirname_of(path)));
}

template <class T>
void qweight_verify(const QuantumWeight<T>& q) {
  WeightReport r = verify_weight(q);
  if (g.json()) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    emit({{"ok", r.ok()}, {"checks", checks}});
  } else {
    print_checks(r.checks);
  }
  if (!r.ok()) {
    const auto bad = std::find_if(r.checks.begin(), r.checks.end(), [](const AxiomCheck& c) { return !c.passed; });
    throw AxiomViolation(bad->axiom, bad->witness, "axiom " + bad->axiom + " fails");
  }
}

template <class T>
void qweight_eval(const SlicedDiagram& d, const QuantumWeight<T>& q, const std::string& labeling) {
  std::optional<std::vector<Element>> bottom;
  if (!labeling.empty()) {
    std::vector<Element> b;
    for (int v : parse_ints(labeling)) {
      if (v < 1 || v > q.birack().size()) throw ParseError("label " + std::to_string(v) + " out of range");
      b.push_back(v - 1);
    }
    if (static_cast<int>(b.size()) != d.boundary_in())
      throw ParseError("--labeling needs " + std::to_string(d.boundary_in()) + " labels");
    bottom = b;
  }
  auto labelings = enumerate_labelings(d, q.birack(), bottom, g.workers);
  json out = json::array();
  for (const auto& f : labelings) {
    Matrix<T> v = evaluate(d, f, q);
    if (g.json())
      out.push_back({{"bottom", one_based(f.bottom())}, {"top", one_based(f.top())}, {"levels", labeling_json(f)}, {"value", signature_json(v)}});
    else
      std::cout << "bottom (" << join(one_based(f.bottom()), ",") << ") top (" << join(one_based(f.top()), ",")
                << ")  " << SignatureMultiset<T>::render(v) << "\n";
  }
  if (g.json()) emit({{"labelings", out}});
  else if (labelings.empty()) std::cout << "no labelings\n";
}

template <class T>
void qweight_phi(const SlicedDiagram& d, const QuantumWeight<T>& q) {
  auto ms = phi_qm(d, q, g.workers);
  std::optional<std::string> poly;
  if (d.is_closed()) poly = phi_q_polynomial(ms);
  if (g.json()) {
    json j{{"size", ms.size()}, {"multiset", multiset_json(ms)}};
    if (poly) j["polynomial"] = *poly;
    emit(j);
    return;
  }
  std::cout << ms.to_string() << "\n";
  if (poly) std::cout << *poly << "\n";
}

template <class T>
void qweight_classify(const QuantumWeight<T>& q) {
  WeightClass c = classify_weight(q);
  const int m = q.birack().size();
  if (g.json()) {
    json ybe = json::object();
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) ybe[std::to_string(x + 1) + "," + std::to_string(y + 1)] = static_cast<bool>(c.ybe[x * m + y]);
    emit({{"homogeneous", c.homogeneous},
          {"heterogeneous", !c.homogeneous},
          {"strongly_heterogeneous", c.strongly_heterogeneous},
          {"ybe", ybe}});
    return;
  }
  std::cout << (c.homogeneous ? "homogeneous" : c.strongly_heterogeneous ? "strongly heterogeneous" : "heterogeneous")
            << "\n";
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      std::cout << "  X_" << x + 1 << "," << y + 1 << (c.ybe[x * m + y] ? "  satisfies YBE" : "  violates YBE") << "\n";
}

// ---------------------------------------------------------------- search

class ResultSink {
 public:
  explicit ResultSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write " + path);
    }
  }
  void add(const json& doc) {
    if (file_.is_open()) file_ << doc.dump() << "\n";
    results_.push_back(doc);
  }
  void finish(const json& summary) {
    if (file_.is_open() || !g.json()) {
      if (g.json()) {
        emit(summary);
      } else {
        for (const auto& [k, v] : summary.items()) std::cout << std::left << std::setw(12) << k << v.dump() << "\n";
        if (!file_.is_open())
          for (const auto& r : results_) std::cout << r.dump() << "\n";
      }
      return;
    }
    json j = summary;
    j["results"] = results_;
    emit(j);
  }

 private:
  std::ofstream file_;
  json results_ = json::array();
};

int run(int argc, char** argv) {
  CLI::App app{"Involutory biracks, framed tangle counting invariants and their quantum enhancements"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", g.workers, "worker threads for labeling enumeration and search")
      ->check(CLI::PositiveNumber);
  std::function<void()> action;

  // birack
  auto* birack = app.add_subcommand("birack", "involutory biracks");
  birack->require_subcommand(1);
  std::string birack_path;
  auto* bv = birack->add_subcommand("validate", "check the involutory birack axioms");
  bv->add_option("file", birack_path)->required();
  bv->callback([&] { action = [&] { birack_validate(birack_path); }; });
  auto* bi = birack->add_subcommand("info", "rank, pi, alpha and kei/bikei flags");
  bi->add_option("file", birack_path)->required();
  bi->callback([&] { action = [&] { birack_info(read_birack(birack_path)); }; });
  auto* make = birack->add_subcommand("make", "build a birack document");
  make->require_subcommand(1);
  int make_n = 2;
  std::string sigma_text, tau_text;
  auto* ca = make->add_subcommand("constant-action", "B(x,y) = (sigma(y), tau(x))");
  ca->add_option("-n", make_n)->required();
  ca->add_option("--sigma", sigma_text, "1-based images, e.g. \"2 1 3\"")->required();
  ca->add_option("--tau", tau_text, "1-based images")->required();
  ca->callback([&] {
    action = [&] { print_birack_doc(constant_action(make_n, parse_perm(sigma_text, make_n), parse_perm(tau_text, make_n))); };
  });
  int tsr_t = 1, tsr_s = 0, tsr_r = 1;
  auto* tsr = make->add_subcommand("tsr", "B(x,y) = (ty + sx, rx) on Z_n");
  tsr->add_option("-n", make_n)->required();
  tsr->add_option("-t", tsr_t)->required();
  tsr->add_option("-s", tsr_s)->required();
  tsr->add_option("-r", tsr_r)->required();
  tsr->callback([&] { action = [&] { print_birack_doc(tsr_birack(make_n, tsr_t, tsr_s, tsr_r)); }; });

  // tangle
  auto* tangle = app.add_subcommand("tangle", "sliced framed tangle diagrams");
  tangle->require_subcommand(1);
  DiagramArgs da;
  auto* tp = tangle->add_subcommand("parse", "parse and print a diagram in canonical form");
  add_diagram(tp, da);
  tp->callback([&] {
    action = [&] {
      auto d = read_diagram(da);
      if (g.json()) emit(diagram_summary(d));
      else print_diagram(d);
    };
  });
  auto* tc = tangle->add_subcommand("components", "components and their framings");
  add_diagram(tc, da);
  tc->callback([&] { action = [&] { tangle_components(read_diagram(da)); }; });
  int kink_component = 1, kink_count = 1;
  auto* tk = tangle->add_subcommand("kink", "insert signed kinks into a closed component");
  add_diagram(tk, da);
  tk->add_option("--component", kink_component, "1-based component");
  tk->add_option("--count", kink_count, "signed number of kinks");
  tk->callback([&] {
    action = [&] {
      auto d = read_diagram(da);
      ComponentInfo info = trace_components(d);
      if (kink_component < 1 || kink_component > info.count)
        throw ParseError("--component must lie in 1.." + std::to_string(info.count));
      std::vector<int> kinks(static_cast<std::size_t>(info.count), 0);
      kinks[kink_component - 1] = kink_count;
      auto out = insert_kinks(d, kinks);
      if (g.json()) emit(diagram_summary(out));
      else print_diagram(out);
    };
  });
  std::string move_text;
  bool move_delete = false;
  MoveSite site{Move::RII};
  int random_steps = 0, phone_cord = 1;
  std::uint64_t seed = 20240601;
  auto* tm = tangle->add_subcommand("move", "apply a framed Reidemeister move, or a seeded random sequence");
  add_diagram(tm, da);
  tm->add_option("--move", move_text, "RII, RIII, framed-RI, phone-cord, zigzag, interchange, cap-slide");
  tm->add_flag("--delete", move_delete, "delete instead of insert");
  tm->add_option("--level", site.level, "level (insert) or first slice index (delete/rewrite)");
  tm->add_option("--pos", site.pos, "1-based strand position")->transform([](std::string s) {
    return std::to_string(std::stoi(s) - 1);
  });
  tm->add_option("--sign", site.sign, "crossing sign, kink order or snake side (+1/-1)");
  tm->add_option("--count", site.count, "N for phone-cord moves");
  tm->add_option("--random", random_steps, "apply this many random moves");
  tm->add_option("--seed", seed, "seed for --random");
  tm->add_option("--phone-cord", phone_cord, "N for random phone-cord moves");
  tm->callback([&] {
    action = [&] {
      auto d = read_diagram(da);
      if (random_steps > 0) {
        std::mt19937_64 rng(seed);
        RandomMoveOptions opt;
        opt.phone_cord_n = phone_cord;
        auto applied = random_moves(d, rng, random_steps, opt);
        if (g.json()) {
          json moves = json::array();
          for (const auto& s : applied)
            moves.push_back({{"move", move_name(s.move)},
                             {"direction", direction_name(s)},
                             {"level", s.level},
                             {"pos", s.pos + 1},
                             {"sign", s.sign}});
          json j = diagram_summary(d);
          j["moves"] = moves;
          j["seed"] = seed;
          emit(j);
        } else {
          for (const auto& s : applied)
            std::cout << move_name(s.move) << " " << direction_name(s)
                      << " level " << s.level << " strand " << s.pos + 1 << " sign " << s.sign << "\n";
          print_diagram(d);
        }
        return;
      }
      if (move_text.empty()) throw ParseError("give --move or --random");
      auto m = parse_move_name(move_text);
      if (!m) throw ParseError("unknown move '" + move_text + "'");
      site.move = *m;
      site.direction = move_delete ? MoveDirection::Delete : MoveDirection::Insert;
      auto out = apply_framed_move(d, site);
      if (g.json()) emit(diagram_summary(out));
      else print_diagram(out);
    };
  });

  // counting invariants
  std::string count_birack, framing_text;
  auto* cnt = app.add_subcommand("count", "basic counting invariant of one framed diagram");
  add_diagram(cnt, da);
  cnt->add_option("birack", count_birack)->required();
  cnt->add_option("--framing", framing_text, "target framing per closed component, e.g. 1,0");
  cnt->callback([&] {
    action = [&] {
      auto d = read_diagram(da);
      Birack b = read_birack(count_birack);
      if (!framing_text.empty()) d = reframe(d, parse_ints(framing_text));
      const long n = phi_basic(d, b, g.workers);
      const auto framing = trace_components(d).closed_framing();
      if (g.json()) emit({{"count", n}, {"framing", framing}});
      else std::cout << n << "  (framing " << join(framing, ",") << ")\n";
    };
  });
  auto* pz = app.add_subcommand("phi-z", "integral counting invariant with per-framing table");
  add_diagram(pz, da);
  pz->add_option("birack", count_birack)->required();
  pz->callback([&] {
    action = [&] {
      auto d = read_diagram(da);
      Birack b = read_birack(count_birack);
      IntegralCount ic = phi_integral(d, b, g.workers);
      if (g.json()) {
        json cells = json::array();
        for (const auto& c : ic.cells) cells.push_back({{"residues", c.residues}, {"framing", c.framing}, {"count", c.count}});
        emit({{"total", ic.total}, {"rank", b.rank()}, {"cells", cells}});
        return;
      }
      std::cout << "residues   framing    count\n";
      for (const auto& c : ic.cells)
        std::cout << std::left << std::setw(11) << join(c.residues, ",") << std::setw(11) << join(c.framing, ",")
                  << c.count << "\n";
      std::cout << "total " << ic.total << "\n";
    };
  });

  // qweight
  auto* qw = app.add_subcommand("qweight", "quantum weights");
  qw->require_subcommand(1);
  std::string weight_path, labeling_text;
  auto* qv = qw->add_subcommand("verify", "check axioms I-VI");
  qv->add_option("file", weight_path)->required();
  qv->callback([&] { action = [&] { with_weight(weight_path, [](const auto& q) { qweight_verify(q); }); }; });
  auto* qe = qw->add_subcommand("eval", "unnormalized value of each labeling");
  add_diagram(qe, da);
  qe->add_option("weight", weight_path)->required();
  qe->add_option("--labeling", labeling_text, "1-based bottom labels, e.g. \"1 2\"");
  qe->callback([&] {
    action = [&] {
      auto d = read_diagram(da);
      with_weight(weight_path, [&](const auto& q) { qweight_eval(d, q, labeling_text); });
    };
  });
  auto* qp = qw->add_subcommand("phi", "multiset of normalized signatures");
  add_diagram(qp, da);
  qp->add_option("weight", weight_path)->required();
  qp->callback([&] {
    action = [&] {
      auto d = read_diagram(da);
      with_weight(weight_path, [&](const auto& q) { qweight_phi(d, q); });
    };
  });
  auto* qc = qw->add_subcommand("classify", "homogeneous, heterogeneous or strongly heterogeneous");
  qc->add_option("file", weight_path)->required();
  qc->callback([&] { action = [&] { with_weight(weight_path, [](const auto& q) { qweight_classify(q); }); }; });

  // bweight
  auto* bw = app.add_subcommand("bweight", "braid weights");
  bw->require_subcommand(1);
  std::string braid_text;
  auto* bwv = bw->add_subcommand("verify", "invertibility, braid relation, far commutativity");
  bwv->add_option("file", weight_path)->required();
  bwv->callback([&] {
    action = [&] {
      auto w = braid_weight_from_json(load_json(weight_path), dirname_of(weight_path));
      BraidReport r = verify_braid_weight(w);
      if (g.json()) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back(check_json(c));
        emit({{"ok", r.ok()}, {"checks", checks}, {"info", check_json(r.literal_reading)}});
      } else {
        print_checks(r.checks);
        std::cout << "info: " << r.literal_reading.axiom << (r.literal_reading.passed ? " holds" : " does not hold")
                  << "\n";
      }
      if (!r.ok()) {
        const auto bad = std::find_if(r.checks.begin(), r.checks.end(), [](const AxiomCheck& c) { return !c.passed; });
        throw AxiomViolation(bad->axiom, bad->witness, bad->axiom + " fails");
      }
    };
  });
  auto* bwp = bw->add_subcommand("phi", "trace multiset over closure labelings");
  bwp->add_option("braid", braid_text, "signed generators, e.g. \"1 1 1 2\"")->required();
  bwp->add_option("file", weight_path)->required();
  bwp->callback([&] {
    action = [&] {
      auto w = braid_weight_from_json(load_json(weight_path), dirname_of(weight_path));
      BraidWord word = parse_braid(braid_text, w.strands());
      auto ms = phi_mw(word, w);
      if (g.json()) emit({{"braid", braid_to_string(word)}, {"size", ms.size()}, {"multiset", multiset_json(ms)}});
      else std::cout << ms.to_string() << "\n";
    };
  });

  // search
  auto* search = app.add_subcommand("search", "brute-force discovery");
  search->require_subcommand(1);
  std::string out_path;
  int search_n = 2;
  bool dedup = false;
  auto* sb = search->add_subcommand("biracks", "every involutory birack of size n <= 3");
  sb->add_option("-n", search_n)->required();
  sb->add_flag("--dedup", dedup, "one representative per relabeling class");
  sb->add_option("--out", out_path, "JSON-lines output file");
  sb->callback([&] {
    action = [&] {
      auto found = enumerate_biracks(search_n, dedup, g.workers);
      ResultSink sink(out_path);
      for (const auto& b : found) {
        json doc = birack_to_json(b);
        doc["rank"] = b.rank();
        sink.add(doc);
      }
      sink.finish({{"n", search_n}, {"dedup", dedup}, {"candidates", birack_candidate_count(search_n)}, {"found", found.size()}});
    };
  });
  std::string search_birack, template_text = "antidiag";
  int strands = 3;
  BraidSearchSpec bspec;
  auto* sbw = search->add_subcommand("bweights", "braid weights over a monomial template");
  sbw->add_option("--birack", search_birack)->required();
  sbw->add_option("--strands", strands);
  sbw->add_option("--dim", bspec.dim);
  sbw->add_option("--template", template_text, "antidiag, diag or scalar");
  sbw->add_option("--max-vars", bspec.max_vars);
  sbw->add_option("--budget", bspec.budget, "refuse larger candidate spaces");
  sbw->add_option("--out", out_path, "JSON-lines output file");
  sbw->callback([&] {
    action = [&] {
      Birack b = read_birack(search_birack);
      bspec.shape = parse_template(template_text);
      bspec.workers = g.workers;
      const double candidates = braid_candidate_count(b, strands, bspec);
      auto found = search_braid_weights(b, strands, bspec);
      ResultSink sink(out_path);
      for (const auto& w : found) sink.add(braid_weight_to_json(w));
      sink.finish({{"template", template_name(bspec.shape)}, {"candidates", candidates}, {"found", found.size()}});
    };
  });
  QuantumSearchSpec qspec;
  auto* sq = search->add_subcommand("qweights", "quantum weights over Z_p");
  sq->add_option("--birack", search_birack)->required();
  sq->add_option("--dim", qspec.dim);
  sq->add_option("--mod", qspec.modulus)->check(CLI::Range(2, 97));
  sq->add_option("--budget", qspec.budget, "refuse larger candidate spaces");
  sq->add_flag("--cocycle", qspec.cocycle, "dim 1 with N = U = delta = 1");
  sq->add_option("--out", out_path, "JSON-lines output file");
  sq->callback([&] {
    action = [&] {
      Birack b = read_birack(search_birack);
      qspec.workers = g.workers;
      const double candidates = quantum_candidate_count(b, qspec);
      auto found = search_quantum_weights(b, qspec);
      ResultSink sink(out_path);
      for (const auto& q : found) sink.add(weight_to_json(q));
      sink.finish({{"modulus", qspec.modulus}, {"dim", qspec.dim}, {"candidates", candidates}, {"found", found.size()}});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
