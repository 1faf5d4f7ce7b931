#include "birackforge/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "birackforge/errors.hpp"

namespace birackforge {

namespace {

std::string join_names(const VarList& v) {
  std::string out = "[";
  if (v) {
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (i) out += ",";
      out += (*v)[i];
    }
  }
  return out + "]";
}

bool same_list(const VarList& a, const VarList& b) { return a == b || (a && b && *a == *b); }

// Merge adjacent equal exponent vectors of a sorted term list and drop zeros.
void canonicalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<LaurentPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms = std::move(out);
}

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  LaurentPoly run() {
    LaurentPoly result = LaurentPoly::constant(0, vars_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      LaurentPoly t = term();
      if (sign < 0) t = -t;
      result += t;
      first = false;
      skip();
    }
    return result;
  }

 private:
  LaurentPoly term() {
    LaurentPoly t = factor();
    skip();
    while (!at_end() && peek() == '*') {
      get();
      skip();
      t = t * factor();
      skip();
    }
    return t;
  }

  LaurentPoly factor() {
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip();
      if (!at_end() && peek() == '/') {
        get();
        skip();
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        mpq_class q(num + "/" + den);
        if (q.get_den() == 0) fail("zero denominator");
        q.canonicalize();
        return LaurentPoly::constant(q, vars_);
      }
      return LaurentPoly::constant(mpq_class(num), vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += get();
      skip();
      int exponent = 1;
      if (!at_end() && peek() == '^') {
        get();
        skip();
        int sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
        skip();
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        exponent = sign * std::stoi(e);
      }
      if (!vars_ || std::find(vars_->begin(), vars_->end(), name) == vars_->end())
        fail("unknown variable '" + name + "' (variables " + join_names(vars_) + ")");
      return LaurentPoly::variable(vars_, name, exponent);
    }
    if (peek() == '(') fail("parentheses are not supported");
    fail(std::string("unexpected character '") + peek() + "'");
  }

  std::string digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    return s;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  VarList vars_;
  std::size_t pos_ = 0;
};

}  // namespace

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::vector<std::string> collect_variables(std::string_view text) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char c = text[i];
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      names.emplace(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(Exponents{}, mpq_class(c));
}

LaurentPoly LaurentPoly::constant(const mpq_class& c, VarList vars) {
  LaurentPoly p;
  p.vars_ = std::move(vars);
  if (c != 0) p.terms_.emplace_back(Exponents(p.var_count(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarList vars, Exponents exps, const mpq_class& c) {
  LaurentPoly p;
  p.vars_ = std::move(vars);
  if (exps.size() != p.var_count()) throw VariableMismatch("exponent vector length does not match " + join_names(p.vars_));
  if (c != 0) p.terms_.emplace_back(std::move(exps), c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarList vars, std::string_view name, int exponent) {
  if (!vars) throw VariableMismatch("no variable list for '" + std::string(name) + "'");
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw VariableMismatch("variable '" + std::string(name) + "' not in " + join_names(vars));
  Exponents e(vars->size(), 0);
  e[static_cast<std::size_t>(it - vars->begin())] = exponent;
  return monomial(std::move(vars), std::move(e));
}

LaurentPoly LaurentPoly::parse(std::string_view text, VarList vars) { return Parser(text, vars).run(); }

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  return std::all_of(terms_[0].first.begin(), terms_[0].first.end(), [](int e) { return e == 0; });
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit()) throw NotAUnit("polynomial " + to_string() + " is not a unit (needs exactly one term)");
  LaurentPoly r;
  r.vars_ = vars_;
  Exponents e = terms_[0].first;
  for (int& x : e) x = -x;
  mpq_class c = 1 / terms_[0].second;
  r.terms_.emplace_back(std::move(e), c);
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPoly result = constant(1, vars_);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

VarList LaurentPoly::unify(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var_count() == 0) return b.vars_;
  if (b.var_count() == 0) return a.vars_;
  if (!same_list(a.vars_, b.vars_))
    throw VariableMismatch("variable lists differ: " + join_names(a.vars_) + " vs " + join_names(b.vars_));
  return a.vars_;
}

void LaurentPoly::adopt(const VarList& other) {
  if (var_count() != 0 || !other || other->empty()) return;
  vars_ = other;
  for (auto& t : terms_) t.first.assign(other->size(), 0);
}

LaurentPoly LaurentPoly::extended_to(const VarList& target) const {
  if (var_count() == 0) {
    LaurentPoly r = *this;
    r.adopt(target);
    return r;
  }
  if (same_list(vars_, target)) {
    LaurentPoly r = *this;
    r.vars_ = target;
    return r;
  }
  std::vector<std::size_t> slot(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it == target->end())
      throw VariableMismatch("cannot extend " + join_names(vars_) + " to " + join_names(target));
    slot[i] = static_cast<std::size_t>(it - target->begin());
  }
  LaurentPoly r;
  r.vars_ = target;
  for (const auto& [e, c] : terms_) {
    Exponents ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[slot[i]] = e[i];
    r.terms_.emplace_back(std::move(ne), c);
  }
  canonicalize(r.terms_);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  VarList v = unify(*this, o);
  adopt(v);
  LaurentPoly rhs = o;
  rhs.adopt(v);
  vars_ = v;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      merged.push_back(std::move(*j++));
    } else {
      mpq_class c = i->second + j->second;
      if (c != 0) merged.emplace_back(std::move(i->first), c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  VarList v = LaurentPoly::unify(a, b);
  LaurentPoly r;
  r.vars_ = v;
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = v ? v->size() : 0;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exponents e(n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        if (k < ea.size()) e[k] += ea[k];
        if (k < eb.size()) e[k] += eb[k];
      }
      r.terms_.emplace_back(std::move(e), ca * cb);
    }
  }
  canonicalize(r.terms_);
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.var_count() != 0 && b.var_count() != 0) {
    if (!same_list(a.vars_, b.vars_)) return false;
    return a.terms_ == b.terms_;
  }
  // At least one side is a constant; compare coefficient and all-zero exponents.
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& [ea, ca] = a.terms_[i];
    const auto& [eb, cb] = b.terms_[i];
    if (ca != cb) return false;
    if (std::any_of(ea.begin(), ea.end(), [](int e) { return e != 0; })) return false;
    if (std::any_of(eb.begin(), eb.end(), [](int e) { return e != 0; })) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    mpq_class mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool wrote = false;
    if (mag != 1 || !has_var) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (wrote) out << '*';
      out << (*vars_)[k];
      if (e[k] != 1) out << '^' << e[k];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace birackforge
