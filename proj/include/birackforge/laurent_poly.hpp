#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace birackforge {

using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);

/// Sorted, deduplicated list of identifiers appearing in polynomial text.
std::vector<std::string> collect_variables(std::string_view text);

/**
 * Multivariate Laurent polynomial with rational coefficients.
 *
 * Terms are kept sorted ascending by exponent vector with no zero
 * coefficients, so structural equality is mathematical equality. A value
 * built without a variable list is a constant; constants adopt the variable
 * list of whatever they are combined with. Two polynomials over different
 * non-empty variable lists cannot be combined (VariableMismatch).
 */
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using Term = std::pair<Exponents, mpq_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly constant(const mpq_class& c, VarList vars = {});
  static LaurentPoly monomial(VarList vars, Exponents exps, const mpq_class& c = 1);
  static LaurentPoly variable(VarList vars, std::string_view name, int exponent = 1);

  /// Parses text such as `-A^3`, `2*y^2`, `a^-2 - b^2`, `3/2*x*y^-1 + 1`.
  static LaurentPoly parse(std::string_view text, VarList vars);

  const VarList& vars() const { return vars_; }
  std::size_t var_count() const { return vars_ ? vars_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Units of Q[x^±1] are exactly the nonzero monomials.
  bool is_unit() const { return terms_.size() == 1; }
  LaurentPoly inverse() const;
  LaurentPoly pow(int e) const;

  /// Canonical rendering: terms in descending lexicographic exponent order.
  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);

  /// Equal values over compatible variable lists; polynomials over two
  /// different non-empty lists never compare equal.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Same polynomial re-expressed over a superset variable list.
  LaurentPoly extended_to(const VarList& target) const;

 private:
  void adopt(const VarList& other);
  static VarList unify(const LaurentPoly& a, const LaurentPoly& b);

  VarList vars_;
  std::vector<Term> terms_;
};

}  // namespace birackforge
