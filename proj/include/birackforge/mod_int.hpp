#pragma once

#include <string>

#include "birackforge/errors.hpp"

namespace birackforge {

/// Element of Z_p. A modulus of 0 marks an unbound integer constant (the
/// default-constructed zero, the identity's one) that binds to the modulus of
/// whatever it meets, mirroring how constant LaurentPoly values adopt a
/// variable list.
class ModInt {
 public:
  ModInt() = default;
  ModInt(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ModInt(long v, int modulus) : value_(reduce(v, modulus)), modulus_(modulus) {}

  long value() const { return value_; }
  int modulus() const { return modulus_; }

  bool is_zero() const { return value_ == 0; }
  /// Units for prime moduli are the nonzero residues.
  bool is_unit() const { return modulus_ ? value_ != 0 : (value_ == 1 || value_ == -1); }

  ModInt inverse() const {
    if (!is_unit()) throw NotAUnit("residue " + to_string() + " is not a unit");
    if (!modulus_) return *this;
    long inv = 1, base = value_;
    for (int e = modulus_ - 2; e > 0; e >>= 1) {
      if (e & 1) inv = inv * base % modulus_;
      base = base * base % modulus_;
    }
    return {inv, modulus_};
  }

  ModInt pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    ModInt r = modulus_ ? ModInt(1, modulus_) : ModInt(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  std::string to_string() const { return std::to_string(value_); }

  friend ModInt operator+(const ModInt& a, const ModInt& b) { return combine(a, b, a.value_ + b.value_); }
  friend ModInt operator-(const ModInt& a, const ModInt& b) { return combine(a, b, a.value_ - b.value_); }
  friend ModInt operator*(const ModInt& a, const ModInt& b) { return combine(a, b, a.value_ * b.value_); }
  friend ModInt operator-(const ModInt& a) { return combine(a, a, -a.value_); }
  ModInt& operator+=(const ModInt& o) { return *this = *this + o; }
  ModInt& operator-=(const ModInt& o) { return *this = *this - o; }
  ModInt& operator*=(const ModInt& o) { return *this = *this * o; }

  friend bool operator==(const ModInt& a, const ModInt& b) {
    int m = bind(a, b);
    return m ? reduce(a.value_, m) == reduce(b.value_, m) : a.value_ == b.value_;
  }
  friend bool operator!=(const ModInt& a, const ModInt& b) { return !(a == b); }

 private:
  static long reduce(long v, int m) {
    if (!m) return v;
    v %= m;
    return v < 0 ? v + m : v;
  }
  static int bind(const ModInt& a, const ModInt& b) {
    if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_)
      throw VariableMismatch("moduli differ: " + std::to_string(a.modulus_) + " vs " + std::to_string(b.modulus_));
    return a.modulus_ ? a.modulus_ : b.modulus_;
  }
  static ModInt combine(const ModInt& a, const ModInt& b, long v) {
    int m = bind(a, b);
    ModInt r;
    r.modulus_ = m;
    r.value_ = reduce(v, m);
    return r;
  }

  long value_ = 0;
  int modulus_ = 0;
};

}  // namespace birackforge
