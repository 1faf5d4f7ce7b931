#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "birackforge/errors.hpp"

namespace birackforge {

/// Dense row-major matrix over an exact commutative ring (LaurentPoly or ModInt).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw ShapeError("matrix data has " + std::to_string(data_.size()) + " entries, expected " + shape_string());
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, const T& one = T(1)) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<T>& data() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// `[[a,b],[c,d]]` with canonical scalar renderings.
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      s += r ? ",[" : "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += ",";
        s += (*this)(r, c).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != T(r == c ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("cannot multiply " + a.shape_string() + " by " + b.shape_string());
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ShapeError("cannot add " + a.shape_string() + " and " + b.shape_string());
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ShapeError("cannot subtract " + a.shape_string() + " and " + b.shape_string());
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = s * x;
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    if (!is_square()) throw ShapeError("trace of non-square " + shape_string());
    T t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

namespace detail {

// Laplace expansion along successive rows, memoized on the set of columns
// still available. O(n 2^n) ring operations, division-free.
template <class T>
T determinant_by_minors(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > 24) throw ShapeError("determinant of " + m.shape_string() + " is too large for cofactor expansion");
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols_left) -> T {
    if (row == n) return T(1);
    auto it = memo.find(cols_left);
    if (it != memo.end()) return it->second;
    T acc;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols_left & (1u << c))) continue;
      const T& entry = m(row, c);
      if (!entry.is_zero()) {
        T minor = self(self, row + 1, cols_left & ~(1u << c));
        if (!minor.is_zero()) {
          if (sign > 0) acc += entry * minor;
          else acc -= entry * minor;
        }
      }
      sign = -sign;
    }
    memo.emplace(cols_left, acc);
    return acc;
  };
  return rec(rec, 0, (1u << n) - 1);
}

}  // namespace detail

template <class T>
T determinant(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeError("determinant of non-square " + m.shape_string());
  return detail::determinant_by_minors(m);
}

/// Inverse by adjugate over determinant; succeeds only when the determinant
/// is a unit of the ring.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeError("inverse of non-square " + m.shape_string());
  const std::size_t n = m.rows();
  T det = determinant(m);
  if (!det.is_unit())
    throw NotInvertibleOverRing("determinant " + det.to_string() + " of " + m.to_string() + " is not a unit");
  T det_inv = det.inverse();
  Matrix<T> inv(n, n);
  if (n == 1) {
    inv(0, 0) = det_inv;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
          if (r == i) continue;
          for (std::size_t c = 0, cc = 0; c < n; ++c) {
            if (c == j) continue;
            minor(rr, cc++) = m(r, c);
          }
          ++rr;
        }
        T cof = determinant(minor);
        if ((i + j) % 2) cof = -cof;
        // adj(m)(j, i) = cofactor(i, j)
        inv(j, i) = cof * det_inv;
      }
  }
  if (!(m * inv).is_identity() || !(inv * m).is_identity())
    throw NotInvertibleOverRing("adjugate check failed for " + m.to_string());
  return inv;
}

}  // namespace birackforge
