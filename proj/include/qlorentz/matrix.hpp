#pragma once

// Dense square-or-rectangular matrices over Scalar or complex<double>.

#include <omp.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlorentz/scalar.hpp"

namespace qlorentz {

inline bool entry_is_zero(const Scalar& s) { return s.is_zero(); }
inline bool entry_is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!entry_is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& c) {
    for (auto& x : data_)
      if (!entry_is_zero(x)) x *= c;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
  friend Matrix operator*(const T& c, Matrix a) { return a *= c; }
  Matrix operator-() const { return *this * T(-1); }
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;

  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
};

using ExactMatrix = Matrix<Scalar>;
using FloatMatrix = Matrix<std::complex<double>>;

/// Reference product, one thread, skipping zero entries of the left factor.
template <class T>
Matrix<T> multiply_serial(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (entry_is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!entry_is_zero(b(k, j))) out(i, j) += x * b(k, j);
    }
  return out;
}

/// Row-parallel product; falls back to the serial kernel for small inputs.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  if (a.rows() < 8 || omp_in_parallel()) return multiply_serial(a, b);
  Matrix<T> out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (entry_is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!entry_is_zero(b(k, j))) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return multiply(a, b);
}

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (entry_is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!entry_is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& x, const Matrix<T>& y) {
  return x * y - y * x;
}

template <class T>
Matrix<T> diagonal(const std::vector<T>& d) {
  Matrix<T> m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

/// Entrywise specialization at a rational p.
ExactMatrix specialize(const ExactMatrix& m, const QValue& v);
/// Entrywise float evaluation (exact entries must be finite at p).
FloatMatrix to_float(const ExactMatrix& m, double p);
double frobenius(const FloatMatrix& m);
FloatMatrix adjoint(const FloatMatrix& m);

/// Row-major nested string arrays, e.g. [["1","0"],["0","p^2"]].
std::string to_json_text(const ExactMatrix& m);
/// Plain text rows for terminal output.
std::string to_text(const ExactMatrix& m);

}  // namespace qlorentz
