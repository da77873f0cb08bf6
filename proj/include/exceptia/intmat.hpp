#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exceptia/exactnum.hpp"

namespace exceptia {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == m.cols_, ErrorCode::kMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vec(std::size_t i) const { auto r = row(i); return {r.begin(), r.end()}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Rows [first, first+count).
  Matrix row_block(std::size_t first, std::size_t count) const {
    Matrix m(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols() == b.rows(), ErrorCode::kMismatch, "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
// Requires every entry to be an integer.
IntMatrix to_integer(const RatMatrix& m);
// Smallest positive integer d with d*m integral.
BigInt common_denominator(const RatMatrix& m);

struct HermiteResult {
  IntMatrix form;       // row Hermite normal form, same shape as the input
  IntMatrix transform;  // unimodular U with U * input == form
  std::size_t rank = 0; // nonzero rows of form come first
};

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot).
HermiteResult hermite_rows(const IntMatrix& a);

// Basis (as rows) of the Z-module spanned by the rows of a.
IntMatrix row_basis(const IntMatrix& a);

// Basis (as rows) of the saturated lattice {c in Z^rows : c * a == 0}.
IntMatrix integer_kernel(const IntMatrix& a);

Rational determinant(RatMatrix m);
BigInt determinant(const IntMatrix& m);
RatMatrix inverse(RatMatrix m);

// Solves c * b == x for a row vector c when b has independent rows.
std::optional<std::vector<Rational>> solve_row_combination(const RatMatrix& b,
                                                           std::span<const Rational> x);

bool is_unimodular(const IntMatrix& m);

}  // namespace exceptia
