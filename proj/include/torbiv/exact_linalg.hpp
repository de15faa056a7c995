#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "torbiv/error.hpp"

namespace torbiv {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix over an exact ring. No floating point is ever stored.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<long>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (long v : row)
        data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out.push_back((*this)(i, j));
    return out;
  }

  bool is_zero() const {
    for (const auto &v : data_)
      if (v != 0)
        return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix &a, const std::vector<T> &x) {
    if (a.cols_ != x.size())
      throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
    std::vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        y[i] += a(i, j) * x[j];
    return y;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix &m);

// Matrix with the given vectors as columns; all must share one length.
IntMatrix from_columns(const std::vector<std::vector<Integer>> &columns,
                       std::size_t rows);

struct SmithForm {
  IntMatrix u; // unimodular, rows x rows
  IntMatrix d; // diagonal, d = u * m * v
  IntMatrix v; // unimodular, cols x cols
};

/// Smith normal form with transforms. Pivots on the nonzero entry of least
/// absolute value (first in row-major order on ties), so the output is
/// reproducible. Diagonal entries are nonnegative and form a divisibility
/// chain followed by zeros.
SmithForm smith_normal_form(const IntMatrix &m);

/// Invariant factors (nonzero diagonal of the Smith form).
std::vector<Integer> invariant_factors(const IntMatrix &m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix &m);

/// Exact integer inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix &r);

bool is_unimodular(const IntMatrix &m);

std::size_t rational_rank(const RatMatrix &m);
std::size_t integer_rank(const IntMatrix &m);

/// Basis of the right null space {x : m x = 0} over Q, one vector per free
/// column of the reduced row echelon form.
std::vector<std::vector<Rational>> rational_kernel(const RatMatrix &m);

/// Scale a rational vector to the primitive integer vector on the same ray.
std::vector<Integer> primitive_integer(const std::vector<Rational> &v);

Integer gcd_of(const std::vector<Integer> &v);

std::string to_string(const IntMatrix &m);
std::string to_string(const RatMatrix &m);

} // namespace torbiv
