#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "schrodinger/scalar.hpp"

namespace schrodinger::linalg {

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& a);

/// Basis of {v : a v = 0}, each vector scaled to primitive integer entries
/// with positive leading entry.
std::vector<std::vector<Scalar>> nullspace(const Matrix& a);

/// The unique solution of a v = b, or nullopt if there is none or it is not
/// unique.
std::optional<std::vector<Scalar>> solve_unique(const Matrix& a, const std::vector<Scalar>& b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Incrementally grown subspace of Q^n kept in reduced echelon form.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }

  bool contains(const std::vector<Scalar>& v) const;
  /// Returns true if v was not already in the span.
  bool insert(const std::vector<Scalar>& v);

 private:
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  std::size_t dim_;
  std::vector<std::vector<Scalar>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace schrodinger::linalg
