#pragma once
// Dense exact matrices over a Scalar field: products, determinants,
// Gauss-Jordan inversion, rank and nullspace.

#include <vector>

#include "spinlift/field.hpp"

namespace spinlift {

class Matrix {
 public:
  Matrix(const Field& field, int rows, int cols);

  static Matrix identity(const Field& field, int n);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator*(const Scalar& c) const;
  Matrix operator-() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  bool is_identity() const;
  Matrix transpose() const;
  Scalar det() const;
  // Nullopt when singular.
  std::optional<Matrix> inverse() const;
  int rank() const;
  // Basis of the right nullspace, one column vector per element.
  std::vector<Matrix> nullspace() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Scalar> entries_;
};

}  // namespace spinlift
