#include "spinlift/matrix.hpp"

namespace spinlift {

Matrix::Matrix(const Field& field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::IndexOutOfRange, "negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, field.zero());
}

Matrix Matrix::identity(const Field& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::RankMismatch, "matrix addition shape mismatch");
  }
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + other.entries_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::RankMismatch, "matrix subtraction shape mismatch");
  }
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - other.entries_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::RankMismatch, "matrix product shape mismatch");
  Matrix r(field_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Scalar& bkj = other.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * c;
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
  return r;
}

bool Matrix::operator==(const Matrix& other) const {
  if (field_ != other.field_ || rows_ != other.rows_ || cols_ != other.cols_) return false;
  return entries_ == other.entries_;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) throw Error(ErrorCode::RankMismatch, "determinant of non-square matrix");
  Matrix m = *this;
  Scalar d = field_.one();
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return field_.zero();
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d = d * m.at(col, col);
    const Scalar inv = m.at(col, col).inverse();
    for (int r = col + 1; r < rows_; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return d;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::RankMismatch, "inverse of non-square matrix");
  Matrix m = *this;
  Matrix inv = identity(field_, rows_);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Scalar piv_inv = m.at(col, col).inverse();
    for (int j = 0; j < cols_; ++j) {
      m.at(col, j) *= piv_inv;
      inv.at(col, j) *= piv_inv;
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (int j = 0; j < cols_; ++j) {
        m.at(r, j) -= factor * m.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

namespace {

// Row-echelon reduction; returns pivot column of each pivot row.
std::vector<int> echelon(Matrix& m) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    const Scalar inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (int j = col; j < m.cols(); ++j) m.at(r, j) -= factor * m.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(echelon(m).size());
}

std::vector<Matrix> Matrix::nullspace() const {
  Matrix m = *this;
  const std::vector<int> pivot_cols = echelon(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<Matrix> basis;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    Matrix v(field_, cols_, 1);
    v.at(free_col, 0) = field_.one();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      v.at(pivot_cols[r], 0) = -m.at(static_cast<int>(r), free_col);
    }
    basis.push_back(v);
  }
  return basis;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw Error(ErrorCode::RankMismatch, "matrix-vector shape mismatch");
  }
  std::vector<Scalar> out(rows_, field_.zero());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    }
  return out;
}

}  // namespace spinlift
