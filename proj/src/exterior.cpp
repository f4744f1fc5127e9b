#include "spinlift/exterior.hpp"

#include <bit>

namespace spinlift {

namespace {

int bits_below(std::uint32_t mask, int bit) {
  return std::popcount(mask & ((std::uint32_t{1} << bit) - 1));
}

// Koszul sign for merging two disjoint sorted monomials: counts the
// transpositions needed to interleave B into A.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  std::uint32_t rest = b;
  while (rest) {
    const int bit = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (bit + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

DualVector DualVector::basis(const Field& f, int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "dual basis index");
  DualVector d = zero(f, n);
  d.coords[i - 1] = f.one();
  return d;
}

PrimalVector PrimalVector::basis(const Field& f, int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "primal basis index");
  PrimalVector u = zero(f, n);
  u.coords[i - 1] = f.one();
  return u;
}

Scalar eval_dual(const DualVector& delta, const PrimalVector& u) {
  if (delta.rank() != u.rank()) throw Error(ErrorCode::RankMismatch, "dual/primal rank");
  Scalar acc = delta.field.zero();
  for (int i = 0; i < delta.rank(); ++i) acc += delta.coords[i] * u.coords[i];
  return acc;
}

ExteriorElement::ExteriorElement(const Field& field, int rank) : field_(field), rank_(rank) {
  if (rank < 0 || rank > 31) throw Error(ErrorCode::RankBoundExceeded, "exterior rank");
}

ExteriorElement ExteriorElement::scalar(const Field& field, int rank, const Scalar& c) {
  ExteriorElement x(field, rank);
  x.set_coeff(0, c);
  return x;
}

ExteriorElement ExteriorElement::basis(const Field& field, int rank, std::uint32_t mask) {
  ExteriorElement x(field, rank);
  x.set_coeff(mask, field.one());
  return x;
}

ExteriorElement ExteriorElement::from_vector(const PrimalVector& u) {
  ExteriorElement x(u.field, u.rank());
  for (int i = 0; i < u.rank(); ++i) x.set_coeff(std::uint32_t{1} << i, u.coords[i]);
  return x;
}

Scalar ExteriorElement::coeff(std::uint32_t mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? field_.zero() : it->second;
}

void ExteriorElement::set_coeff(std::uint32_t mask, const Scalar& c) {
  if (rank_ < 32 && (mask >> rank_) != 0) {
    throw Error(ErrorCode::IndexOutOfRange, "subset mask beyond rank");
  }
  if (c.is_zero()) {
    coeffs_.erase(mask);
  } else {
    coeffs_.insert_or_assign(mask, c);
  }
}

void ExteriorElement::check_compatible(const ExteriorElement& o) const {
  if (rank_ != o.rank_) throw Error(ErrorCode::RankMismatch, "exterior element rank");
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "exterior element field");
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
  check_compatible(o);
  ExteriorElement r = *this;
  for (const auto& [mask, c] : o.coeffs_) r.set_coeff(mask, r.coeff(mask) + c);
  return r;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const {
  check_compatible(o);
  ExteriorElement r = *this;
  for (const auto& [mask, c] : o.coeffs_) r.set_coeff(mask, r.coeff(mask) - c);
  return r;
}

ExteriorElement ExteriorElement::operator-() const {
  ExteriorElement r(field_, rank_);
  for (const auto& [mask, c] : coeffs_) r.coeffs_.insert_or_assign(mask, -c);
  return r;
}

ExteriorElement ExteriorElement::operator*(const Scalar& c) const {
  ExteriorElement r(field_, rank_);
  if (c.is_zero()) return r;
  for (const auto& [mask, v] : coeffs_) r.coeffs_.insert_or_assign(mask, v * c);
  return r;
}

bool ExteriorElement::operator==(const ExteriorElement& o) const {
  return field_ == o.field_ && rank_ == o.rank_ && coeffs_ == o.coeffs_;
}

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.rank() != y.rank()) throw Error(ErrorCode::RankMismatch, "wedge rank");
  if (x.field() != y.field()) throw Error(ErrorCode::FieldMismatch, "wedge field");
  ExteriorElement r(x.field(), x.rank());
  for (const auto& [a, ca] : x.coeffs()) {
    for (const auto& [b, cb] : y.coeffs()) {
      if (a & b) continue;  // repeated factor
      const int sign = merge_sign(a, b);
      const std::uint32_t m = a | b;
      Scalar term = ca * cb;
      if (sign < 0) term = -term;
      r.set_coeff(m, r.coeff(m) + term);
    }
  }
  return r;
}

ExteriorElement contract(const DualVector& delta, const ExteriorElement& x) {
  if (delta.rank() != x.rank()) throw Error(ErrorCode::RankMismatch, "contraction rank");
  if (delta.field != x.field()) throw Error(ErrorCode::FieldMismatch, "contraction field");
  ExteriorElement r(x.field(), x.rank());
  for (const auto& [mask, c] : x.coeffs()) {
    std::uint32_t rest = mask;
    while (rest) {
      const int bit = std::countr_zero(rest);
      rest &= rest - 1;
      const Scalar& d = delta.coords[bit];
      if (d.is_zero()) continue;
      const std::uint32_t m = mask & ~(std::uint32_t{1} << bit);
      Scalar term = d * c;
      if (bits_below(mask, bit) % 2 != 0) term = -term;
      r.set_coeff(m, r.coeff(m) + term);
    }
  }
  return r;
}

std::optional<Scalar> vacuum_test(const ExteriorElement& x) {
  for (int i = 1; i <= x.rank(); ++i) {
    if (!contract(DualVector::basis(x.field(), x.rank(), i), x).is_zero()) return std::nullopt;
  }
  return x.coeff(0);
}

ExteriorOperator::ExteriorOperator(int rank, Matrix m) : rank_(rank), m_(std::move(m)) {
  const int dim = 1 << rank;
  if (m_.rows() != dim || m_.cols() != dim) {
    throw Error(ErrorCode::RankMismatch, "exterior operator dimension");
  }
}

ExteriorOperator ExteriorOperator::identity(const Field& field, int rank) {
  return ExteriorOperator(rank, Matrix::identity(field, 1 << rank));
}

Scalar ExteriorOperator::entry(std::uint32_t row_mask, std::uint32_t col_mask) const {
  return m_.at(static_cast<int>(row_mask), static_cast<int>(col_mask));
}

ExteriorElement ExteriorOperator::apply(const ExteriorElement& x) const {
  if (x.rank() != rank_) throw Error(ErrorCode::RankMismatch, "operator application rank");
  ExteriorElement r(x.field(), rank_);
  for (const auto& [col, c] : x.coeffs()) {
    for (int row = 0; row < m_.rows(); ++row) {
      const Scalar& e = m_.at(row, static_cast<int>(col));
      if (e.is_zero()) continue;
      const auto mask = static_cast<std::uint32_t>(row);
      r.set_coeff(mask, r.coeff(mask) + e * c);
    }
  }
  return r;
}

ExteriorOperator ExteriorOperator::operator*(const ExteriorOperator& o) const {
  if (rank_ != o.rank_) throw Error(ErrorCode::RankMismatch, "operator composition rank");
  return ExteriorOperator(rank_, m_ * o.m_);
}

ExteriorOperator ExteriorOperator::operator*(const Scalar& c) const {
  return ExteriorOperator(rank_, m_ * c);
}

ExteriorOperator ExteriorOperator::operator+(const ExteriorOperator& o) const {
  return ExteriorOperator(rank_, m_ + o.m_);
}

ExteriorOperator ExteriorOperator::operator-(const ExteriorOperator& o) const {
  return ExteriorOperator(rank_, m_ - o.m_);
}

bool ExteriorOperator::operator==(const ExteriorOperator& o) const {
  return rank_ == o.rank_ && m_ == o.m_;
}

ExteriorOperator exterior_functor(const Matrix& g) {
  if (g.rows() != g.cols()) throw Error(ErrorCode::RankMismatch, "exterior functor input");
  if (g.det().is_zero()) throw Error(ErrorCode::SingularMatrix, "exterior functor input");
  const Field& field = g.field();
  const int n = g.rows();
  const int dim = 1 << n;
  Matrix m(field, dim, dim);
  // Images of the single-index generators.
  std::vector<ExteriorElement> gen_images;
  for (int j = 0; j < n; ++j) {
    PrimalVector img = PrimalVector::zero(field, n);
    for (int i = 0; i < n; ++i) img.coords[i] = g.at(i, j);
    gen_images.push_back(ExteriorElement::from_vector(img));
  }
  for (std::uint32_t col = 0; col < static_cast<std::uint32_t>(dim); ++col) {
    ExteriorElement image = ExteriorElement::scalar(field, n, field.one());
    std::uint32_t rest = col;
    while (rest) {
      const int bit = std::countr_zero(rest);
      rest &= rest - 1;
      image = wedge(image, gen_images[bit]);
    }
    for (const auto& [row, c] : image.coeffs()) m.at(static_cast<int>(row), static_cast<int>(col)) = c;
  }
  return ExteriorOperator(n, std::move(m));
}

}  // namespace spinlift
