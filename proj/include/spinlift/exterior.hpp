#pragma once
// The exterior algebra on a rank-n space with chosen basis e_1..e_n:
// sparse elements over the subset basis, wedge and contraction, the
// induced operator of an invertible matrix, and the vacuum-line test.

#include <cstdint>
#include <map>

#include "spinlift/matrix.hpp"

namespace spinlift {

// Coordinates of a dual vector in the dual basis e^1..e^n.
struct DualVector {
  Field field;
  std::vector<Scalar> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  static DualVector zero(const Field& f, int n) { return {f, std::vector<Scalar>(n, f.zero())}; }
  static DualVector basis(const Field& f, int n, int i);  // e^i, 1-based
  bool operator==(const DualVector& o) const { return field == o.field && coords == o.coords; }
};

// Coordinates of a vector of W in the basis e_1..e_n.
struct PrimalVector {
  Field field;
  std::vector<Scalar> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  static PrimalVector zero(const Field& f, int n) { return {f, std::vector<Scalar>(n, f.zero())}; }
  static PrimalVector basis(const Field& f, int n, int i);  // e_i, 1-based
  bool operator==(const PrimalVector& o) const { return field == o.field && coords == o.coords; }
};

// Pairing delta(u) of a dual vector against a primal vector.
Scalar eval_dual(const DualVector& delta, const PrimalVector& u);

// Subset masks index the basis monomials e_I: mask bit i-1 <-> basis index i,
// and e_I is the wedge of its factors in increasing index order.
class ExteriorElement {
 public:
  ExteriorElement(const Field& field, int rank);
  static ExteriorElement scalar(const Field& field, int rank, const Scalar& c);
  static ExteriorElement basis(const Field& field, int rank, std::uint32_t mask);
  static ExteriorElement from_vector(const PrimalVector& u);

  const Field& field() const { return field_; }
  int rank() const { return rank_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Zero coefficients are never stored.
  const std::map<std::uint32_t, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::uint32_t mask) const;
  void set_coeff(std::uint32_t mask, const Scalar& c);

  ExteriorElement operator+(const ExteriorElement& o) const;
  ExteriorElement operator-(const ExteriorElement& o) const;
  ExteriorElement operator-() const;
  ExteriorElement operator*(const Scalar& c) const;
  bool operator==(const ExteriorElement& o) const;
  bool operator!=(const ExteriorElement& o) const { return !(*this == o); }

 private:
  void check_compatible(const ExteriorElement& o) const;

  Field field_;
  int rank_;
  std::map<std::uint32_t, Scalar> coeffs_;
};

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);

// Interior product by a dual vector: the antiderivation extending delta.
ExteriorElement contract(const DualVector& delta, const ExteriorElement& x);

// Some(c) iff every contraction by a basis dual vector kills x, in which
// case x = c * 1.
std::optional<Scalar> vacuum_test(const ExteriorElement& x);

// A linear endomorphism of the 2^n-dimensional exterior algebra, stored
// densely over the subset basis ordered by mask value.
class ExteriorOperator {
 public:
  ExteriorOperator(int rank, Matrix m);
  static ExteriorOperator identity(const Field& field, int rank);

  int rank() const { return rank_; }
  const Matrix& matrix() const { return m_; }
  Scalar entry(std::uint32_t row_mask, std::uint32_t col_mask) const;

  ExteriorElement apply(const ExteriorElement& x) const;

  ExteriorOperator operator*(const ExteriorOperator& o) const;  // composition
  ExteriorOperator operator*(const Scalar& c) const;
  ExteriorOperator operator+(const ExteriorOperator& o) const;
  ExteriorOperator operator-(const ExteriorOperator& o) const;
  bool operator==(const ExteriorOperator& o) const;
  bool operator!=(const ExteriorOperator& o) const { return !(*this == o); }

 private:
  int rank_;
  Matrix m_;
};

// The operator sending e_I to g(e_i1) ^ ... ^ g(e_ik); multiplicative in g.
ExteriorOperator exterior_functor(const Matrix& g);

}  // namespace spinlift
