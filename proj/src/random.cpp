#include "spinlift/random.hpp"

namespace spinlift {

Scalar random_scalar(const Field& field, Rng& rng, bool nonzero) {
  for (;;) {
    Scalar s = field.zero();
    if (field.is_rationals()) {
      const long num = rng.range(-9, 9);
      const long den = rng.range(1, 9);
      s = Scalar(field, mpq_class(num, den));
    } else {
      mpz_class r(static_cast<unsigned long>(rng.next_u64() & 0xffffffffull));
      r %= field.modulus();
      s = Scalar(field, mpq_class(r));
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

DualVector random_dual(const Field& field, int n, Rng& rng, bool nonzero) {
  for (;;) {
    DualVector d = DualVector::zero(field, n);
    for (int i = 0; i < n; ++i) d.coords[i] = random_scalar(field, rng);
    if (!nonzero) return d;
    for (int i = 0; i < n; ++i) {
      if (!d.coords[i].is_zero()) return d;
    }
  }
}

PrimalVector random_primal(const Field& field, int n, Rng& rng, bool nonzero) {
  for (;;) {
    PrimalVector u = PrimalVector::zero(field, n);
    for (int i = 0; i < n; ++i) u.coords[i] = random_scalar(field, rng);
    if (!nonzero) return u;
    for (int i = 0; i < n; ++i) {
      if (!u.coords[i].is_zero()) return u;
    }
  }
}

HyperbolicVector random_hyperbolic(const Field& field, int n, Rng& rng) {
  return {random_dual(field, n, rng), random_primal(field, n, rng)};
}

Matrix random_matrix(const Field& field, int rows, int cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(field, rng);
  return m;
}

Matrix random_invertible(const Field& field, int n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, n, rng);
    if (!m.det().is_zero()) return m;
  }
}

CliffordElement random_clifford(const Field& field, int rank, Rng& rng, int terms) {
  CliffordElement x(field, rank);
  const std::uint64_t mask_bound = std::uint64_t{1} << (2 * rank);
  for (int t = 0; t < terms; ++t) {
    const std::uint64_t mask = rng.below(mask_bound);
    x.set_coeff(mask, x.coeff(mask) + random_scalar(field, rng));
  }
  return x;
}

TransvectionData random_transvection_data(const Field& field, int n, Rng& rng) {
  const PrimalVector w = random_primal(field, n, rng, /*nonzero=*/true);
  int pivot = 0;
  while (w.coords[pivot].is_zero()) ++pivot;
  DualVector f = DualVector::zero(field, n);
  f.coords[pivot] = w.coords[pivot].inverse();
  DualVector delta = random_dual(field, n, rng);
  const Scalar overlap = eval_dual(delta, w);
  for (int i = 0; i < n; ++i) delta.coords[i] -= overlap * f.coords[i];
  return {delta, w, f};
}

Matrix random_square_det(const Field& field, int n, Rng& rng, Scalar* u_out) {
  const Scalar u = random_scalar(field, rng, /*nonzero=*/true);
  if (u_out) *u_out = u;
  Matrix g(field, n, n);
  g = Matrix::identity(field, n);
  g.at(0, 0) = u.square();
  const int moves = 2 * n + static_cast<int>(rng.below(4));
  for (int m = 0; m < moves; ++m) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    if (i == j) j = (j % n) + 1;
    const ElementaryTransvection t{i, j, random_scalar(field, rng)};
    if (rng.below(2) == 0) {
      g = transvection_matrix(field, n, t) * g;
    } else {
      g = g * transvection_matrix(field, n, t);
    }
  }
  return g;
}

Matrix random_with_det_class(const Field& field, int n, const Scalar& d, Rng& rng) {
  Scalar u = field.one();
  Matrix g = random_square_det(field, n, rng, &u);
  // Scaling one row by d puts the determinant d u^2 in the class of d.
  for (int j = 0; j < n; ++j) g.at(0, j) = g.at(0, j) * d;
  return g;
}

}  // namespace spinlift
