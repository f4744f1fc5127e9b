#include "spinlift/ortho.hpp"

namespace spinlift {

namespace {

std::vector<Scalar> to_coords(const HyperbolicVector& z) {
  std::vector<Scalar> v = z.dual.coords;
  v.insert(v.end(), z.primal.coords.begin(), z.primal.coords.end());
  return v;
}

HyperbolicVector from_coords(const Field& field, int n, const std::vector<Scalar>& v) {
  HyperbolicVector z = HyperbolicVector::zero(field, n);
  for (int i = 0; i < n; ++i) {
    z.dual.coords[i] = v[i];
    z.primal.coords[i] = v[n + i];
  }
  return z;
}

HyperbolicVector basis_vector(const Field& field, int n, int k) {  // k in [0, 2n)
  HyperbolicVector z = HyperbolicVector::zero(field, n);
  if (k < n) {
    z.dual.coords[k] = field.one();
  } else {
    z.primal.coords[k - n] = field.one();
  }
  return z;
}

}  // namespace

Scalar q_value(const HyperbolicVector& z) { return eval_dual(z.dual, z.primal); }

Scalar pairing(const HyperbolicVector& z, const HyperbolicVector& zp) {
  if (z.rank() != zp.rank()) throw Error(ErrorCode::RankMismatch, "pairing rank");
  return eval_dual(z.dual, zp.primal) + eval_dual(zp.dual, z.primal);
}

OrthoMap::OrthoMap(int rank, Matrix m) : rank_(rank), m_(std::move(m)) {
  if (m_.rows() != 2 * rank || m_.cols() != 2 * rank) {
    throw Error(ErrorCode::RankMismatch, "orthogonal map dimension");
  }
}

OrthoMap OrthoMap::identity(const Field& field, int rank) {
  return OrthoMap(rank, Matrix::identity(field, 2 * rank));
}

HyperbolicVector OrthoMap::apply(const HyperbolicVector& z) const {
  if (z.rank() != rank_) throw Error(ErrorCode::RankMismatch, "orthogonal map application");
  return from_coords(m_.field(), rank_, m_.apply(to_coords(z)));
}

OrthoMap OrthoMap::operator*(const OrthoMap& o) const {
  if (rank_ != o.rank_) throw Error(ErrorCode::RankMismatch, "orthogonal map composition");
  return OrthoMap(rank_, m_ * o.m_);
}

OrthoMap OrthoMap::inverse() const {
  auto inv = m_.inverse();
  if (!inv) throw Error(ErrorCode::SingularMatrix, "orthogonal map inverse");
  return OrthoMap(rank_, *inv);
}

OrthoMap reflection(const HyperbolicVector& v) {
  const Scalar q = q_value(v);
  if (q.is_zero()) throw Error(ErrorCode::IsotropicVector, "reflection in an isotropic vector");
  const Field& field = v.field();
  const int n = v.rank();
  Matrix m(field, 2 * n, 2 * n);
  const std::vector<Scalar> vc = to_coords(v);
  const Scalar q_inv = q.inverse();
  for (int col = 0; col < 2 * n; ++col) {
    const HyperbolicVector z = basis_vector(field, n, col);
    const Scalar factor = pairing(z, v) * q_inv;
    for (int row = 0; row < 2 * n; ++row) {
      Scalar e = (row == col) ? field.one() : field.zero();
      m.at(row, col) = e - factor * vc[row];
    }
  }
  return OrthoMap(n, std::move(m));
}

OrthoMap levi_embed(const LeviElement& g) {
  const Field& field = g.field();
  const int n = g.rank();
  auto inv = g.g.inverse();
  if (!inv) throw Error(ErrorCode::SingularMatrix, "Levi embedding of a singular matrix");
  const Matrix dual_block = inv->transpose();
  Matrix m(field, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = dual_block.at(i, j);
      m.at(n + i, n + j) = g.g.at(i, j);
    }
  return OrthoMap(n, std::move(m));
}

OrthoMap transvection_map(const DualVector& delta, const PrimalVector& w) {
  if (delta.rank() != w.rank()) throw Error(ErrorCode::RankMismatch, "transvection rank");
  if (!eval_dual(delta, w).is_zero()) {
    throw Error(ErrorCode::NotIsotropicPair, "transvection requires delta(w) = 0");
  }
  const Field& field = delta.field;
  const int n = delta.rank();
  Matrix m = Matrix::identity(field, 2 * n);
  // d + d(w) delta on the dual block, u - delta(u) w on the primal block.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) += delta.coords[i] * w.coords[j];
      m.at(n + i, n + j) -= w.coords[i] * delta.coords[j];
    }
  return OrthoMap(n, std::move(m));
}

OrthoMap line_scaling_map(const PrimalVector& w, const DualVector& f, const Scalar& t) {
  if (w.rank() != f.rank()) throw Error(ErrorCode::RankMismatch, "line scaling rank");
  if (t.is_zero()) throw Error(ErrorCode::ZeroParameter, "line scaling with t = 0");
  if (!eval_dual(f, w).is_one()) {
    throw Error(ErrorCode::BadPairing, "line scaling requires f(w) = 1");
  }
  const Field& field = w.field;
  const int n = w.rank();
  const Scalar t2 = t.square();
  const Scalar dual_scale = t2.inverse() - field.one();
  const Scalar primal_scale = t2 - field.one();
  Matrix m = Matrix::identity(field, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) += dual_scale * f.coords[i] * w.coords[j];
      m.at(n + i, n + j) += primal_scale * w.coords[i] * f.coords[j];
    }
  return OrthoMap(n, std::move(m));
}

bool is_isometry(const OrthoMap& m) {
  const Field& field = m.field();
  const int n = m.rank();
  std::vector<HyperbolicVector> images;
  images.reserve(2 * n);
  for (int k = 0; k < 2 * n; ++k) images.push_back(m.apply(basis_vector(field, n, k)));
  for (int a = 0; a < 2 * n; ++a) {
    const HyperbolicVector za = basis_vector(field, n, a);
    if (q_value(images[a]) != q_value(za)) return false;
    for (int b = a + 1; b < 2 * n; ++b) {
      if (pairing(images[a], images[b]) != pairing(za, basis_vector(field, n, b))) return false;
    }
  }
  return true;
}

}  // namespace spinlift
