#pragma once
// The split hyperbolic quadratic space on W* + W: form values, reflections,
// the Levi embedding, hyperbolic transvections, chosen-line square scalings,
// and exact isometry checking.  Coordinates are always ordered duals first,
// (e^1..e^n, e_1..e_n).

#include "spinlift/exterior.hpp"

namespace spinlift {

struct HyperbolicVector {
  DualVector dual;
  PrimalVector primal;

  int rank() const { return dual.rank(); }
  const Field& field() const { return dual.field; }
  static HyperbolicVector zero(const Field& f, int n) {
    return {DualVector::zero(f, n), PrimalVector::zero(f, n)};
  }
  bool operator==(const HyperbolicVector& o) const {
    return dual == o.dual && primal == o.primal;
  }
};

// Q(d,u) = d(u).
Scalar q_value(const HyperbolicVector& z);
// <z,z'> = d(u') + d'(u) = Q(z+z') - Q(z) - Q(z').
Scalar pairing(const HyperbolicVector& z, const HyperbolicVector& zp);

// An invertible linear map on W* + W as a 2n x 2n matrix.
class OrthoMap {
 public:
  OrthoMap(int rank, Matrix m);
  static OrthoMap identity(const Field& field, int rank);

  int rank() const { return rank_; }
  const Field& field() const { return m_.field(); }
  const Matrix& matrix() const { return m_; }

  HyperbolicVector apply(const HyperbolicVector& z) const;
  OrthoMap operator*(const OrthoMap& o) const;  // composition, rightmost acts first
  OrthoMap inverse() const;
  Scalar det() const { return m_.det(); }
  bool operator==(const OrthoMap& o) const { return rank_ == o.rank_ && m_ == o.m_; }
  bool operator!=(const OrthoMap& o) const { return !(*this == o); }

 private:
  int rank_;
  Matrix m_;
};

// An invertible n x n matrix acting on W.
struct LeviElement {
  Matrix g;

  int rank() const { return g.rows(); }
  const Field& field() const { return g.field(); }
  static LeviElement identity(const Field& f, int n) { return {Matrix::identity(f, n)}; }
};

// r_v(z) = z - (<z,v>/Q(v)) v; requires Q(v) != 0.
OrthoMap reflection(const HyperbolicVector& v);

// Lambda(g): inverse-transpose on dual coordinates, g on primal coordinates.
OrthoMap levi_embed(const LeviElement& g);

// T_{delta,w}(d,u) = (d + d(w) delta, u - delta(u) w); requires delta(w) = 0.
OrthoMap transvection_map(const DualVector& delta, const PrimalVector& w);

// lambda_t(d,u) = (d + (t^-2 - 1) d(w) f, u + (t^2 - 1) f(u) w);
// requires f(w) = 1 and t != 0.
OrthoMap line_scaling_map(const PrimalVector& w, const DualVector& f, const Scalar& t);

// Q and all pairwise pairings preserved on the basis.
bool is_isometry(const OrthoMap& m);

}  // namespace spinlift
