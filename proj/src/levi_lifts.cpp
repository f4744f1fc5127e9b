#include "spinlift/levi_lifts.hpp"

#include "spinlift/spin_rep.hpp"

namespace spinlift {

Matrix transvection_matrix(const Field& field, int n, const ElementaryTransvection& t) {
  if (t.i == t.j) throw Error(ErrorCode::EqualIndices, "transvection indices");
  if (t.i < 1 || t.i > n || t.j < 1 || t.j > n) {
    throw Error(ErrorCode::IndexOutOfRange, "transvection index");
  }
  Matrix m = Matrix::identity(field, n);
  m.at(t.i - 1, t.j - 1) = t.r;
  return m;
}

Matrix block_scaling_matrix(const Field& field, int n, const BlockScaling& b) {
  if (b.i == b.j) throw Error(ErrorCode::EqualIndices, "block scaling indices");
  if (b.a.is_zero()) throw Error(ErrorCode::ZeroParameter, "block scaling parameter");
  Matrix m = Matrix::identity(field, n);
  m.at(b.i - 1, b.i - 1) = b.a;
  m.at(b.j - 1, b.j - 1) = b.a.inverse();
  return m;
}

Matrix line_matrix(const Field& field, int n, const Scalar& t) {
  if (t.is_zero()) throw Error(ErrorCode::ZeroParameter, "line scaling parameter");
  Matrix m = Matrix::identity(field, n);
  m.at(0, 0) = t;
  return m;
}

LiftFactor transvection_lift(const DualVector& delta, const PrimalVector& w) {
  OrthoMap ortho = transvection_map(delta, w);  // validates delta(w) = 0
  const Field& field = delta.field;
  const int n = delta.rank();
  const CliffordElement a = embed_vector({delta, PrimalVector::zero(field, n)});
  const CliffordElement b = embed_vector({DualVector::zero(field, n), w});
  const CliffordElement element = CliffordElement::one(field, n) + cl_mul(a, b);
  return {LiftKind::TransvectionUnit, element, std::move(ortho)};
}

LiftFactor line_scaling_lift(const PrimalVector& w, const DualVector& f, const Scalar& t) {
  OrthoMap ortho = line_scaling_map(w, f, t);  // validates f(w) = 1, t != 0
  const Field& field = w.field;
  const int n = w.rank();
  const Scalar t_inv = t.inverse();
  DualVector scaled_f = f;
  PrimalVector scaled_w = w;
  for (int i = 0; i < n; ++i) {
    scaled_f.coords[i] = -(t_inv * f.coords[i]);
    scaled_w.coords[i] = t * w.coords[i];
  }
  DualVector neg_f = f;
  for (int i = 0; i < n; ++i) neg_f.coords[i] = -f.coords[i];
  const CliffordElement u_t = embed_vector({scaled_f, scaled_w});
  const CliffordElement v = embed_vector({neg_f, w});
  return {LiftKind::LineScalingUnit, cl_mul(u_t, v), std::move(ortho)};
}

LiftFactor pair_generator(const Field& field, int rank, int p_idx, int q_idx, const Scalar& a) {
  if (p_idx == q_idx) throw Error(ErrorCode::EqualIndices, "pair generator indices");
  if (p_idx < 1 || p_idx > rank || q_idx < 1 || q_idx > rank) {
    throw Error(ErrorCode::IndexOutOfRange, "pair generator index");
  }
  // Both factor vectors have Q-value -1.
  HyperbolicVector first = HyperbolicVector::zero(field, rank);
  first.dual.coords[p_idx - 1] = -field.one();
  first.dual.coords[q_idx - 1] = -a;
  first.primal.coords[p_idx - 1] = field.one();
  HyperbolicVector second = HyperbolicVector::zero(field, rank);
  second.dual.coords[p_idx - 1] = -field.one();
  second.primal.coords[p_idx - 1] = field.one();

  const CliffordElement element = cl_mul(embed_vector(first), embed_vector(second));
  OrthoMap ortho = reflection(first) * reflection(second);
  return {LiftKind::PairGenerator, element, std::move(ortho)};
}

LiftFactor elementary_levi_lift(const Field& field, int rank, int i, int j, const Scalar& c,
                                int k) {
  if (rank < 3) throw Error(ErrorCode::NeedRankAtLeast3, "elementary Levi lift");
  if (i == j || j == k || i == k) {
    throw Error(ErrorCode::IndicesNotDistinct, "elementary Levi lift indices");
  }
  const Scalar half = field.from_int(2).inverse();
  const Scalar c_half = c * half;
  const LiftFactor factors[5] = {
      pair_generator(field, rank, k, i, field.one()),
      pair_generator(field, rank, k, j, c_half),
      pair_generator(field, rank, k, i, -field.one()),
      pair_generator(field, rank, k, j, -c_half),
      pair_generator(field, rank, i, j, -c),
  };
  CliffordElement element = factors[0].element;
  OrthoMap ortho = factors[0].ortho;
  for (int t = 1; t < 5; ++t) {
    element = cl_mul(element, factors[t].element);
    ortho = ortho * factors[t].ortho;
  }
  return {LiftKind::TransvectionUnit, std::move(element), std::move(ortho)};
}

std::vector<ElementaryTransvection> block_scaling_factorization(const Field& field, int i, int j,
                                                                const Scalar& a) {
  if (i == j) throw Error(ErrorCode::EqualIndices, "block scaling factorization indices");
  if (a.is_zero()) throw Error(ErrorCode::ZeroParameter, "block scaling factorization");
  const Scalar one = field.one();
  return {
      {i, j, a - one},
      {j, i, one},
      {i, j, a.inverse() - one},
      {j, i, -a},
  };
}

TransvectionReduction transvection_reduce(const LeviElement& g, PivotOrder order) {
  const int n = g.rank();
  if (n < 2) throw Error(ErrorCode::NeedRankAtLeast2, "transvection reduction");
  const Field& field = g.field();
  Matrix m = g.g;
  TransvectionReduction out;

  // Invariant: g = (prod prefix) m (prod suffix).
  auto row_add = [&](int dst, int src, const Scalar& r) {  // row_dst += r * row_src
    for (int col = 0; col < n; ++col) m.at(dst - 1, col) += r * m.at(src - 1, col);
    out.prefix.push_back({dst, src, -r});
  };
  auto col_add = [&](int dst, int src, const Scalar& r) {  // col_dst += r * col_src
    for (int row = 0; row < n; ++row) m.at(row, dst - 1) += r * m.at(row, src - 1);
    out.suffix.insert(out.suffix.begin(), {src, dst, -r});
  };

  for (int t = 1; t <= n; ++t) {
    if (m.at(t - 1, t - 1).is_zero()) {
      int swap_row = 0;
      if (order == PivotOrder::FirstNonzero) {
        for (int s = t + 1; s <= n && swap_row == 0; ++s) {
          if (!m.at(s - 1, t - 1).is_zero()) swap_row = s;
        }
      } else {
        for (int s = n; s > t && swap_row == 0; --s) {
          if (!m.at(s - 1, t - 1).is_zero()) swap_row = s;
        }
      }
      if (swap_row == 0) throw Error(ErrorCode::SingularMatrix, "transvection reduction");
      // Synthesized swap: rows become (row_s, -row_t); the sign is later
      // absorbed into the diagonal.
      const Scalar one = field.one();
      for (int col = 0; col < n; ++col) {
        Scalar top = m.at(t - 1, col);
        m.at(t - 1, col) = m.at(swap_row - 1, col);
        m.at(swap_row - 1, col) = -top;
      }
      out.prefix.push_back({t, swap_row, -one});
      out.prefix.push_back({swap_row, t, one});
      out.prefix.push_back({t, swap_row, -one});
    }
    const Scalar pivot_inv = m.at(t - 1, t - 1).inverse();
    for (int s = t + 1; s <= n; ++s) {
      if (!m.at(s - 1, t - 1).is_zero()) row_add(s, t, -(m.at(s - 1, t - 1) * pivot_inv));
    }
    for (int c = t + 1; c <= n; ++c) {
      if (!m.at(t - 1, c - 1).is_zero()) col_add(c, t, -(m.at(t - 1, c - 1) * pivot_inv));
    }
  }
  out.diagonal.reserve(n);
  for (int t = 0; t < n; ++t) out.diagonal.push_back(m.at(t, t));
  return out;
}

SquareDetFactorization square_det_factor(const LeviElement& g, PivotOrder order) {
  const int n = g.rank();
  if (n < 2) throw Error(ErrorCode::NeedRankAtLeast2, "square-determinant factorization");
  const Scalar det = g.g.det();
  if (det.is_zero()) throw Error(ErrorCode::SingularMatrix, "square-determinant factorization");
  const auto u = sqrt_in_field(det);
  if (!u) {
    throw Error(ErrorCode::NonSquareDeterminant,
                "determinant " + det.str() + " is not a square in " + g.field().tag());
  }
  TransvectionReduction reduction = transvection_reduce(g, order);
  SquareDetFactorization out{g, *u, std::move(reduction.prefix), det, {},
                             std::move(reduction.suffix)};
  // The diagonal redistributes through the distinguished first index:
  // diag(t_1..t_n) = L_1(u^2) prod_j D_{j1}(t_j) because prod t_i = u^2.
  for (int j = 2; j <= n; ++j) {
    const Scalar& tj = reduction.diagonal[j - 1];
    if (!tj.is_one()) out.blocks.push_back({j, 1, tj});
  }
  return out;
}

Matrix recompose(const SquareDetFactorization& f) {
  const Field& field = f.g.field();
  const int n = f.g.rank();
  Matrix m = Matrix::identity(field, n);
  for (const auto& t : f.prefix) m = m * transvection_matrix(field, n, t);
  m = m * line_matrix(field, n, f.line_scale);
  for (const auto& b : f.blocks) m = m * block_scaling_matrix(field, n, b);
  for (const auto& t : f.suffix) m = m * transvection_matrix(field, n, t);
  return m;
}

namespace {

LiftFactor lift_elementary(const Field& field, int n, const ElementaryTransvection& t) {
  // Lambda(T_ij(r)) is the hyperbolic transvection with delta = -r e^j,
  // w = e_i.
  DualVector delta = DualVector::zero(field, n);
  delta.coords[t.j - 1] = -t.r;
  return transvection_lift(delta, PrimalVector::basis(field, n, t.i));
}

}  // namespace

SpinLiftCertificate assemble_lift(const LeviElement& g, PivotOrder order) {
  const Field& field = g.field();
  const int n = g.rank();
  SquareDetFactorization fact = square_det_factor(g, order);

  CliffordElement x = CliffordElement::one(field, n);
  for (const auto& t : fact.prefix) x = cl_mul(x, lift_elementary(field, n, t).element);
  x = cl_mul(x, line_scaling_lift(PrimalVector::basis(field, n, 1),
                                  DualVector::basis(field, n, 1), fact.u)
                    .element);
  for (const auto& b : fact.blocks) {
    for (const auto& t : block_scaling_factorization(field, b.i, b.j, b.a)) {
      x = cl_mul(x, lift_elementary(field, n, t).element);
    }
  }
  for (const auto& t : fact.suffix) x = cl_mul(x, lift_elementary(field, n, t).element);

  SpinLiftCertificate cert{Verdict::InImage, field, n,       g.g, g.g.det(),
                           fact.u,           x,     std::nullopt, {}};
  cert.checks.even = x.is_even();
  const CliffordElement conj = cl_conj(x);
  const CliffordElement unit = CliffordElement::one(field, n);
  cert.checks.norm_one = cl_mul(x, conj) == unit && cl_mul(conj, x) == unit;
  const auto induced = spin_check(x);
  cert.checks.conj_matches = induced.has_value() && *induced == levi_embed(g);
  const Scalar c = -fact.u.inverse();
  cert.checks.exterior_action_matches = spinor_action(x) == exterior_functor(g.g) * c;
  if (cert.checks.exterior_action_matches) cert.scalar_c = c;
  return cert;
}

}  // namespace spinlift
