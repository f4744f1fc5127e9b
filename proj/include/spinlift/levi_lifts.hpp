#pragma once
// Explicit spin lifts and factorizations: transvection units, chosen-line
// scalings, pair generators, the five-factor commutator product, and the
// square-determinant factorization with its assembled Clifford lift.

#include <vector>

#include "spinlift/certificate.hpp"

namespace spinlift {

enum class LiftKind { TransvectionUnit, LineScalingUnit, PairGenerator };

// A Clifford unit together with the orthogonal map it realizes;
// spin_check(element) always equals ortho.
struct LiftFactor {
  LiftKind kind;
  CliffordElement element;
  OrthoMap ortho;
};

// e_j -> e_j + r e_i on W, other basis vectors fixed (1-based indices).
struct ElementaryTransvection {
  int i;
  int j;
  Scalar r;
};

// e_i -> a e_i, e_j -> a^-1 e_j, other basis vectors fixed.
struct BlockScaling {
  int i;
  int j;
  Scalar a;
};

Matrix transvection_matrix(const Field& field, int n, const ElementaryTransvection& t);
Matrix block_scaling_matrix(const Field& field, int n, const BlockScaling& b);
// Scales e_1 by t and fixes the other basis vectors.
Matrix line_matrix(const Field& field, int n, const Scalar& t);

// x = 1 + iota(delta,0) iota(0,w); acts as the hyperbolic transvection.
LiftFactor transvection_lift(const DualVector& delta, const PrimalVector& w);

// x = iota(-t^-1 f, t w) iota(-f, w); acts as the chosen-line square
// scaling, with exterior action -t^-1 times the line-scaling functor.
LiftFactor line_scaling_lift(const PrimalVector& w, const DualVector& f, const Scalar& t);

// The two-reflection generator supported on a basis pair (p, q), both
// factor vectors of Q-value -1.
LiftFactor pair_generator(const Field& field, int rank, int p_idx, int q_idx, const Scalar& a);

// Five pair generators through an auxiliary index k realize the elementary
// Levi transvection e_j -> e_j + c e_i (rightmost factor acts first).
LiftFactor elementary_levi_lift(const Field& field, int rank, int i, int j, const Scalar& c,
                                int k);

// D_ij(a) as a product of four elementary transvections.
std::vector<ElementaryTransvection> block_scaling_factorization(const Field& field, int i, int j,
                                                                const Scalar& a);

enum class PivotOrder { FirstNonzero, LastNonzero };

struct TransvectionReduction {
  std::vector<ElementaryTransvection> prefix;   // A
  std::vector<Scalar> diagonal;                 // D
  std::vector<ElementaryTransvection> suffix;   // B
};

// g = (prod prefix) diag (prod suffix) by transvection-only row and column
// operations; zero pivots are repaired with a synthesized three-transvection
// swap whose sign lands in the diagonal.
TransvectionReduction transvection_reduce(const LeviElement& g,
                                          PivotOrder order = PivotOrder::FirstNonzero);

struct SquareDetFactorization {
  LeviElement g;
  Scalar u;  // u^2 = det(g)
  std::vector<ElementaryTransvection> prefix;  // A
  Scalar line_scale;                           // the L_1 parameter, u^2
  std::vector<BlockScaling> blocks;            // D_{j1}(t_j), identity blocks omitted
  std::vector<ElementaryTransvection> suffix;  // B
};

// Exact factorization g = A L_1(u^2) prod D_{j1}(t_j) B; requires n >= 2
// and square determinant (NonSquareDeterminant otherwise).
SquareDetFactorization square_det_factor(const LeviElement& g,
                                         PivotOrder order = PivotOrder::FirstNonzero);

Matrix recompose(const SquareDetFactorization& f);

// Multiplies the factor lifts into one even unitary Clifford element whose
// conjugation action is the Levi embedding of g and whose exterior action
// is -u^-1 times the exterior functor of g.  The certificate records the
// verification outcomes.
SpinLiftCertificate assemble_lift(const LeviElement& g,
                                  PivotOrder order = PivotOrder::FirstNonzero);

}  // namespace spinlift
