#pragma once
// The faithful representation of the split Clifford algebra on the
// exterior algebra: duals act by contraction, primals by wedge.  Builds
// matrix units, projectors, and exact preimages.

#include "spinlift/clifford.hpp"

namespace spinlift {

struct MatrixUnitElement {
  std::uint32_t target;  // I: row subset
  std::uint32_t source;  // J: column subset
  CliffordElement element;
  int sign;  // the computed normalization, +1 or -1
};

// Dense-operator rank cap (dimension 2^n); configurable.
int max_operator_rank();
void set_max_operator_rank(int rank);

// The algebra homomorphism sending f_i to contraction by e^i and w_i to
// wedge by e_i, as a dense operator over the subset basis.
ExteriorOperator spinor_action(const CliffordElement& x);

// Action of x on a single exterior element, without building the matrix.
ExteriorElement spinor_apply(const CliffordElement& x, const ExteriorElement& s);

// P_I: the Clifford element acting as the projector onto the line K e_I.
CliffordElement projector(const Field& field, int rank, std::uint32_t subset);

// T_{I,J}: the Clifford element acting as the matrix unit E_{I,J}; the
// sign is computed by applying the unsigned operator to e_J.
MatrixUnitElement matrix_unit(const Field& field, int rank, std::uint32_t target,
                              std::uint32_t source);

// Exact preimage of a dense operator: sum of M[I,J] T_{I,J}.
CliffordElement spinor_preimage(const ExteriorOperator& m);

// (P_in, P_out) for a 1-based index: complementary idempotents projecting
// onto monomials containing / omitting e_{i0}.  Conjugation swaps them.
std::pair<CliffordElement, CliffordElement> occupation_projectors(const Field& field, int rank,
                                                                  int i0);

}  // namespace spinlift
