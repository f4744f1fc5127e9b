#include "spinlift/spin_rep.hpp"

#include <atomic>
#include <bit>

namespace spinlift {

namespace {

std::atomic<int> g_max_operator_rank{8};

void check_operator_rank(int rank) {
  if (rank > g_max_operator_rank.load()) {
    throw Error(ErrorCode::RankBoundExceeded,
                "dense operator rank " + std::to_string(rank) + " exceeds cap " +
                    std::to_string(g_max_operator_rank.load()));
  }
}

// Applies one generator (0-based bit) to a basis monomial e_J.  Returns
// false when the image is zero; otherwise writes the new mask and flips
// the sign per the Koszul count below the acted index.
bool apply_generator_to_subset(int bit, int rank, std::uint32_t& subset, int& sign) {
  const bool is_dual = bit < rank;
  const int index = is_dual ? bit : bit - rank;
  const std::uint32_t index_bit = std::uint32_t{1} << index;
  if (is_dual) {
    if ((subset & index_bit) == 0) return false;  // contraction kills
    subset &= ~index_bit;
  } else {
    if ((subset & index_bit) != 0) return false;  // repeated wedge factor
    subset |= index_bit;
  }
  if (std::popcount(subset & (index_bit - 1)) % 2 != 0) sign = -sign;
  return true;
}

// e_J image under a full monomial; generators act rightmost first.
bool apply_monomial_to_subset(std::uint64_t monomial, int rank, std::uint32_t& subset,
                              int& sign) {
  for (int bit = 2 * rank - 1; bit >= 0; --bit) {
    if ((monomial >> bit) & 1) {
      if (!apply_generator_to_subset(bit, rank, subset, sign)) return false;
    }
  }
  return true;
}

}  // namespace

int max_operator_rank() { return g_max_operator_rank.load(); }

void set_max_operator_rank(int rank) { g_max_operator_rank.store(rank); }

ExteriorOperator spinor_action(const CliffordElement& x) {
  const Field& field = x.field();
  const int n = x.rank();
  check_operator_rank(n);
  const int dim = 1 << n;
  Matrix m(field, dim, dim);
  for (const auto& [monomial, c] : x.coeffs()) {
    for (std::uint32_t col = 0; col < static_cast<std::uint32_t>(dim); ++col) {
      std::uint32_t row = col;
      int sign = 1;
      if (!apply_monomial_to_subset(monomial, n, row, sign)) continue;
      Scalar term = c;
      if (sign < 0) term = -term;
      m.at(static_cast<int>(row), static_cast<int>(col)) += term;
    }
  }
  return ExteriorOperator(n, std::move(m));
}

ExteriorElement spinor_apply(const CliffordElement& x, const ExteriorElement& s) {
  if (x.rank() != s.rank()) throw Error(ErrorCode::RankMismatch, "spinor action rank");
  ExteriorElement r(s.field(), s.rank());
  for (const auto& [monomial, c] : x.coeffs()) {
    for (const auto& [subset, v] : s.coeffs()) {
      std::uint32_t image = subset;
      int sign = 1;
      if (!apply_monomial_to_subset(monomial, x.rank(), image, sign)) continue;
      Scalar term = c * v;
      if (sign < 0) term = -term;
      r.set_coeff(image, r.coeff(image) + term);
    }
  }
  return r;
}

CliffordElement projector(const Field& field, int rank, std::uint32_t subset) {
  if (rank < 32 && (subset >> rank) != 0) {
    throw Error(ErrorCode::IndexOutOfRange, "projector subset beyond rank");
  }
  // Product of w_i f_i over i in I and f_j w_j over j outside I, each
  // group in increasing index order.
  CliffordElement p = CliffordElement::one(field, rank);
  for (int i = 0; i < rank; ++i) {
    if ((subset >> i) & 1) {
      const CliffordElement wf = cl_mul(CliffordElement::generator(field, rank, rank + i + 1),
                                        CliffordElement::generator(field, rank, i + 1));
      p = cl_mul(p, wf);
    }
  }
  for (int j = 0; j < rank; ++j) {
    if (((subset >> j) & 1) == 0) {
      const CliffordElement fw = cl_mul(CliffordElement::generator(field, rank, j + 1),
                                        CliffordElement::generator(field, rank, rank + j + 1));
      p = cl_mul(p, fw);
    }
  }
  return p;
}

MatrixUnitElement matrix_unit(const Field& field, int rank, std::uint32_t target,
                              std::uint32_t source) {
  CliffordElement unsigned_element = projector(field, rank, source);
  // Contractions for J \ I, then wedges for I \ J, applied to P_J from the
  // left; each product runs in increasing index order.
  const std::uint32_t remove = source & ~target;
  const std::uint32_t insert = target & ~source;
  for (int j = rank - 1; j >= 0; --j) {
    if ((remove >> j) & 1) {
      unsigned_element =
          cl_mul(CliffordElement::generator(field, rank, j + 1), unsigned_element);
    }
  }
  for (int i = rank - 1; i >= 0; --i) {
    if ((insert >> i) & 1) {
      unsigned_element =
          cl_mul(CliffordElement::generator(field, rank, rank + i + 1), unsigned_element);
    }
  }
  // The unique sign making the operator send e_J to e_I, read off by
  // applying the unsigned operator.
  const ExteriorElement image =
      spinor_apply(unsigned_element, ExteriorElement::basis(field, rank, source));
  const Scalar observed = image.coeff(target);
  int sign = 1;
  if (observed == -field.one()) {
    sign = -1;
  } else if (!observed.is_one()) {
    throw Error(ErrorCode::DecompositionFails, "matrix unit image is not a signed basis vector");
  }
  MatrixUnitElement unit{target, source, unsigned_element, sign};
  if (sign < 0) unit.element = -unit.element;
  return unit;
}

CliffordElement spinor_preimage(const ExteriorOperator& m) {
  const Field& field = m.matrix().field();
  const int rank = m.rank();
  CliffordElement result(field, rank);
  const int dim = 1 << rank;
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) {
      const Scalar& c = m.matrix().at(row, col);
      if (c.is_zero()) continue;
      const MatrixUnitElement unit = matrix_unit(field, rank, static_cast<std::uint32_t>(row),
                                                 static_cast<std::uint32_t>(col));
      result = result + unit.element * c;
    }
  }
  return result;
}

std::pair<CliffordElement, CliffordElement> occupation_projectors(const Field& field, int rank,
                                                                  int i0) {
  if (i0 < 1 || i0 > rank) throw Error(ErrorCode::IndexOutOfRange, "occupation index");
  const CliffordElement f = CliffordElement::generator(field, rank, i0);
  const CliffordElement w = CliffordElement::generator(field, rank, rank + i0);
  return {cl_mul(w, f), cl_mul(f, w)};
}

CliffordElement cl_inverse(const CliffordElement& x) {
  const ExteriorOperator op = spinor_action(x);
  const auto inv = op.matrix().inverse();
  if (!inv) throw Error(ErrorCode::NotAUnit, "clifford element is not invertible");
  return spinor_preimage(ExteriorOperator(x.rank(), *inv));
}

}  // namespace spinlift
