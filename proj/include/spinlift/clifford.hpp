#pragma once
// Normal-form arithmetic in the Clifford algebra of the split hyperbolic
// form: generator monomials over bitmasks, multiplication by rewriting,
// Clifford conjugation, parity split, and the spin-group predicate.
//
// Generator indices run 1..2n: indices 1..n are the dual generators
// f_i = iota(e^i, 0), indices n+1..2n the primal generators w_i = iota(0, e_i).
// Monomial masks put generator i at bit i-1; monomials multiply their
// generators in increasing index order.  Relations: f_i^2 = w_i^2 = 0,
// f_i w_i + w_i f_i = 1, all other generator pairs anticommute.

#include <cstdint>
#include <map>
#include <utility>

#include "spinlift/ortho.hpp"

namespace spinlift {

class CliffordElement {
 public:
  CliffordElement(const Field& field, int rank);
  static CliffordElement scalar(const Field& field, int rank, const Scalar& c);
  static CliffordElement one(const Field& field, int rank);
  static CliffordElement monomial(const Field& field, int rank, std::uint64_t mask,
                                  const Scalar& c);
  // Single generator, 1-based index in 1..2n.
  static CliffordElement generator(const Field& field, int rank, int index);

  const Field& field() const { return field_; }
  int rank() const { return rank_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_even() const;
  const std::map<std::uint64_t, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::uint64_t mask) const;
  void set_coeff(std::uint64_t mask, const Scalar& c);

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement operator*(const Scalar& c) const;
  bool operator==(const CliffordElement& o) const;
  bool operator!=(const CliffordElement& o) const { return !(*this == o); }

 private:
  void check_compatible(const CliffordElement& o) const;

  Field field_;
  int rank_;
  std::map<std::uint64_t, Scalar> coeffs_;
};

// Degree-1 embedding of (d, u): sum of d_i f_i and u_i w_i.
CliffordElement embed_vector(const HyperbolicVector& z);

CliffordElement cl_mul(const CliffordElement& x, const CliffordElement& y);

// Clifford conjugation: the anti-automorphism with v~ = -v on vectors.
CliffordElement cl_conj(const CliffordElement& x);

// (even part, odd part) by generator count of each monomial.
std::pair<CliffordElement, CliffordElement> parity_split(const CliffordElement& x);

// Generic inverse through the faithful exterior representation; throws
// NotAUnit when the representing matrix is singular.  Defined in spin_rep.
CliffordElement cl_inverse(const CliffordElement& x);

// Some(M) iff x is even, x x~ = x~ x = 1, and conjugation by x carries
// every basis generator to a degree-1 element; M is the induced map on
// W* + W.  None on any failed condition.
std::optional<OrthoMap> spin_check(const CliffordElement& x);

}  // namespace spinlift
