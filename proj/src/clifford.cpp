#include "spinlift/clifford.hpp"

#include <bit>
#include <vector>

namespace spinlift {

namespace {

int popcount_above(std::uint64_t mask, int bit) {
  return std::popcount(mask >> (bit + 1));
}

}  // namespace

CliffordElement::CliffordElement(const Field& field, int rank) : field_(field), rank_(rank) {
  if (rank < 0 || rank > 31) throw Error(ErrorCode::RankBoundExceeded, "clifford rank");
}

CliffordElement CliffordElement::scalar(const Field& field, int rank, const Scalar& c) {
  CliffordElement x(field, rank);
  x.set_coeff(0, c);
  return x;
}

CliffordElement CliffordElement::one(const Field& field, int rank) {
  return scalar(field, rank, field.one());
}

CliffordElement CliffordElement::monomial(const Field& field, int rank, std::uint64_t mask,
                                          const Scalar& c) {
  CliffordElement x(field, rank);
  x.set_coeff(mask, c);
  return x;
}

CliffordElement CliffordElement::generator(const Field& field, int rank, int index) {
  if (index < 1 || index > 2 * rank) {
    throw Error(ErrorCode::IndexOutOfRange, "generator index");
  }
  return monomial(field, rank, std::uint64_t{1} << (index - 1), field.one());
}

bool CliffordElement::is_even() const {
  for (const auto& [mask, c] : coeffs_) {
    if (std::popcount(mask) % 2 != 0) return false;
  }
  return true;
}

Scalar CliffordElement::coeff(std::uint64_t mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? field_.zero() : it->second;
}

void CliffordElement::set_coeff(std::uint64_t mask, const Scalar& c) {
  if (rank_ < 32 && (mask >> (2 * rank_)) != 0) {
    throw Error(ErrorCode::IndexOutOfRange, "generator mask beyond rank");
  }
  if (c.is_zero()) {
    coeffs_.erase(mask);
  } else {
    coeffs_.insert_or_assign(mask, c);
  }
}

void CliffordElement::check_compatible(const CliffordElement& o) const {
  if (rank_ != o.rank_) throw Error(ErrorCode::RankMismatch, "clifford element rank");
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "clifford element field");
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  check_compatible(o);
  CliffordElement r = *this;
  for (const auto& [mask, c] : o.coeffs_) r.set_coeff(mask, r.coeff(mask) + c);
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  check_compatible(o);
  CliffordElement r = *this;
  for (const auto& [mask, c] : o.coeffs_) r.set_coeff(mask, r.coeff(mask) - c);
  return r;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r(field_, rank_);
  for (const auto& [mask, c] : coeffs_) r.coeffs_.insert_or_assign(mask, -c);
  return r;
}

CliffordElement CliffordElement::operator*(const Scalar& c) const {
  CliffordElement r(field_, rank_);
  if (c.is_zero()) return r;
  for (const auto& [mask, v] : coeffs_) r.coeffs_.insert_or_assign(mask, v * c);
  return r;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
  return field_ == o.field_ && rank_ == o.rank_ && coeffs_ == o.coeffs_;
}

CliffordElement embed_vector(const HyperbolicVector& z) {
  const Field& field = z.field();
  const int n = z.rank();
  CliffordElement x(field, n);
  for (int i = 0; i < n; ++i) {
    x.set_coeff(std::uint64_t{1} << i, z.dual.coords[i]);
    x.set_coeff(std::uint64_t{1} << (n + i), z.primal.coords[i]);
  }
  return x;
}

namespace {

// Right-multiplies a normal monomial by one generator (0-based bit).
// Bubbling the generator into sorted position yields at most two normal
// terms: a pairing contraction when the hyperbolic partner sits above the
// insertion point, and the plain signed insertion when the generator is
// not already present.
void mul_monomial_generator(std::uint64_t mask, const Scalar& c, int bit, int rank,
                            CliffordElement& acc) {
  const int partner = bit < rank ? bit + rank : bit - rank;
  const std::uint64_t partner_bit = std::uint64_t{1} << partner;
  if ((mask & partner_bit) != 0 && partner > bit) {
    const std::uint64_t without = mask & ~partner_bit;
    Scalar term = c;
    if (popcount_above(mask, partner) % 2 != 0) term = -term;
    acc.set_coeff(without, acc.coeff(without) + term);
  }
  const std::uint64_t gen_bit = std::uint64_t{1} << bit;
  if ((mask & gen_bit) == 0) {
    const std::uint64_t with = mask | gen_bit;
    Scalar term = c;
    if (popcount_above(mask, bit) % 2 != 0) term = -term;
    acc.set_coeff(with, acc.coeff(with) + term);
  }
}

CliffordElement mul_by_generator(const CliffordElement& x, int bit) {
  CliffordElement r(x.field(), x.rank());
  for (const auto& [mask, c] : x.coeffs()) {
    mul_monomial_generator(mask, c, bit, x.rank(), r);
  }
  return r;
}

}  // namespace

CliffordElement cl_mul(const CliffordElement& x, const CliffordElement& y) {
  if (x.rank() != y.rank()) throw Error(ErrorCode::RankMismatch, "clifford product rank");
  if (x.field() != y.field()) throw Error(ErrorCode::FieldMismatch, "clifford product field");
  CliffordElement result(x.field(), x.rank());
  for (const auto& [mask_y, c_y] : y.coeffs()) {
    CliffordElement partial = x * c_y;
    std::uint64_t rest = mask_y;
    while (rest) {
      const int bit = std::countr_zero(rest);
      rest &= rest - 1;
      partial = mul_by_generator(partial, bit);
    }
    result = result + partial;
  }
  return result;
}

CliffordElement cl_conj(const CliffordElement& x) {
  // Anti-automorphism with v~ = -v: a k-generator monomial maps to
  // (-1)^k times its generators multiplied in decreasing order, which is
  // then renormalized by the usual rewriting.
  CliffordElement result(x.field(), x.rank());
  for (const auto& [mask, c] : x.coeffs()) {
    const int k = std::popcount(mask);
    Scalar coeff = (k % 2 != 0) ? -c : c;
    CliffordElement term = CliffordElement::scalar(x.field(), x.rank(), coeff);
    for (int bit = 2 * x.rank() - 1; bit >= 0; --bit) {
      if ((mask >> bit) & 1) term = mul_by_generator(term, bit);
    }
    result = result + term;
  }
  return result;
}

std::pair<CliffordElement, CliffordElement> parity_split(const CliffordElement& x) {
  CliffordElement even(x.field(), x.rank());
  CliffordElement odd(x.field(), x.rank());
  for (const auto& [mask, c] : x.coeffs()) {
    (std::popcount(mask) % 2 == 0 ? even : odd).set_coeff(mask, c);
  }
  return {even, odd};
}

std::optional<OrthoMap> spin_check(const CliffordElement& x) {
  const Field& field = x.field();
  const int n = x.rank();
  if (!x.is_even()) return std::nullopt;

  const CliffordElement conj = cl_conj(x);
  const CliffordElement unit = CliffordElement::one(field, n);
  // Both one-sided norms, as stated.
  if (cl_mul(x, conj) != unit || cl_mul(conj, x) != unit) return std::nullopt;

  // Norm one makes conj the inverse, so conjugation is x . iota(z) . conj.
  Matrix m(field, 2 * n, 2 * n);
  for (int col = 0; col < 2 * n; ++col) {
    const CliffordElement gen = CliffordElement::generator(field, n, col + 1);
    const CliffordElement image = cl_mul(cl_mul(x, gen), conj);
    for (const auto& [mask, c] : image.coeffs()) {
      if (std::popcount(mask) != 1) return std::nullopt;
      m.at(std::countr_zero(mask), col) = c;
    }
  }
  return OrthoMap(n, std::move(m));
}

}  // namespace spinlift
