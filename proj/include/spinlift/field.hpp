#pragma once
// Exact field arithmetic over Q and over GF(p) for odd primes p,
// with square-root search and square-class comparison.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "spinlift/errors.hpp"

namespace spinlift {

class Scalar;

class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals();
  // Rejects p = 2 and composite p.
  static Field prime(const mpz_class& p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  const mpz_class& modulus() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  // Field tag strings: "Q" and "GF(p)".
  std::string tag() const;
  static Field parse_tag(const std::string& tag);

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  // Scalar text: rationals as "a/b" or "a"; GF(p) residues as decimal
  // integers (optional sign accepted, reduced into [0, p)).
  Scalar parse(const std::string& text) const;

 private:
  Field(Kind kind, mpz_class p) : kind_(kind), p_(std::move(p)) {}

  Kind kind_;
  mpz_class p_;  // meaningful only for Kind::Prime
};

class Scalar {
 public:
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  const Field& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Multiplicative inverse; throws ZeroInverse on 0.
  Scalar inverse() const;
  Scalar square() const { return *this * *this; }

  std::string str() const;

  // Canonical representation: reduced fraction with positive denominator
  // for Q, integer residue in [0, p) for GF(p).
  const mpq_class& raw() const { return value_; }

 private:
  friend class Field;
  Scalar(const Field& field, mpq_class value, bool already_reduced);
  void reduce();
  void check_same_field(const Scalar& other) const;

  Field field_;
  mpq_class value_;
};

Scalar invert_scalar(const Scalar& a);

// Some(r) with r*r == a when a is a square, None otherwise.  Deterministic:
// positive root over Q, smaller nonnegative representative over GF(p).
// Throws ZeroInput on a = 0.
std::optional<Scalar> sqrt_in_field(const Scalar& a);

// True iff a/b is a square in the field.  Throws ZeroInput if either is 0.
bool same_square_class(const Scalar& a, const Scalar& b);

}  // namespace spinlift
