#include "spinlift/field.hpp"

#include <utility>

namespace spinlift {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::IsotropicVector: return "IsotropicVector";
    case ErrorCode::NotIsotropicPair: return "NotIsotropicPair";
    case ErrorCode::BadPairing: return "BadPairing";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::IndicesNotDistinct: return "IndicesNotDistinct";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NeedRankAtLeast2: return "NeedRankAtLeast2";
    case ErrorCode::NeedRankAtLeast3: return "NeedRankAtLeast3";
    case ErrorCode::NonSquareDeterminant: return "NonSquareDeterminant";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::NotALeviLift: return "NotALeviLift";
    case ErrorCode::DecompositionFails: return "DecompositionFails";
    case ErrorCode::NormIdentityFails: return "NormIdentityFails";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::RankBoundExceeded: return "RankBoundExceeded";
  }
  return "UnknownError";
}

Field Field::rationals() { return Field(Kind::Rationals, mpz_class(0)); }

Field Field::prime(const mpz_class& p) {
  if (p == 2) {
    throw Error(ErrorCode::UnsupportedField, "characteristic 2 is excluded (2 must be a unit)");
  }
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::UnsupportedField, "modulus " + p.get_str() + " is not prime");
  }
  return Field(Kind::Prime, p);
}

const mpz_class& Field::modulus() const {
  if (kind_ != Kind::Prime) {
    throw Error(ErrorCode::UnsupportedField, "modulus() on the rational field");
  }
  return p_;
}

bool Field::operator==(const Field& other) const {
  if (kind_ != other.kind_) return false;
  return kind_ == Kind::Rationals || p_ == other.p_;
}

std::string Field::tag() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "GF(" + p_.get_str() + ")";
}

Field Field::parse_tag(const std::string& tag) {
  if (tag == "Q") return rationals();
  if (tag.size() > 4 && tag.substr(0, 3) == "GF(" && tag.back() == ')') {
    const std::string digits = tag.substr(3, tag.size() - 4);
    mpz_class p;
    if (mpz_set_str(p.get_mpz_t(), digits.c_str(), 10) != 0) {
      throw Error(ErrorCode::ParseError, "bad field tag '" + tag + "'");
    }
    return prime(p);
  }
  throw Error(ErrorCode::ParseError, "bad field tag '" + tag + "' (expected \"Q\" or \"GF(p)\")");
}

Scalar Field::zero() const { return Scalar(*this, 0); }
Scalar Field::one() const { return Scalar(*this, 1); }
Scalar Field::from_int(long v) const { return Scalar(*this, v); }

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw Error(ErrorCode::ParseError, "bad scalar literal '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  }
  q.canonicalize();
  if (kind_ == Kind::Prime && q.get_den() != 1) {
    throw Error(ErrorCode::ParseError, "prime-field scalar '" + text + "' must be an integer residue");
  }
  return Scalar(*this, q);
}

Scalar::Scalar(const Field& field, long value) : field_(field), value_(value) { reduce(); }

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field), value_(value) {
  value_.canonicalize();
  reduce();
}

Scalar::Scalar(const Field& field, mpq_class value, bool) : field_(field), value_(std::move(value)) {}

void Scalar::reduce() {
  if (field_.is_prime_field()) {
    // Residues live in [0, p) with denominator 1.
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();
    const mpz_class& p = field_.modulus();
    if (den != 1) {
      mpz_class den_inv;
      if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
        throw Error(ErrorCode::ZeroInverse, "denominator divisible by the characteristic");
      }
      num *= den_inv;
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    value_ = mpq_class(r);
  }
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::FieldMismatch, field_.tag() + " vs " + other.field_.tag());
  }
}

Scalar Scalar::operator+(const Scalar& other) const {
  check_same_field(other);
  Scalar r(field_, value_ + other.value_);
  return r;
}

Scalar Scalar::operator-(const Scalar& other) const {
  check_same_field(other);
  return Scalar(field_, value_ - other.value_);
}

Scalar Scalar::operator*(const Scalar& other) const {
  check_same_field(other);
  return Scalar(field_, value_ * other.value_);
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inverse(); }

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-value_)); }

bool Scalar::operator==(const Scalar& other) const {
  return field_ == other.field_ && value_ == other.value_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of 0");
  if (field_.is_rationals()) {
    return Scalar(field_, mpq_class(1) / value_);
  }
  mpz_class num = value_.get_num();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), field_.modulus().get_mpz_t());
  return Scalar(field_, mpq_class(inv));
}

std::string Scalar::str() const { return value_.get_str(); }

Scalar invert_scalar(const Scalar& a) { return a.inverse(); }

namespace {

// Deterministic Tonelli-Shanks; requires a to be a nonzero QR mod odd prime p.
mpz_class tonelli_shanks(const mpz_class& a, const mpz_class& p) {
  // p = q * 2^s + 1 with q odd
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  auto pow_mod = [&p](const mpz_class& base, const mpz_class& exp) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  if (s == 1) {
    return pow_mod(a, (p + 1) / 4);
  }
  // smallest quadratic nonresidue, found by Euler's criterion
  mpz_class z = 2;
  const mpz_class half = (p - 1) / 2;
  while (pow_mod(z, half) == 1) ++z;

  mpz_class m(static_cast<long>(s));
  mpz_class c = pow_mod(z, q);
  mpz_class t = pow_mod(a, q);
  mpz_class r = pow_mod(a, (q + 1) / 2);
  while (t != 1) {
    mpz_class tt = t;
    long i = 0;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    mpz_class b = c;
    for (mpz_class e = m - i - 1; e > 0; --e) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "sqrt of 0");
  const Field& field = a.field();
  if (field.is_rationals()) {
    const mpq_class& v = a.raw();
    if (v < 0) return std::nullopt;
    mpz_class num = v.get_num();
    mpz_class den = v.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Scalar(field, mpq_class(rn) / mpq_class(rd));
  }

  const mpz_class& p = field.modulus();
  const mpz_class v = a.raw().get_num();
  mpz_class root(-1);
  if (p < 10000) {
    for (mpz_class r = 1; r < p; ++r) {
      if (r * r % p == v) {
        root = r;
        break;
      }
    }
    if (root < 0) return std::nullopt;
  } else {
    mpz_class half = (p - 1) / 2;
    mpz_class euler;
    mpz_powm(euler.get_mpz_t(), v.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    if (euler != 1) return std::nullopt;
    root = tonelli_shanks(v, p);
  }
  mpz_class other = p - root;
  if (other < root) root = other;
  return Scalar(field, mpq_class(root));
}

bool same_square_class(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "square class of 0");
  return sqrt_in_field(a / b).has_value();
}

}  // namespace spinlift
