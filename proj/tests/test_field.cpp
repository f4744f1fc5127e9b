#include "doctest.h"
#include "spinlift/field.hpp"
#include "spinlift/random.hpp"

using namespace spinlift;

namespace {

// Independent oracle: inverse mod p by exhaustive search.
long brute_force_inverse_mod(long a, long p) {
  for (long x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  return -1;
}

// Independent oracle: the set of nonzero squares mod p by enumeration.
std::vector<long> squares_mod(long p) {
  std::vector<bool> seen(p, false);
  for (long r = 1; r < p; ++r) seen[(r * r) % p] = true;
  std::vector<long> out;
  for (long a = 1; a < p; ++a) {
    if (seen[a]) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("field construction rejects bad moduli") {
  CHECK_THROWS_AS(Field::prime(2), Error);
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK(Field::prime(3).tag() == "GF(3)");
  CHECK(Field::rationals().tag() == "Q");
  CHECK(Field::parse_tag("GF(11)") == Field::prime(11));
}

TEST_CASE("scalar inversion") {
  const Field q = Field::rationals();
  CHECK(q.from_int(2).inverse() == q.parse("1/2"));
  CHECK_THROWS_AS(q.zero().inverse(), Error);

  const Field gf7 = Field::prime(7);
  // Oracle: 3 x = 1 mod 7 has x = 5.
  CHECK(brute_force_inverse_mod(3, 7) == 5);
  CHECK(invert_scalar(gf7.from_int(3)) == gf7.from_int(5));
}

TEST_CASE("square roots") {
  const Field q = Field::rationals();
  CHECK(sqrt_in_field(q.from_int(4)) == std::optional<Scalar>(q.from_int(2)));
  // 2 is not a rational square.
  CHECK(!sqrt_in_field(q.from_int(2)).has_value());
  CHECK(sqrt_in_field(q.parse("4/9")) == std::optional<Scalar>(q.parse("2/3")));
  CHECK(!sqrt_in_field(q.from_int(-4)).has_value());
  CHECK_THROWS_AS(sqrt_in_field(q.zero()), Error);

  const Field gf7 = Field::prime(7);
  // Oracle: squares mod 7 are {1, 2, 4}.
  CHECK(squares_mod(7) == std::vector<long>{1, 2, 4});
  CHECK(sqrt_in_field(gf7.from_int(2)) == std::optional<Scalar>(gf7.from_int(3)));
  CHECK(!sqrt_in_field(gf7.from_int(3)).has_value());
  // Smaller nonnegative representative: 4 has roots {2, 5}.
  CHECK(sqrt_in_field(gf7.from_int(4)) == std::optional<Scalar>(gf7.from_int(2)));
}

TEST_CASE("tonelli-shanks branch agrees with squaring") {
  const Field big = Field::prime(10007);  // above the exhaustive-search bound
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    const Scalar a = random_scalar(big, rng, /*nonzero=*/true);
    const auto root = sqrt_in_field(a.square());
    REQUIRE(root.has_value());
    CHECK(root->square() == a.square());
  }
  // Residues and nonresidues are split evenly; spot-check a nonresidue.
  long nonresidues = 0;
  for (long a = 1; a <= 100; ++a) {
    if (!sqrt_in_field(big.from_int(a)).has_value()) ++nonresidues;
  }
  CHECK(nonresidues > 0);
}

TEST_CASE("square classes") {
  const Field q = Field::rationals();
  CHECK(same_square_class(q.from_int(8), q.from_int(2)));  // 8/2 = 4
  CHECK(!same_square_class(q.from_int(2), q.from_int(1)));
  CHECK(same_square_class(q.parse("-3"), q.parse("-3")));
  CHECK_THROWS_AS(same_square_class(q.zero(), q.one()), Error);

  const Field gf11 = Field::prime(11);
  for (long a = 1; a < 11; ++a) {
    CHECK(same_square_class(gf11.from_int(a), gf11.from_int(a)));
  }
}

TEST_CASE("scalar text round trip") {
  const Field q = Field::rationals();
  CHECK(q.parse("-6/4").str() == "-3/2");
  CHECK(q.parse("3").str() == "3");
  CHECK_THROWS_AS(q.parse("x"), Error);
  CHECK_THROWS_AS(q.parse("1/0"), Error);

  const Field gf7 = Field::prime(7);
  CHECK(gf7.parse("-1").str() == "6");
  CHECK(gf7.parse("9").str() == "2");
  CHECK_THROWS_AS(gf7.parse("1/2"), Error);
}

TEST_CASE("prime fields have (p-1)/2 nonzero squares") {
  for (long p : {3L, 7L, 11L, 13L}) {
    const Field field = Field::prime(p);
    long count = 0;
    for (long a = 1; a < p; ++a) {
      if (sqrt_in_field(field.from_int(a)).has_value()) ++count;
    }
    CHECK(count == (p - 1) / 2);
    CHECK(static_cast<long>(squares_mod(p).size()) == (p - 1) / 2);
  }
}
