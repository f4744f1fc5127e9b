#include "doctest.h"
#include "spinlift/levi_lifts.hpp"
#include "spinlift/random.hpp"
#include "spinlift/serialize.hpp"
#include "spinlift/spin_rep.hpp"

using namespace spinlift;

namespace {

const Field Q = Field::rationals();

// Independent transcription of the two-reflection generator's coordinate
// rule (1-based indices p, q into the x/y coordinate lists).
void apply_pair_rule(std::vector<Scalar>& x, std::vector<Scalar>& y, int p, int q,
                     const Scalar& a) {
  const Scalar xp = x[p - 1], xq = x[q - 1], yp = y[p - 1], yq = y[q - 1];
  x[p - 1] = xp + a * yq;
  x[q - 1] = xq + a * (xp - yp) + a.square() * yq;
  y[p - 1] = yp - a * yq;
}

HyperbolicVector pack(const Field& f, const std::vector<Scalar>& x,
                      const std::vector<Scalar>& y) {
  HyperbolicVector z = HyperbolicVector::zero(f, static_cast<int>(x.size()));
  z.dual.coords = x;
  z.primal.coords = y;
  return z;
}

}  // namespace

TEST_CASE("transvection lifts") {
  SUBCASE("zero direction is the unit") {
    const LiftFactor lift =
        transvection_lift(DualVector::zero(Q, 2), PrimalVector::basis(Q, 2, 1));
    CHECK(lift.element == CliffordElement::one(Q, 2));
    CHECK(lift.ortho.matrix().is_identity());
  }
  SUBCASE("the rank-2 shear") {
    const LiftFactor lift =
        transvection_lift(DualVector::basis(Q, 2, 2), PrimalVector::basis(Q, 2, 1));
    CHECK(spin_check(lift.element) == std::optional<OrthoMap>(lift.ortho));
    CHECK(lift.ortho ==
          transvection_map(DualVector::basis(Q, 2, 2), PrimalVector::basis(Q, 2, 1)));
    // Exterior action is the functor of the primal block: fixes 1, e1, e12
    // and shears e2.
    const ExteriorOperator action = spinor_action(lift.element);
    CHECK(action.apply(ExteriorElement::basis(Q, 2, 0b00)) ==
          ExteriorElement::basis(Q, 2, 0b00));
    CHECK(action.apply(ExteriorElement::basis(Q, 2, 0b01)) ==
          ExteriorElement::basis(Q, 2, 0b01));
    CHECK(action.apply(ExteriorElement::basis(Q, 2, 0b10)) ==
          ExteriorElement::basis(Q, 2, 0b10) - ExteriorElement::basis(Q, 2, 0b01));
    CHECK(action.apply(ExteriorElement::basis(Q, 2, 0b11)) ==
          ExteriorElement::basis(Q, 2, 0b11));
    // Scalar-1 normalization against the primal block of the orthogonal map.
    Matrix w_block(Q, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) w_block.at(i, j) = lift.ortho.matrix().at(2 + i, 2 + j);
    CHECK(action == exterior_functor(w_block));
  }
  SUBCASE("additivity of the units") {
    Rng rng(83);
    for (int n = 2; n <= 4; ++n) {
      for (int it = 0; it < 15; ++it) {
        const TransvectionData data = random_transvection_data(Q, n, rng);
        DualVector eta = random_dual(Q, n, rng);
        const Scalar overlap = eval_dual(eta, data.w);
        for (int i = 0; i < n; ++i) eta.coords[i] -= overlap * data.f.coords[i];
        DualVector sum = data.delta;
        for (int i = 0; i < n; ++i) sum.coords[i] += eta.coords[i];
        CHECK(cl_mul(transvection_lift(data.delta, data.w).element,
                     transvection_lift(eta, data.w).element) ==
              transvection_lift(sum, data.w).element);
      }
    }
  }
}

TEST_CASE("chosen-line scaling lifts") {
  const PrimalVector w = PrimalVector::basis(Q, 1, 1);
  const DualVector f = DualVector::basis(Q, 1, 1);
  SUBCASE("t = 1 contributes the kernel element") {
    const LiftFactor lift = line_scaling_lift(w, f, Q.one());
    CHECK(lift.element == CliffordElement::scalar(Q, 1, -Q.one()));
    CHECK(lift.ortho.matrix().is_identity());
    CHECK(spinor_action(lift.element) == ExteriorOperator::identity(Q, 1) * (-Q.one()));
  }
  SUBCASE("t = 2 matches the normalized action") {
    const LiftFactor lift = line_scaling_lift(w, f, Q.from_int(2));
    CHECK(spin_check(lift.element) == std::optional<OrthoMap>(lift.ortho));
    const ExteriorOperator action = spinor_action(lift.element);
    CHECK(action.apply(ExteriorElement::basis(Q, 1, 0)) ==
          ExteriorElement::scalar(Q, 1, Q.parse("-1/2")));
    CHECK(action.apply(ExteriorElement::basis(Q, 1, 1)) ==
          ExteriorElement::basis(Q, 1, 1) * Q.from_int(-2));
  }
  SUBCASE("internal weight-2 conjugation") {
    Rng rng(89);
    for (int n = 2; n <= 4; ++n) {
      for (int it = 0; it < 15; ++it) {
        const TransvectionData data = random_transvection_data(Q, n, rng);
        const Scalar t = random_scalar(Q, rng, /*nonzero=*/true);
        const LiftFactor s_t = line_scaling_lift(data.w, data.f, t);
        DualVector scaled = data.delta;
        for (int i = 0; i < n; ++i) scaled.coords[i] = t.square() * data.delta.coords[i];
        const CliffordElement lhs =
            cl_mul(cl_mul(s_t.element, transvection_lift(data.delta, data.w).element),
                   cl_conj(s_t.element));
        CHECK(lhs == transvection_lift(scaled, data.w).element);
      }
    }
  }
}

TEST_CASE("pair generators") {
  SUBCASE("a = 0 degenerates to -1") {
    const LiftFactor lift = pair_generator(Q, 3, 1, 2, Q.zero());
    CHECK(lift.element == CliffordElement::scalar(Q, 3, -Q.one()));
    CHECK(lift.ortho.matrix().is_identity());
  }
  SUBCASE("the displayed coordinate rule at (1,2), a = 1") {
    const LiftFactor lift = pair_generator(Q, 3, 1, 2, Q.one());
    // Input (e^1, e_2): x updates to (2, 2, 0), y to (-1, 1, 0).
    HyperbolicVector z = HyperbolicVector::zero(Q, 3);
    z.dual.coords[0] = Q.one();
    z.primal.coords[1] = Q.one();
    const HyperbolicVector image = lift.ortho.apply(z);
    CHECK(image.dual.coords == std::vector<Scalar>{Q.from_int(2), Q.from_int(2), Q.zero()});
    CHECK(image.primal.coords == std::vector<Scalar>{Q.from_int(-1), Q.one(), Q.zero()});
  }
  SUBCASE("matches the coordinate rule on random vectors") {
    Rng rng(97);
    for (int it = 0; it < 40; ++it) {
      const int n = 3;
      const int p = static_cast<int>(rng.below(3)) + 1;
      int q = static_cast<int>(rng.below(3)) + 1;
      if (p == q) q = (q % n) + 1;
      const Scalar a = random_scalar(Q, rng);
      const LiftFactor lift = pair_generator(Q, n, p, q, a);
      const HyperbolicVector z = random_hyperbolic(Q, n, rng);
      std::vector<Scalar> x = z.dual.coords;
      std::vector<Scalar> y = z.primal.coords;
      apply_pair_rule(x, y, p, q, a);
      CHECK(lift.ortho.apply(z) == pack(Q, x, y));
    }
  }
  SUBCASE("always lands in spin") {
    Rng rng(101);
    for (int it = 0; it < 20; ++it) {
      const LiftFactor lift = pair_generator(Q, 3, 2, 3, random_scalar(Q, rng));
      CHECK(spin_check(lift.element) == std::optional<OrthoMap>(lift.ortho));
    }
  }
  SUBCASE("equal indices are rejected") {
    CHECK_THROWS_AS(pair_generator(Q, 3, 2, 2, Q.one()), Error);
  }
}

TEST_CASE("five-factor elementary Levi lift") {
  SUBCASE("c = 0 acts trivially") {
    const LiftFactor lift = elementary_levi_lift(Q, 3, 1, 2, Q.zero(), 3);
    CHECK(lift.ortho.matrix().is_identity());
    CHECK(spin_check(lift.element) == std::optional<OrthoMap>(lift.ortho));
  }
  SUBCASE("realizes the transported elementary transvection") {
    Rng rng(103);
    for (int it = 0; it < 20; ++it) {
      const Scalar c = random_scalar(Q, rng);
      const LiftFactor lift = elementary_levi_lift(Q, 3, 1, 2, c, 3);
      // Lambda of e_2 -> e_2 + c e_1.
      const Matrix expected = transvection_matrix(Q, 3, {1, 2, c});
      CHECK(lift.ortho == levi_embed({expected}));
      CHECK(spin_check(lift.element) == std::optional<OrthoMap>(lift.ortho));
      // Same orthogonal action as the direct transvection unit.
      DualVector delta = DualVector::zero(Q, 3);
      delta.coords[1] = -c;
      const LiftFactor direct = transvection_lift(delta, PrimalVector::basis(Q, 3, 1));
      CHECK(lift.ortho == direct.ortho);
    }
  }
  SUBCASE("needs rank at least 3 and distinct indices") {
    CHECK_THROWS_AS(elementary_levi_lift(Q, 2, 1, 2, Q.one(), 2), Error);
    CHECK_THROWS_AS(elementary_levi_lift(Q, 3, 1, 2, Q.one(), 2), Error);
  }
}

TEST_CASE("block scaling factorization") {
  SUBCASE("a = 1 multiplies to the identity") {
    Matrix m = Matrix::identity(Q, 2);
    for (const auto& t : block_scaling_factorization(Q, 1, 2, Q.one())) {
      m = m * transvection_matrix(Q, 2, t);
    }
    CHECK(m.is_identity());
  }
  SUBCASE("a = 4 on a rank-2 space") {
    Matrix m = Matrix::identity(Q, 2);
    for (const auto& t : block_scaling_factorization(Q, 1, 2, Q.from_int(4))) {
      m = m * transvection_matrix(Q, 2, t);
    }
    CHECK(m == block_scaling_matrix(Q, 2, {1, 2, Q.from_int(4)}));
  }
  SUBCASE("a = 3 over GF(7) uses the exact inverse 5") {
    const Field gf7 = Field::prime(7);
    Matrix m = Matrix::identity(gf7, 3);
    for (const auto& t : block_scaling_factorization(gf7, 1, 2, gf7.from_int(3))) {
      m = m * transvection_matrix(gf7, 3, t);
    }
    Matrix expected = Matrix::identity(gf7, 3);
    expected.at(0, 0) = gf7.from_int(3);
    expected.at(1, 1) = gf7.from_int(5);
    CHECK(m == expected);
  }
  SUBCASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(block_scaling_factorization(Q, 2, 2, Q.from_int(3)), Error);
    CHECK_THROWS_AS(block_scaling_factorization(Q, 1, 2, Q.zero()), Error);
  }
}

TEST_CASE("rank preconditions") {
  Matrix tiny(Q, 1, 1);
  tiny.at(0, 0) = Q.one();
  CHECK_THROWS_AS(transvection_reduce({tiny}), Error);
  CHECK_THROWS_AS(square_det_factor({tiny}), Error);
}

TEST_CASE("transvection reduction") {
  SUBCASE("diagonal input needs no factors") {
    Matrix d = Matrix::identity(Q, 3);
    d.at(0, 0) = Q.from_int(4);
    const TransvectionReduction red = transvection_reduce({d});
    CHECK(red.prefix.empty());
    CHECK(red.suffix.empty());
    CHECK(red.diagonal == std::vector<Scalar>{Q.from_int(4), Q.one(), Q.one()});
  }
  SUBCASE("a single transvection leaves the identity diagonal") {
    const Matrix g = transvection_matrix(Q, 3, {1, 3, Q.from_int(5)});
    const TransvectionReduction red = transvection_reduce({g});
    for (const Scalar& t : red.diagonal) CHECK(t == Q.one());
  }
  SUBCASE("random matrices recompose exactly") {
    Rng rng(107);
    for (const Field& field : {Field::rationals(), Field::prime(7)}) {
      for (int n = 2; n <= 4; ++n) {
        for (int it = 0; it < 15; ++it) {
          const Matrix g = random_invertible(field, n, rng);
          for (PivotOrder order : {PivotOrder::FirstNonzero, PivotOrder::LastNonzero}) {
            const TransvectionReduction red = transvection_reduce({g}, order);
            Matrix m = Matrix::identity(field, n);
            for (const auto& t : red.prefix) m = m * transvection_matrix(field, n, t);
            Matrix d(field, n, n);
            for (int i = 0; i < n; ++i) d.at(i, i) = red.diagonal[i];
            m = m * d;
            for (const auto& t : red.suffix) m = m * transvection_matrix(field, n, t);
            CHECK(m == g);
          }
        }
      }
    }
  }
  SUBCASE("singular matrices are rejected") {
    CHECK_THROWS_AS(transvection_reduce({Matrix(Q, 2, 2)}), Error);
  }
}

TEST_CASE("square-determinant factorization") {
  SUBCASE("identity") {
    const SquareDetFactorization f = square_det_factor(LeviElement::identity(Q, 3));
    CHECK(f.u == Q.one());
    CHECK(f.prefix.empty());
    CHECK(f.suffix.empty());
    CHECK(f.blocks.empty());
    CHECK(f.line_scale == Q.one());
    CHECK(recompose(f).is_identity());
  }
  SUBCASE("diag(4,1,1)") {
    Matrix g = Matrix::identity(Q, 3);
    g.at(0, 0) = Q.from_int(4);
    const SquareDetFactorization f = square_det_factor({g});
    CHECK(f.u == Q.from_int(2));
    CHECK(f.line_scale == Q.from_int(4));
    CHECK(f.blocks.empty());
    CHECK(recompose(f) == g);
  }
  SUBCASE("diag(2,2,1) redistributes through the first index") {
    Matrix g = Matrix::identity(Q, 3);
    g.at(0, 0) = Q.from_int(2);
    g.at(1, 1) = Q.from_int(2);
    const SquareDetFactorization f = square_det_factor({g});
    CHECK(f.u == Q.from_int(2));
    CHECK(f.line_scale == Q.from_int(4));
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].i == 2);
    CHECK(f.blocks[0].j == 1);
    CHECK(f.blocks[0].a == Q.from_int(2));
    CHECK(recompose(f) == g);
  }
  SUBCASE("nonsquare determinants are refused") {
    Matrix g = Matrix::identity(Q, 3);
    g.at(0, 0) = Q.from_int(2);
    CHECK_THROWS_AS(square_det_factor({g}), Error);
  }
  SUBCASE("random square-determinant inputs recompose") {
    Rng rng(109);
    for (const Field& field : {Field::rationals(), Field::prime(7)}) {
      for (int it = 0; it < 15; ++it) {
        Scalar u = field.one();
        const Matrix g = random_square_det(field, 3, rng, &u);
        const SquareDetFactorization f = square_det_factor({g});
        CHECK(f.u.square() == g.det());
        CHECK(recompose(f) == g);
      }
    }
  }
}

TEST_CASE("assembled lifts") {
  SUBCASE("identity input yields the kernel representative") {
    const SpinLiftCertificate cert = assemble_lift(LeviElement::identity(Q, 2));
    CHECK(cert.checks.all());
    CHECK(*cert.lift == CliffordElement::scalar(Q, 2, -Q.one()));
    CHECK(*cert.scalar_c == -Q.one());
  }
  SUBCASE("diag(4,1,1) pins the scalar -1/2") {
    Matrix g = Matrix::identity(Q, 3);
    g.at(0, 0) = Q.from_int(4);
    const SpinLiftCertificate cert = assemble_lift({g});
    CHECK(cert.checks.all());
    CHECK(*cert.scalar_c == Q.parse("-1/2"));
    const ExteriorOperator action = spinor_action(*cert.lift);
    CHECK(action.apply(ExteriorElement::basis(Q, 3, 0)) ==
          ExteriorElement::scalar(Q, 3, Q.parse("-1/2")));
    CHECK(action.apply(ExteriorElement::basis(Q, 3, 0b001)) ==
          ExteriorElement::basis(Q, 3, 0b001) * Q.from_int(-2));
    CHECK(action.apply(ExteriorElement::basis(Q, 3, 0b010)) ==
          ExteriorElement::basis(Q, 3, 0b010) * Q.parse("-1/2"));
  }
  SUBCASE("random inputs pass all four checks") {
    Rng rng(113);
    for (const Field& field : {Field::rationals(), Field::prime(7)}) {
      for (int it = 0; it < 10; ++it) {
        Scalar u = field.one();
        const Matrix g = random_square_det(field, 3, rng, &u);
        const SpinLiftCertificate cert = assemble_lift({g});
        CHECK(cert.checks.all());
        CHECK(cert.verdict == Verdict::InImage);
        CHECK(*cert.scalar_c == -cert.sqrt_det->inverse());
      }
    }
  }
  SUBCASE("pivot order changes the lift by at most a sign") {
    Rng rng(127);
    for (int it = 0; it < 8; ++it) {
      Scalar u = Q.one();
      const Matrix g = random_square_det(Q, 3, rng, &u);
      const SpinLiftCertificate a = assemble_lift({g}, PivotOrder::FirstNonzero);
      const SpinLiftCertificate b = assemble_lift({g}, PivotOrder::LastNonzero);
      CHECK((*a.lift == *b.lift || *a.lift == -*b.lift));
      CHECK(spin_check(*a.lift) == spin_check(*b.lift));
    }
  }
}

TEST_CASE("factorization serialization") {
  Rng rng(149);
  for (const Field& field : {Field::rationals(), Field::prime(7)}) {
    for (int it = 0; it < 5; ++it) {
      Scalar u = field.one();
      const Matrix g = random_square_det(field, 3, rng, &u);
      const SquareDetFactorization f = square_det_factor({g});
      const json j = factorization_to_json(f);
      // Tag shape: T entries, one L1, D entries, T entries.
      bool seen_line = false;
      for (const auto& entry : j) {
        const std::string kind = entry.at("kind").get<std::string>();
        if (kind == "L1") seen_line = true;
        CHECK((kind == "T" || kind == "L1" || kind == "D"));
      }
      CHECK(seen_line);
      const SquareDetFactorization parsed = factorization_from_json(field, 3, j);
      CHECK(recompose(parsed) == g);
      CHECK(parsed.u == f.u);
      CHECK(factorization_to_json(parsed) == j);
    }
  }
}
