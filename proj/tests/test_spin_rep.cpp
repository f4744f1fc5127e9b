#include <bit>

#include "doctest.h"
#include "spinlift/random.hpp"
#include "spinlift/spin_rep.hpp"

using namespace spinlift;

namespace {

const Field Q = Field::rationals();

CliffordElement gen(int rank, int index) { return CliffordElement::generator(Q, rank, index); }

ExteriorOperator matrix_unit_operator(int rank, std::uint32_t row, std::uint32_t col) {
  Matrix m(Q, 1 << rank, 1 << rank);
  m.at(static_cast<int>(row), static_cast<int>(col)) = Q.one();
  return ExteriorOperator(rank, m);
}

}  // namespace

TEST_CASE("generator actions at rank 1") {
  // w_1 wedges: 1 -> e1, e1 -> 0.
  const ExteriorOperator w1 = spinor_action(gen(1, 2));
  CHECK(w1.apply(ExteriorElement::basis(Q, 1, 0)) == ExteriorElement::basis(Q, 1, 1));
  CHECK(w1.apply(ExteriorElement::basis(Q, 1, 1)).is_zero());
  // f_1 contracts: e1 -> 1, 1 -> 0.
  const ExteriorOperator f1 = spinor_action(gen(1, 1));
  CHECK(f1.apply(ExteriorElement::basis(Q, 1, 1)) == ExteriorElement::basis(Q, 1, 0));
  CHECK(f1.apply(ExteriorElement::basis(Q, 1, 0)).is_zero());
}

TEST_CASE("minus one acts as minus identity") {
  for (int n = 1; n <= 3; ++n) {
    const CliffordElement minus_one = CliffordElement::scalar(Q, n, -Q.one());
    CHECK(spinor_action(minus_one) == ExteriorOperator::identity(Q, n) * (-Q.one()));
  }
}

TEST_CASE("the chosen-line lift has the pinned normalized action") {
  // s_2 at n = 1: vacuum scales by -1/2, the line by -2.
  const CliffordElement u_t =
      embed_vector({DualVector{Q, {Q.parse("-1/2")}}, PrimalVector{Q, {Q.from_int(2)}}});
  const CliffordElement v =
      embed_vector({DualVector{Q, {Q.parse("-1")}}, PrimalVector{Q, {Q.one()}}});
  const CliffordElement s2 = cl_mul(u_t, v);
  const ExteriorOperator action = spinor_action(s2);
  CHECK(action.apply(ExteriorElement::basis(Q, 1, 0)) ==
        ExteriorElement::scalar(Q, 1, Q.parse("-1/2")));
  CHECK(action.apply(ExteriorElement::basis(Q, 1, 1)) ==
        ExteriorElement::basis(Q, 1, 1) * Q.from_int(-2));
  // Equals -t^-1 times the functor of the line scaling on W.
  Matrix ell(Q, 1, 1);
  ell.at(0, 0) = Q.from_int(4);
  CHECK(action == exterior_functor(ell) * Q.parse("-1/2"));
}

TEST_CASE("spinor action is an algebra homomorphism") {
  Rng rng(47);
  for (const Field& field : {Field::rationals(), Field::prime(7)}) {
    for (int n = 1; n <= 4; ++n) {
      for (int it = 0; it < 20; ++it) {
        const CliffordElement x = random_clifford(field, n, rng);
        const CliffordElement y = random_clifford(field, n, rng);
        CHECK(spinor_action(cl_mul(x, y)) == spinor_action(x) * spinor_action(y));
      }
    }
  }
}

TEST_CASE("spinor_apply agrees with the dense action") {
  Rng rng(53);
  for (int n = 1; n <= 3; ++n) {
    for (int it = 0; it < 15; ++it) {
      const CliffordElement x = random_clifford(Q, n, rng);
      ExteriorElement s(Q, n);
      for (int t = 0; t < 3; ++t) {
        const auto mask = static_cast<std::uint32_t>(rng.below(1u << n));
        s.set_coeff(mask, s.coeff(mask) + random_scalar(Q, rng));
      }
      CHECK(spinor_apply(x, s) == spinor_action(x).apply(s));
    }
  }
}

TEST_CASE("projectors") {
  SUBCASE("rank-1 elements") {
    CHECK(projector(Q, 1, 0) == cl_mul(gen(1, 1), gen(1, 2)));  // f_1 w_1
    CHECK(projector(Q, 1, 1) == cl_mul(gen(1, 2), gen(1, 1)));  // w_1 f_1
  }
  SUBCASE("project onto basis lines") {
    for (int n = 1; n <= 3; ++n) {
      CliffordElement sum(Q, n);
      for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        const CliffordElement p = projector(Q, n, subset);
        const ExteriorOperator op = spinor_action(p);
        CHECK(op == matrix_unit_operator(n, subset, subset));
        sum = sum + p;
      }
      CHECK(sum == CliffordElement::one(Q, n));
    }
  }
}

TEST_CASE("matrix units") {
  SUBCASE("diagonal units are the projectors") {
    for (std::uint32_t subset = 0; subset < 4; ++subset) {
      const MatrixUnitElement unit = matrix_unit(Q, 2, subset, subset);
      CHECK(unit.element == projector(Q, 2, subset));
      CHECK(unit.sign == 1);
    }
  }
  SUBCASE("rank-1 raising unit") {
    const MatrixUnitElement unit = matrix_unit(Q, 1, 0b1, 0);
    CHECK(unit.element == cl_mul(gen(1, 2), projector(Q, 1, 0)));
    const ExteriorOperator op = spinor_action(unit.element);
    CHECK(op.apply(ExteriorElement::basis(Q, 1, 0)) == ExteriorElement::basis(Q, 1, 1));
    CHECK(op.apply(ExteriorElement::basis(Q, 1, 1)).is_zero());
  }
  SUBCASE("rank-2 transfer hits exactly one basis vector") {
    const MatrixUnitElement unit = matrix_unit(Q, 2, 0b11, 0b10);
    const ExteriorOperator op = spinor_action(unit.element);
    for (std::uint32_t mask = 0; mask < 4; ++mask) {
      const ExteriorElement image = op.apply(ExteriorElement::basis(Q, 2, mask));
      if (mask == 0b10) {
        CHECK(image == ExteriorElement::basis(Q, 2, 0b11));
      } else {
        CHECK(image.is_zero());
      }
    }
  }
  SUBCASE("all units at ranks 1..3 realize the matrix units exactly") {
    for (int n = 1; n <= 3; ++n) {
      for (std::uint32_t row = 0; row < (1u << n); ++row) {
        for (std::uint32_t col = 0; col < (1u << n); ++col) {
          const MatrixUnitElement unit = matrix_unit(Q, n, row, col);
          CHECK(spinor_action(unit.element) == matrix_unit_operator(n, row, col));
        }
      }
    }
  }
}

TEST_CASE("faithfulness at small ranks") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << (2 * n);
    const int op_dim = 1 << n;
    Matrix images(Q, static_cast<int>(dim), static_cast<int>(dim));
    for (std::uint64_t mono = 0; mono < dim; ++mono) {
      const ExteriorOperator op =
          spinor_action(CliffordElement::monomial(Q, n, mono, Q.one()));
      for (int r = 0; r < op_dim; ++r)
        for (int c = 0; c < op_dim; ++c) {
          images.at(r * op_dim + c, static_cast<int>(mono)) = op.matrix().at(r, c);
        }
    }
    CHECK(images.rank() == static_cast<int>(dim));
  }
}

TEST_CASE("preimage round trip") {
  CHECK(spinor_preimage(ExteriorOperator::identity(Q, 2)) == CliffordElement::one(Q, 2));
  for (std::uint32_t row = 0; row < 4; ++row) {
    for (std::uint32_t col = 0; col < 4; ++col) {
      CHECK(spinor_preimage(matrix_unit_operator(2, row, col)) ==
            matrix_unit(Q, 2, row, col).element);
    }
  }
  Rng rng(59);
  for (int n = 1; n <= 3; ++n) {
    for (int it = 0; it < 15; ++it) {
      const ExteriorOperator op(n, random_matrix(Q, 1 << n, 1 << n, rng));
      CHECK(spinor_action(spinor_preimage(op)) == op);
    }
  }
}

TEST_CASE("occupation projectors") {
  for (int n = 1; n <= 3; ++n) {
    for (int i0 = 1; i0 <= n; ++i0) {
      const auto [p_in, p_out] = occupation_projectors(Q, n, i0);
      CHECK(p_in == cl_mul(gen(n, n + i0), gen(n, i0)));
      CHECK(p_out == cl_mul(gen(n, i0), gen(n, n + i0)));
      CHECK(p_in + p_out == CliffordElement::one(Q, n));
      CHECK(cl_conj(p_in) == p_out);
      CHECK(cl_conj(p_out) == p_in);
    }
  }
  // n = 2, i0 = 1: fixes e1 and e12, kills 1 and e2.
  const auto [p_in, p_out] = occupation_projectors(Q, 2, 1);
  const ExteriorOperator op = spinor_action(p_in);
  CHECK(op.apply(ExteriorElement::basis(Q, 2, 0b01)) == ExteriorElement::basis(Q, 2, 0b01));
  CHECK(op.apply(ExteriorElement::basis(Q, 2, 0b11)) == ExteriorElement::basis(Q, 2, 0b11));
  CHECK(op.apply(ExteriorElement::basis(Q, 2, 0b00)).is_zero());
  CHECK(op.apply(ExteriorElement::basis(Q, 2, 0b10)).is_zero());
  CHECK_THROWS_AS(occupation_projectors(Q, 2, 3), Error);
}

TEST_CASE("operator rank cap") {
  const int saved = max_operator_rank();
  set_max_operator_rank(2);
  CHECK_THROWS_AS(spinor_action(CliffordElement::one(Q, 3)), Error);
  set_max_operator_rank(saved);
  CHECK(spinor_action(CliffordElement::one(Q, 3)) == ExteriorOperator::identity(Q, 3));
}
