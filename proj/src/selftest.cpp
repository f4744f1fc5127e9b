#include "spinlift/selftest.hpp"

#include <bit>
#include <functional>

#include "spinlift/image_decision.hpp"
#include "spinlift/spin_rep.hpp"

namespace spinlift {

namespace {

// FNV-1a; keeps per-check seeds identical across standard libraries.
std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Harness {
 public:
  Harness(SelfTestResult& result, std::uint64_t seed) : result_(result), seed_(seed) {}

  // Each check draws from its own deterministic stream.
  void run(const std::string& name, const std::function<void(Rng&)>& body) {
    Rng rng(seed_ ^ fnv1a(name));
    try {
      body(rng);
      result_.items.push_back({name, true, ""});
    } catch (const std::exception& e) {
      result_.items.push_back({name, false, e.what()});
    }
  }

 private:
  SelfTestResult& result_;
  std::uint64_t seed_;
};

[[noreturn]] void fail(const std::string& message) { throw std::runtime_error(message); }

void expect(bool condition, const std::string& message) {
  if (!condition) fail(message);
}

// ---- field_core ----------------------------------------------------------

void field_axioms(const Field& field, Rng& rng) {
  for (int it = 0; it < 500; ++it) {
    const Scalar a = random_scalar(field, rng);
    const Scalar b = random_scalar(field, rng);
    const Scalar c = random_scalar(field, rng);
    expect((a + b) + c == a + (b + c), "addition associativity");
    expect((a * b) * c == a * (b * c), "multiplication associativity");
    expect(a * (b + c) == a * b + a * c, "distributivity");
    expect(a + (-a) == field.zero(), "additive inverse");
    if (!a.is_zero()) expect(a * a.inverse() == field.one(), "multiplicative inverse");
  }
}

void sqrt_of_squares(const Field& field, Rng& rng) {
  for (int it = 0; it < 100; ++it) {
    const Scalar a = random_scalar(field, rng, /*nonzero=*/true);
    const auto r = sqrt_in_field(a.square());
    expect(r.has_value(), "square of " + a.str() + " must have a root");
    expect(r->square() == a.square(), "root must square back");
  }
}

void prime_square_count(const Field& field) {
  const long p = field.modulus().get_si();
  long squares = 0;
  for (long a = 1; a < p; ++a) {
    if (sqrt_in_field(field.from_int(a)).has_value()) ++squares;
  }
  expect(squares == (p - 1) / 2, "GF(p) must have (p-1)/2 nonzero squares");
}

// ---- exterior_model ------------------------------------------------------

void exterior_leibniz(const Field& field, int rank_max, Rng& rng) {
  for (int n = 1; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 50; ++it) {
      const int degree = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
      ExteriorElement x(field, n);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) == degree) x.set_coeff(mask, random_scalar(field, rng));
      }
      ExteriorElement y(field, n);
      for (int t = 0; t < 3; ++t) {
        const auto mask = static_cast<std::uint32_t>(rng.below(1u << n));
        y.set_coeff(mask, y.coeff(mask) + random_scalar(field, rng));
      }
      const DualVector delta = random_dual(field, n, rng);
      ExteriorElement rhs = wedge(contract(delta, x), y);
      const ExteriorElement mixed = wedge(x, contract(delta, y));
      rhs = (degree % 2 == 0) ? rhs + mixed : rhs - mixed;
      expect(contract(delta, wedge(x, y)) == rhs, "contraction must be an antiderivation");
    }
  }
}

void vacuum_exhaustive(const Field& field, int rank_max) {
  for (int n = 1; n <= std::min(rank_max, 3); ++n) {
    const std::uint32_t dim = 1u << n;
    for (std::uint32_t combo = 1; combo < (1u << dim); ++combo) {
      ExteriorElement x(field, n);
      for (std::uint32_t mask = 0; mask < dim; ++mask) {
        if ((combo >> mask) & 1) x.set_coeff(mask, field.one());
      }
      const bool expected = combo == 1;  // only the bare vacuum component
      expect(vacuum_test(x).has_value() == expected, "vacuum test over basis combinations");
    }
    expect(vacuum_test(ExteriorElement::scalar(field, n, field.from_int(5))) ==
               std::optional<Scalar>(field.from_int(5)),
           "vacuum test on a scalar");
  }
}

void functor_homomorphism(const Field& field, int rank_max, Rng& rng) {
  for (int n = 1; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 25; ++it) {
      const Matrix g = random_invertible(field, n, rng);
      const Matrix h = random_invertible(field, n, rng);
      expect(exterior_functor(g * h) == exterior_functor(g) * exterior_functor(h),
             "exterior functor must be multiplicative");
    }
  }
}

// ---- clifford_core -------------------------------------------------------

void clifford_square(const Field& field, int rank_max, Rng& rng) {
  for (int n = 1; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 200; ++it) {
      const HyperbolicVector z = random_hyperbolic(field, n, rng);
      const CliffordElement v = embed_vector(z);
      expect(cl_mul(v, v) == CliffordElement::scalar(field, n, q_value(z)),
             "iota(z)^2 must equal Q(z)");
    }
  }
}

void conj_antiautomorphism(const Field& field, int rank_max, Rng& rng) {
  for (int n = 1; n <= std::min(rank_max, 3); ++n) {
    for (int it = 0; it < 50; ++it) {
      const CliffordElement x = random_clifford(field, n, rng);
      const CliffordElement y = random_clifford(field, n, rng);
      expect(cl_conj(cl_mul(x, y)) == cl_mul(cl_conj(y), cl_conj(x)),
             "conjugation must reverse products");
      expect(cl_conj(cl_conj(x)) == x, "conjugation must be an involution");
    }
  }
}

void spin_image_isometries(const Field& field, int rank_max, Rng& rng) {
  for (int n = 2; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 20; ++it) {
      const TransvectionData data = random_transvection_data(field, n, rng);
      const LiftFactor lift = transvection_lift(data.delta, data.w);
      const auto m = spin_check(lift.element);
      expect(m.has_value(), "transvection lift must pass spin_check");
      expect(is_isometry(*m), "induced map must preserve the form");
      expect(m->det() == field.one(), "induced map must have determinant 1");
    }
  }
}

void kernel_centralizer(const Field& field, int rank_max) {
  for (int n = 1; n <= std::min(rank_max, 3); ++n) {
    const CliffordElement minus_one =
        CliffordElement::scalar(field, n, -field.one());
    const auto m = spin_check(minus_one);
    expect(m.has_value() && m->matrix().is_identity(), "-1 must act trivially on V");
    expect(spinor_action(minus_one) ==
               ExteriorOperator::identity(field, n) * (-field.one()),
           "-1 must act as -id on the spinor model");

    // Centralizer system through the monomial basis: solutions of
    // x g = g x for all generators g form exactly the scalar line.
    const std::uint64_t dim = std::uint64_t{1} << (2 * n);
    Matrix system(field, static_cast<int>(2 * n * dim), static_cast<int>(dim));
    for (std::uint64_t col = 0; col < dim; ++col) {
      const CliffordElement mono = CliffordElement::monomial(field, n, col, field.one());
      for (int b = 0; b < 2 * n; ++b) {
        const CliffordElement gen = CliffordElement::generator(field, n, b + 1);
        const CliffordElement comm = cl_mul(mono, gen) - cl_mul(gen, mono);
        for (const auto& [mask, c] : comm.coeffs()) {
          system.at(static_cast<int>(b * dim + mask), static_cast<int>(col)) = c;
        }
      }
    }
    const auto basis = system.nullspace();
    expect(basis.size() == 1, "centralizer must be one-dimensional");
    for (std::uint64_t mask = 1; mask < dim; ++mask) {
      expect(basis[0].at(static_cast<int>(mask), 0).is_zero(),
             "centralizer must be the scalar line");
    }
    // With x = lambda: the norm condition lambda^2 = 1 leaves exactly +-1.
  }
}

// ---- spin_rep ------------------------------------------------------------

void rho_homomorphism(const Field& field, int rank_max, Rng& rng) {
  for (int n = 1; n <= std::min(rank_max, 4); ++n) {
    const int iterations = n <= 3 ? 50 : 25;
    for (int it = 0; it < iterations; ++it) {
      const CliffordElement x = random_clifford(field, n, rng);
      const CliffordElement y = random_clifford(field, n, rng);
      expect(spinor_action(cl_mul(x, y)) == spinor_action(x) * spinor_action(y),
             "spinor action must be multiplicative");
    }
  }
}

void rho_bijective(const Field& field, int rank_max) {
  for (int n = 1; n <= std::min(rank_max, 3); ++n) {
    const std::uint64_t dim = std::uint64_t{1} << (2 * n);
    const int op_dim = 1 << n;
    Matrix images(field, static_cast<int>(dim), static_cast<int>(dim));
    for (std::uint64_t mono = 0; mono < dim; ++mono) {
      const ExteriorOperator op =
          spinor_action(CliffordElement::monomial(field, n, mono, field.one()));
      for (int r = 0; r < op_dim; ++r)
        for (int c = 0; c < op_dim; ++c) {
          images.at(r * op_dim + c, static_cast<int>(mono)) = op.matrix().at(r, c);
        }
    }
    expect(images.rank() == static_cast<int>(dim),
           "monomial images must be linearly independent");
  }
}

void even_blocks(const Field& field, int rank_max) {
  for (int n = 1; n <= std::min(rank_max, 3); ++n) {
    const std::uint64_t dim = std::uint64_t{1} << (2 * n);
    const int op_dim = 1 << n;
    std::vector<std::uint64_t> even_monomials;
    for (std::uint64_t mono = 0; mono < dim; ++mono) {
      if (std::popcount(mono) % 2 == 0) even_monomials.push_back(mono);
    }
    Matrix flat(field, static_cast<int>(dim), static_cast<int>(even_monomials.size()));
    for (std::size_t k = 0; k < even_monomials.size(); ++k) {
      const ExteriorOperator op = spinor_action(
          CliffordElement::monomial(field, n, even_monomials[k], field.one()));
      for (int r = 0; r < op_dim; ++r)
        for (int c = 0; c < op_dim; ++c) {
          const bool same_parity =
              std::popcount(static_cast<unsigned>(r)) % 2 ==
              std::popcount(static_cast<unsigned>(c)) % 2;
          if (!same_parity) {
            expect(op.matrix().at(r, c).is_zero(), "even images must be parity-block-diagonal");
          }
          flat.at(r * op_dim + c, static_cast<int>(k)) = op.matrix().at(r, c);
        }
    }
    expect(flat.rank() == static_cast<int>(dim / 2),
           "even images must span dimension 2^(2n-1)");
  }
}

void preimage_round_trip(const Field& field, int rank_max, Rng& rng) {
  for (int n = 1; n <= std::min(rank_max, 3); ++n) {
    for (int it = 0; it < 10; ++it) {
      const Matrix m = random_matrix(field, 1 << n, 1 << n, rng);
      const ExteriorOperator op(n, m);
      expect(spinor_action(spinor_preimage(op)) == op, "rho(rho_preimage(M)) must equal M");
    }
  }
}

void occupation_identities(const Field& field, int rank_max) {
  for (int n = 1; n <= std::min(rank_max, 4); ++n) {
    for (int i0 = 1; i0 <= n; ++i0) {
      const auto [p_in, p_out] = occupation_projectors(field, n, i0);
      expect(p_in + p_out == CliffordElement::one(field, n), "P_in + P_out must be 1");
      expect(cl_conj(p_in) == p_out, "conjugation must swap the occupation projectors");
      expect(cl_mul(p_in, p_in) == p_in && cl_mul(p_out, p_out) == p_out,
             "occupation projectors must be idempotent");
      const ExteriorOperator op_in = spinor_action(p_in);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const bool contains = (mask >> (i0 - 1)) & 1;
        const ExteriorElement image =
            op_in.apply(ExteriorElement::basis(field, n, mask));
        expect(image == (contains ? ExteriorElement::basis(field, n, mask)
                                  : ExteriorElement(field, n)),
               "P_in must project onto monomials containing the index");
      }
    }
  }
}

// ---- orthogonal_group ----------------------------------------------------

void ortho_constructors(const Field& field, int rank_max, Rng& rng) {
  for (int n = 1; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 10; ++it) {
      HyperbolicVector v = random_hyperbolic(field, n, rng);
      if (q_value(v).is_zero()) continue;
      const OrthoMap r = reflection(v);
      expect(is_isometry(r), "reflection must be an isometry");
      expect(r.det() == -field.one(), "reflection must have determinant -1");
      expect((r * r).matrix().is_identity(), "reflection must be an involution");

      const Matrix g = random_invertible(field, n, rng);
      const OrthoMap levi = levi_embed({g});
      expect(is_isometry(levi), "Levi embedding must be an isometry");
      expect(levi.det() == field.one(), "Levi embedding must have determinant 1");

      if (n >= 2) {
        const TransvectionData data = random_transvection_data(field, n, rng);
        const OrthoMap t = transvection_map(data.delta, data.w);
        expect(is_isometry(t) && t.det() == field.one(), "transvection isometry");
        const OrthoMap l =
            line_scaling_map(data.w, data.f, random_scalar(field, rng, true));
        expect(is_isometry(l) && l.det() == field.one(), "line scaling isometry");
      }
    }
  }
}

void weight_two_law(const Field& field, int rank_max, Rng& rng) {
  for (int n = 2; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 34; ++it) {
      const TransvectionData data = random_transvection_data(field, n, rng);
      const Scalar t = random_scalar(field, rng, /*nonzero=*/true);
      const OrthoMap lambda = line_scaling_map(data.w, data.f, t);
      const OrthoMap trans = transvection_map(data.delta, data.w);
      DualVector scaled = data.delta;
      for (int i = 0; i < n; ++i) scaled.coords[i] = t.square() * data.delta.coords[i];
      expect(lambda * trans * lambda.inverse() == transvection_map(scaled, data.w),
             "weight-2 conjugation law");
    }
  }
}

void semidirect_law(const Field& field, int rank_max, Rng& rng) {
  for (int n = 2; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 25; ++it) {
      const TransvectionData data = random_transvection_data(field, n, rng);
      DualVector eta = random_dual(field, n, rng);
      const Scalar overlap = eval_dual(eta, data.w);
      for (int i = 0; i < n; ++i) eta.coords[i] -= overlap * data.f.coords[i];
      DualVector sum = data.delta;
      for (int i = 0; i < n; ++i) sum.coords[i] += eta.coords[i];
      expect(transvection_map(data.delta, data.w) * transvection_map(eta, data.w) ==
                 transvection_map(sum, data.w),
             "transvections must compose additively");
    }
  }
}

void levi_injective(const Field& field, int rank_max, Rng& rng) {
  for (int n = 1; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 10; ++it) {
      const Matrix g = random_invertible(field, n, rng);
      const Matrix h = random_invertible(field, n, rng);
      if (g == h) continue;
      expect(levi_embed({g}) != levi_embed({h}), "Levi embedding must be injective");
    }
  }
}

// ---- levi_lifts ----------------------------------------------------------

void lift_factor_checks(const Field& field, int rank_max, Rng& rng) {
  for (int n = 2; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 10; ++it) {
      const TransvectionData data = random_transvection_data(field, n, rng);
      const LiftFactor trans = transvection_lift(data.delta, data.w);
      expect(spin_check(trans.element) == std::optional<OrthoMap>(trans.ortho),
             "transvection lift action");
      const LiftFactor line =
          line_scaling_lift(data.w, data.f, random_scalar(field, rng, true));
      expect(spin_check(line.element) == std::optional<OrthoMap>(line.ortho),
             "line scaling lift action");
      const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
      int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
      if (p == q) q = (q % n) + 1;
      const LiftFactor pair =
          pair_generator(field, n, p, q, random_scalar(field, rng));
      expect(spin_check(pair.element) == std::optional<OrthoMap>(pair.ortho),
             "pair generator action");
    }
  }
}

void lift_additivity(const Field& field, int rank_max, Rng& rng) {
  for (int n = 2; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 20; ++it) {
      const TransvectionData data = random_transvection_data(field, n, rng);
      DualVector eta = random_dual(field, n, rng);
      const Scalar overlap = eval_dual(eta, data.w);
      for (int i = 0; i < n; ++i) eta.coords[i] -= overlap * data.f.coords[i];
      DualVector sum = data.delta;
      for (int i = 0; i < n; ++i) sum.coords[i] += eta.coords[i];
      expect(cl_mul(transvection_lift(data.delta, data.w).element,
                    transvection_lift(eta, data.w).element) ==
                 transvection_lift(sum, data.w).element,
             "transvection lifts must compose additively");
    }
  }
}

void internal_weight_two(const Field& field, int rank_max, Rng& rng) {
  for (int n = 2; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 34; ++it) {
      const TransvectionData data = random_transvection_data(field, n, rng);
      const Scalar t = random_scalar(field, rng, /*nonzero=*/true);
      const LiftFactor s_t = line_scaling_lift(data.w, data.f, t);
      const CliffordElement s_inv = cl_conj(s_t.element);  // norm one
      DualVector scaled = data.delta;
      for (int i = 0; i < n; ++i) scaled.coords[i] = t.square() * data.delta.coords[i];
      expect(cl_mul(cl_mul(s_t.element, transvection_lift(data.delta, data.w).element), s_inv) ==
                 transvection_lift(scaled, data.w).element,
             "internal weight-2 law");
    }
  }
}

void reduction_recompose(const Field& field, int rank_max, Rng& rng) {
  for (int n = 2; n <= std::min(rank_max, 4); ++n) {
    for (int it = 0; it < 10; ++it) {
      const Matrix g = random_invertible(field, n, rng);
      const TransvectionReduction red = transvection_reduce({g});
      Matrix m = Matrix::identity(field, n);
      for (const auto& t : red.prefix) m = m * transvection_matrix(field, n, t);
      Matrix d(field, n, n);
      for (int i = 0; i < n; ++i) d.at(i, i) = red.diagonal[i];
      m = m * d;
      for (const auto& t : red.suffix) m = m * transvection_matrix(field, n, t);
      expect(m == g, "transvection reduction must recompose exactly");
    }
  }
}

void assemble_invariants(const Field& field, int rank_max, Rng& rng) {
  const int n = std::min(rank_max, 3);
  if (n < 2) return;
  for (int it = 0; it < 10; ++it) {
    Scalar u = field.one();
    const Matrix g = random_square_det(field, n, rng, &u);
    const SpinLiftCertificate first = assemble_lift({g}, PivotOrder::FirstNonzero);
    expect(first.checks.all(), "assembled lift must pass all checks");
    const SpinLiftCertificate second = assemble_lift({g}, PivotOrder::LastNonzero);
    expect(second.checks.all(), "assembled lift must pass all checks (alternate pivots)");
    const CliffordElement& x = *first.lift;
    const CliffordElement& y = *second.lift;
    expect(x == y || x == -y, "pivot order may change the lift by at most a sign");
    expect(spin_check(x) == spin_check(y), "pivot order must not change the action");
  }
}

// ---- image_decision ------------------------------------------------------

void decide_soundness(const Field& field, int rank_max, Rng& rng) {
  const int n = std::min(rank_max, 3);
  if (n < 2) return;
  for (int it = 0; it < 10; ++it) {
    Scalar u = field.one();
    const Matrix g = random_square_det(field, n, rng, &u);
    const SpinLiftCertificate cert = levi_decide({g});
    expect(cert.verdict == Verdict::InImage, "square determinant must be in the image");
    expect(verify_certificate(cert), "certificate must verify independently");
  }
}

void decide_completeness(const Field& field, int rank_max, Rng& rng) {
  if (rank_max < 3) return;
  // The smallest verified nonsquare unit of the field.
  Scalar nonsquare = field.from_int(2);
  while (sqrt_in_field(nonsquare).has_value()) {
    nonsquare += field.one();
    if (field.is_prime_field() && nonsquare.is_zero()) fail("no nonsquare unit found");
  }
  for (int it = 0; it < 10; ++it) {
    const Matrix g = random_with_det_class(field, 3, nonsquare, rng);
    const SpinLiftCertificate cert = levi_decide({g});
    expect(cert.verdict == Verdict::Obstruction, "nonsquare determinant must obstruct");
    expect(verify_certificate(cert), "obstruction certificate must verify");
  }
}

void projective_descent(const Field& field, int rank_max, Rng& rng) {
  const int n = std::min(rank_max, 3);
  if (n < 2) return;
  Scalar u = field.one();
  const Matrix g = random_square_det(field, n, rng, &u);
  const SpinLiftCertificate cert = assemble_lift({g});
  const CliffordElement& x = *cert.lift;
  const CliffordElement minus_x = -x;
  expect(spin_check(x) == spin_check(minus_x), "x and -x must have the same action");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const ExteriorElement basis = ExteriorElement::basis(field, n, mask);
    const ExteriorElement a = spinor_apply(x, basis);
    const ExteriorElement b = spinor_apply(minus_x, basis);
    expect(a == -b, "lifts differing by -1 must agree on projective lines");
  }
}

void split_line_exhaustive(const Field& field) {
  if (!field.is_prime_field() || field.modulus() > 101) return;
  const long p = field.modulus().get_si();
  long in_image = 0;
  for (long a = 1; a < p; ++a) {
    const SpinLiftCertificate cert = split_line_decide(field.from_int(a));
    const bool square = sqrt_in_field(field.from_int(a)).has_value();
    expect((cert.verdict == Verdict::InImage) == square,
           "split-line verdict must match the square class");
    if (cert.verdict == Verdict::InImage) {
      expect(cert.checks.all() && verify_certificate(cert), "split-line lift checks");
      ++in_image;
    }
  }
  expect(in_image == (p - 1) / 2, "split-line image must be the squares");
}

}  // namespace

SelfTestResult run_selftest(const SelfTestOptions& options) {
  SelfTestResult result;
  Harness harness(result, options.seed);
  const int rank_max = options.rank_max;

  for (const Field& field : options.fields) {
    const std::string tag = field.tag();
    harness.run("field_axioms[" + tag + "]", [&](Rng& rng) { field_axioms(field, rng); });
    harness.run("sqrt_of_squares[" + tag + "]", [&](Rng& rng) { sqrt_of_squares(field, rng); });
    if (field.is_prime_field() && field.modulus() < 1000) {
      harness.run("prime_square_count[" + tag + "]", [&](Rng&) { prime_square_count(field); });
    }
    harness.run("exterior_leibniz[" + tag + "]",
                [&](Rng& rng) { exterior_leibniz(field, rank_max, rng); });
    harness.run("vacuum_exhaustive[" + tag + "]",
                [&](Rng&) { vacuum_exhaustive(field, rank_max); });
    harness.run("functor_homomorphism[" + tag + "]",
                [&](Rng& rng) { functor_homomorphism(field, rank_max, rng); });
    harness.run("clifford_square[" + tag + "]",
                [&](Rng& rng) { clifford_square(field, rank_max, rng); });
    harness.run("conj_antiautomorphism[" + tag + "]",
                [&](Rng& rng) { conj_antiautomorphism(field, rank_max, rng); });
    harness.run("spin_image_isometries[" + tag + "]",
                [&](Rng& rng) { spin_image_isometries(field, rank_max, rng); });
    harness.run("kernel_centralizer[" + tag + "]",
                [&](Rng&) { kernel_centralizer(field, rank_max); });
    harness.run("rho_homomorphism[" + tag + "]",
                [&](Rng& rng) { rho_homomorphism(field, rank_max, rng); });
    harness.run("rho_bijective[" + tag + "]", [&](Rng&) { rho_bijective(field, rank_max); });
    harness.run("even_blocks[" + tag + "]", [&](Rng&) { even_blocks(field, rank_max); });
    harness.run("preimage_round_trip[" + tag + "]",
                [&](Rng& rng) { preimage_round_trip(field, rank_max, rng); });
    harness.run("occupation_identities[" + tag + "]",
                [&](Rng&) { occupation_identities(field, rank_max); });
    harness.run("ortho_constructors[" + tag + "]",
                [&](Rng& rng) { ortho_constructors(field, rank_max, rng); });
    harness.run("weight_two_law[" + tag + "]",
                [&](Rng& rng) { weight_two_law(field, rank_max, rng); });
    harness.run("semidirect_law[" + tag + "]",
                [&](Rng& rng) { semidirect_law(field, rank_max, rng); });
    harness.run("levi_injective[" + tag + "]",
                [&](Rng& rng) { levi_injective(field, rank_max, rng); });
    harness.run("lift_factor_checks[" + tag + "]",
                [&](Rng& rng) { lift_factor_checks(field, rank_max, rng); });
    harness.run("lift_additivity[" + tag + "]",
                [&](Rng& rng) { lift_additivity(field, rank_max, rng); });
    harness.run("internal_weight_two[" + tag + "]",
                [&](Rng& rng) { internal_weight_two(field, rank_max, rng); });
    harness.run("reduction_recompose[" + tag + "]",
                [&](Rng& rng) { reduction_recompose(field, rank_max, rng); });
    harness.run("assemble_invariants[" + tag + "]",
                [&](Rng& rng) { assemble_invariants(field, rank_max, rng); });
    harness.run("decide_soundness[" + tag + "]",
                [&](Rng& rng) { decide_soundness(field, rank_max, rng); });
    harness.run("decide_completeness[" + tag + "]",
                [&](Rng& rng) { decide_completeness(field, rank_max, rng); });
    harness.run("projective_descent[" + tag + "]",
                [&](Rng& rng) { projective_descent(field, rank_max, rng); });
    harness.run("split_line_exhaustive[" + tag + "]",
                [&](Rng&) { split_line_exhaustive(field); });
  }
  return result;
}

}  // namespace spinlift
