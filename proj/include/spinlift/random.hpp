#pragma once
// Deterministic random generation for test suites.  All draws go through
// raw mt19937_64 output so the same seed gives the same values on every
// platform.

#include <random>

#include "spinlift/levi_lifts.hpp"

namespace spinlift {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform-ish draw in [0, bound); bias is irrelevant for test data.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

// Small-height rationals / arbitrary residues.
Scalar random_scalar(const Field& field, Rng& rng, bool nonzero = false);
DualVector random_dual(const Field& field, int n, Rng& rng, bool nonzero = false);
PrimalVector random_primal(const Field& field, int n, Rng& rng, bool nonzero = false);
HyperbolicVector random_hyperbolic(const Field& field, int n, Rng& rng);
Matrix random_matrix(const Field& field, int rows, int cols, Rng& rng);
Matrix random_invertible(const Field& field, int n, Rng& rng);
CliffordElement random_clifford(const Field& field, int rank, Rng& rng, int terms = 4);

// A pair (delta, w) with w != 0 and delta(w) = 0, plus the dual vector f
// with f(w) = 1 used to project delta into ker(ev_w).
struct TransvectionData {
  DualVector delta;
  PrimalVector w;
  DualVector f;
};
TransvectionData random_transvection_data(const Field& field, int n, Rng& rng);

// Invertible with determinant u^2 by construction: transvections around a
// distinguished diagonal.
Matrix random_square_det(const Field& field, int n, Rng& rng, Scalar* u_out);

// Invertible with determinant in the square class of d (d a nonsquare for
// obstruction tests).
Matrix random_with_det_class(const Field& field, int n, const Scalar& d, Rng& rng);

}  // namespace spinlift
