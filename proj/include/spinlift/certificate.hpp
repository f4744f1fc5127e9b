#pragma once
// Decision output for spin-image membership: either an explicit Clifford
// lift with recorded verification results, or a square-class obstruction.

#include "spinlift/clifford.hpp"

namespace spinlift {

enum class Verdict { InImage, Obstruction, Rank2ForwardOnly };

const char* verdict_name(Verdict v);  // "in_image" | "obstruction" | "rank2_forward_only"

struct CertificateChecks {
  bool even = false;
  bool norm_one = false;
  bool conj_matches = false;
  bool exterior_action_matches = false;

  bool all() const { return even && norm_one && conj_matches && exterior_action_matches; }
};

struct SpinLiftCertificate {
  Verdict verdict;
  Field field;
  int rank;
  Matrix levi;  // the n x n input (split-line inputs are 1 x 1)
  Scalar det;
  std::optional<Scalar> sqrt_det;
  std::optional<CliffordElement> lift;
  std::optional<Scalar> scalar_c;  // the vacuum scalar of the lift
  CertificateChecks checks;
};

}  // namespace spinlift
