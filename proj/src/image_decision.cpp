#include "spinlift/image_decision.hpp"

#include "spinlift/spin_rep.hpp"

namespace spinlift {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InImage: return "in_image";
    case Verdict::Obstruction: return "obstruction";
    case Verdict::Rank2ForwardOnly: return "rank2_forward_only";
  }
  return "unknown";
}

namespace {

Verdict verdict_from_name(const std::string& name) {
  if (name == "in_image") return Verdict::InImage;
  if (name == "obstruction") return Verdict::Obstruction;
  if (name == "rank2_forward_only") return Verdict::Rank2ForwardOnly;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + name + "'");
}

Matrix line_scaling_levi(const Field& field, int n, int i0, const Scalar& t) {
  Matrix m = Matrix::identity(field, n);
  m.at(i0 - 1, i0 - 1) = t;
  return m;
}

CertificateChecks run_lift_checks(const CliffordElement& lift, const LeviElement& g,
                                  const Scalar& c) {
  CertificateChecks checks;
  checks.even = lift.is_even();
  const CliffordElement conj = cl_conj(lift);
  const CliffordElement unit = CliffordElement::one(lift.field(), lift.rank());
  checks.norm_one = cl_mul(lift, conj) == unit && cl_mul(conj, lift) == unit;
  const auto induced = spin_check(lift);
  checks.conj_matches = induced.has_value() && *induced == levi_embed(g);
  checks.exterior_action_matches = spinor_action(lift) == exterior_functor(g.g) * c;
  return checks;
}

}  // namespace

SpinLiftCertificate split_line_decide(const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroParameter, "split-line scaling by 0");
  const Field& field = a.field();
  Matrix levi(field, 1, 1);
  levi.at(0, 0) = a;

  const auto root = sqrt_in_field(a);
  if (!root) {
    return {Verdict::Obstruction, field, 1,   levi,        a,
            std::nullopt,         std::nullopt, std::nullopt, {}};
  }
  const LiftFactor factor =
      line_scaling_lift(PrimalVector::basis(field, 1, 1), DualVector::basis(field, 1, 1), *root);
  const Scalar c = -root->inverse();
  SpinLiftCertificate cert{Verdict::InImage, field, 1, levi, a, *root, factor.element, c, {}};
  cert.checks = run_lift_checks(factor.element, LeviElement{levi}, c);
  return cert;
}

std::pair<Scalar, Scalar> split_line_image_form(const CliffordElement& x) {
  if (x.rank() != 1) throw Error(ErrorCode::RankMismatch, "split-line form needs rank 1");
  if (!x.is_even()) throw Error(ErrorCode::NotEven, "split-line form of an odd element");
  // x = alpha 1 + beta f_1 w_1 and pq = 1 - f_1 w_1, qp = f_1 w_1 with
  // p = w_1, q = f_1, so a = alpha and b = alpha + beta.
  const Scalar alpha = x.coeff(0);
  const Scalar beta = x.coeff(0b11);
  return {alpha, alpha + beta};
}

Scalar vacuum_scalar(const CliffordElement& s, const LeviElement& g) {
  if (s.rank() != g.rank()) throw Error(ErrorCode::RankMismatch, "vacuum scalar rank");
  const Field& field = s.field();
  const ExteriorElement vacuum_image =
      spinor_apply(s, ExteriorElement::scalar(field, s.rank(), field.one()));
  const auto c = vacuum_test(vacuum_image);
  if (!c || c->is_zero()) {
    throw Error(ErrorCode::NotALeviLift, "vacuum image is not a nonzero scalar");
  }
  if (spinor_action(s) != exterior_functor(g.g) * *c) {
    throw Error(ErrorCode::NotALeviLift, "action differs from the scaled exterior functor");
  }
  return *c;
}

Scalar projector_converse_check(const CliffordElement& s, int i0, const Scalar& t) {
  const Field& field = s.field();
  const int n = s.rank();
  if (i0 < 1 || i0 > n) throw Error(ErrorCode::IndexOutOfRange, "projector check index");
  const LeviElement g{line_scaling_levi(field, n, i0, t)};
  const Scalar c = vacuum_scalar(s, g);
  const auto [p_in, p_out] = occupation_projectors(field, n, i0);
  if (s != p_in * (c * t) + p_out * c) {
    throw Error(ErrorCode::DecompositionFails, "s != c t P_in + c P_out");
  }
  if (c.square() * t != field.one()) {
    throw Error(ErrorCode::NormIdentityFails, "c^2 t != 1");
  }
  return c;
}

SpinLiftCertificate levi_decide(const LeviElement& g, PivotOrder order) {
  const Field& field = g.field();
  const int n = g.rank();
  const Scalar det = g.g.det();
  if (det.is_zero()) throw Error(ErrorCode::SingularMatrix, "decision on a singular matrix");
  if (n == 1) return split_line_decide(g.g.at(0, 0));

  const auto root = sqrt_in_field(det);
  if (root) return assemble_lift(g, order);
  if (n == 2) {
    // The exact converse needs rank at least 3; report rather than overclaim.
    return {Verdict::Rank2ForwardOnly, field, n,   g.g,         det,
            std::nullopt,              std::nullopt, std::nullopt, {}};
  }
  return {Verdict::Obstruction, field, n,   g.g,         det,
          std::nullopt,         std::nullopt, std::nullopt, {}};
}

bool verify_certificate(const SpinLiftCertificate& cert) {
  const Field& field = cert.field;
  const int n = cert.rank;
  if (cert.levi.rows() != n || cert.levi.cols() != n) return false;
  const Scalar det = cert.levi.det();
  if (det.is_zero() || det != cert.det) return false;

  switch (cert.verdict) {
    case Verdict::InImage: {
      if (!cert.lift || !cert.sqrt_det || !cert.scalar_c) return false;
      if (cert.sqrt_det->square() != det) return false;
      // c^2 det = 1 ties the vacuum scalar to the determinant class.
      if (cert.scalar_c->square() * det != field.one()) return false;
      const CertificateChecks checks =
          run_lift_checks(*cert.lift, LeviElement{cert.levi}, *cert.scalar_c);
      return checks.all();
    }
    case Verdict::Obstruction: {
      if (cert.lift || n == 2) return false;
      return !sqrt_in_field(det).has_value();
    }
    case Verdict::Rank2ForwardOnly: {
      if (cert.lift || n != 2) return false;
      return !sqrt_in_field(det).has_value();
    }
  }
  return false;
}

json certificate_to_json(const SpinLiftCertificate& cert) {
  json j;
  j["verdict"] = verdict_name(cert.verdict);
  j["field"] = cert.field.tag();
  j["rank"] = cert.rank;
  j["matrix"] = matrix_to_json(cert.levi);
  j["det"] = cert.det.str();
  j["sqrt"] = cert.sqrt_det ? json(cert.sqrt_det->str()) : json(nullptr);
  j["lift"] = cert.lift ? clifford_to_json(*cert.lift) : json(nullptr);
  j["scalar_c"] = cert.scalar_c ? json(cert.scalar_c->str()) : json(nullptr);
  j["checks"] = {{"even", cert.checks.even},
                 {"norm_one", cert.checks.norm_one},
                 {"conj_matches", cert.checks.conj_matches},
                 {"exterior_action_matches", cert.checks.exterior_action_matches}};
  return j;
}

SpinLiftCertificate certificate_from_json(const json& j) {
  const Field field = Field::parse_tag(j.at("field").get<std::string>());
  const int rank = j.at("rank").get<int>();
  Matrix levi = matrix_from_json(field, j.at("matrix"));
  SpinLiftCertificate cert{verdict_from_name(j.at("verdict").get<std::string>()),
                           field,
                           rank,
                           std::move(levi),
                           field.parse(j.at("det").get<std::string>()),
                           std::nullopt,
                           std::nullopt,
                           std::nullopt,
                           {}};
  if (!j.at("sqrt").is_null()) cert.sqrt_det = field.parse(j.at("sqrt").get<std::string>());
  if (!j.at("lift").is_null()) cert.lift = clifford_from_json(field, rank, j.at("lift"));
  if (!j.at("scalar_c").is_null()) {
    cert.scalar_c = field.parse(j.at("scalar_c").get<std::string>());
  }
  if (j.contains("checks")) {
    const json& c = j.at("checks");
    cert.checks.even = c.value("even", false);
    cert.checks.norm_one = c.value("norm_one", false);
    cert.checks.conj_matches = c.value("conj_matches", false);
    cert.checks.exterior_action_matches = c.value("exterior_action_matches", false);
  }
  return cert;
}

}  // namespace spinlift
