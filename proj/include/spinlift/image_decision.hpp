#pragma once
// Exact spin-image membership: the split-line criterion, the higher-rank
// square-determinant Levi criterion, vacuum scalar extraction, and the
// occupation-projector decomposition check, all with verifiable
// certificates.

#include "spinlift/levi_lifts.hpp"
#include "spinlift/serialize.hpp"

namespace spinlift {

// Membership of the rank-1 reciprocal scaling (a^-1 on the dual line, a on
// the chosen line): in the image iff a is a square.
SpinLiftCertificate split_line_decide(const Scalar& a);

// Writes an even rank-1 element as a pq + b qp with p = w_1, q = f_1.
std::pair<Scalar, Scalar> split_line_image_form(const CliffordElement& x);

// The unique c with the exterior action of s equal to c times the exterior
// functor of g; verified against the full matrix identity.
Scalar vacuum_scalar(const CliffordElement& s, const LeviElement& g);

// For s lifting the scaling of basis line i0 by t: extracts c, verifies
// s = c t P_in + c P_out as Clifford elements and c^2 t = 1, returns c.
Scalar projector_converse_check(const CliffordElement& s, int i0, const Scalar& t);

// Full decision: rank 1 routes through the split line, rank >= 3 is exact
// (in the image iff det is a square), rank 2 returns the one-directional
// verdict on nonsquare determinants.
SpinLiftCertificate levi_decide(const LeviElement& g, PivotOrder order = PivotOrder::FirstNonzero);

// Re-checks a certificate independently of how it was produced.
bool verify_certificate(const SpinLiftCertificate& cert);

json certificate_to_json(const SpinLiftCertificate& cert);
SpinLiftCertificate certificate_from_json(const json& j);

}  // namespace spinlift
