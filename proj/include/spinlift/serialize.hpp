#pragma once
// JSON encodings: matrices as row-major scalar-string grids, algebra
// elements as [mask, coefficient] pair lists.

#include "json.hpp"
#include "spinlift/levi_lifts.hpp"

namespace spinlift {

using json = nlohmann::json;

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& field, const json& j);

// Ordered tagged factor list: T entries for the prefix, one L1 entry, D
// entries for the blocks, then T entries for the suffix.
json factorization_to_json(const SquareDetFactorization& f);
SquareDetFactorization factorization_from_json(const Field& field, int rank, const json& j);

json clifford_to_json(const CliffordElement& x);
CliffordElement clifford_from_json(const Field& field, int rank, const json& j);

json exterior_to_json(const ExteriorElement& x);
ExteriorElement exterior_from_json(const Field& field, int rank, const json& j);

// Scalar from a JSON string or integer literal.
Scalar scalar_from_json(const Field& field, const json& j);

}  // namespace spinlift
