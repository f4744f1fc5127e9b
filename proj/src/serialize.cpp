#include "spinlift/serialize.hpp"

namespace spinlift {

Scalar scalar_from_json(const Field& field, const json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<long>());
  throw Error(ErrorCode::ParseError, "scalar entry must be a string or integer");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Field& field, const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "matrix must be a nonempty array");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be arrays");
  const int cols = static_cast<int>(j[0].size());
  Matrix m(field, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) {
      throw Error(ErrorCode::ParseError, "ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(field, j[i][c]);
  }
  return m;
}

json clifford_to_json(const CliffordElement& x) {
  json terms = json::array();
  for (const auto& [mask, c] : x.coeffs()) {
    terms.push_back(json::array({mask, c.str()}));
  }
  return terms;
}

CliffordElement clifford_from_json(const Field& field, int rank, const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be an array of [mask, coeff]");
  CliffordElement x(field, rank);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) {
      throw Error(ErrorCode::ParseError, "element term must be [mask, coeff]");
    }
    x.set_coeff(term[0].get<std::uint64_t>(), scalar_from_json(field, term[1]));
  }
  return x;
}

json factorization_to_json(const SquareDetFactorization& f) {
  json factors = json::array();
  for (const auto& t : f.prefix) {
    factors.push_back({{"kind", "T"}, {"i", t.i}, {"j", t.j}, {"r", t.r.str()}});
  }
  factors.push_back({{"kind", "L1"}, {"t", f.line_scale.str()}});
  for (const auto& b : f.blocks) {
    factors.push_back({{"kind", "D"}, {"i", b.i}, {"j", b.j}, {"a", b.a.str()}});
  }
  for (const auto& t : f.suffix) {
    factors.push_back({{"kind", "T"}, {"i", t.i}, {"j", t.j}, {"r", t.r.str()}});
  }
  return factors;
}

SquareDetFactorization factorization_from_json(const Field& field, int rank, const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "factor list must be an array");
  SquareDetFactorization f{LeviElement::identity(field, rank), field.one(), {}, field.one(),
                           {},                                 {}};
  bool seen_line = false;
  for (const auto& entry : j) {
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "T") {
      const ElementaryTransvection t{entry.at("i").get<int>(), entry.at("j").get<int>(),
                                     scalar_from_json(field, entry.at("r"))};
      (seen_line ? f.suffix : f.prefix).push_back(t);
    } else if (kind == "L1") {
      if (seen_line) throw Error(ErrorCode::ParseError, "duplicate L1 factor");
      seen_line = true;
      f.line_scale = scalar_from_json(field, entry.at("t"));
      const auto root = sqrt_in_field(f.line_scale);
      if (!root) throw Error(ErrorCode::ParseError, "L1 parameter must be a square");
      f.u = *root;
    } else if (kind == "D") {
      if (!seen_line) throw Error(ErrorCode::ParseError, "D factor before L1");
      if (!f.suffix.empty()) throw Error(ErrorCode::ParseError, "D factor after suffix");
      f.blocks.push_back({entry.at("i").get<int>(), entry.at("j").get<int>(),
                          scalar_from_json(field, entry.at("a"))});
    } else {
      throw Error(ErrorCode::ParseError, "unknown factor kind '" + kind + "'");
    }
  }
  if (!seen_line) throw Error(ErrorCode::ParseError, "missing L1 factor");
  f.g = LeviElement{recompose(f)};
  return f;
}

json exterior_to_json(const ExteriorElement& x) {
  json terms = json::array();
  for (const auto& [mask, c] : x.coeffs()) {
    terms.push_back(json::array({mask, c.str()}));
  }
  return terms;
}

ExteriorElement exterior_from_json(const Field& field, int rank, const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be an array of [mask, coeff]");
  ExteriorElement x(field, rank);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) {
      throw Error(ErrorCode::ParseError, "element term must be [mask, coeff]");
    }
    x.set_coeff(term[0].get<std::uint32_t>(), scalar_from_json(field, term[1]));
  }
  return x;
}

}  // namespace spinlift
