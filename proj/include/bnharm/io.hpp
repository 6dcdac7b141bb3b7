#pragma once

#include <json.hpp>

#include "bnharm/matrix.hpp"

namespace bnharm {

// {"labels": [...], "rows": [[...]]} with Rational strings; only square
// matrices with row labels == column labels are serialized this way.
nlohmann::json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

// Header line of column labels (quoted, since labels contain commas),
// then one row per line of Rational strings.
std::string matrix_to_csv(const RatMatrix& m);

}  // namespace bnharm
