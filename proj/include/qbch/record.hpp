#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qbch/quantum.hpp"

namespace qbch {

// JSON keys: family, q, n, k, d_lower, d_exact, mds, defining_set_c1,
// defining_set_c2, checks{subset, euclidean_dc, hermitian_dc, oracle},
// construction, classical, formula_k. Absent optionals are omitted.
nlohmann::json to_json(const QuantumParams& p);
// Throws DomainError on a malformed record.
QuantumParams params_from_json(const nlohmann::json& j);

// One CSV line per record under csv_header(); lists are space-separated,
// absent values are empty fields.
std::string csv_header();
// Quotes a field when it holds a comma, quote or newline.
std::string csv_quote(const std::string& field);
std::string to_csv(const QuantumParams& p);
QuantumParams params_from_csv(const std::string& line);

// Multi-line human-readable block.
std::string to_text(const QuantumParams& p);

}  // namespace qbch
