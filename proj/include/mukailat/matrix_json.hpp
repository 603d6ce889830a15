#pragma once

#include <string>

#include "json.hpp"
#include "mukailat/intmatrix.hpp"

namespace mukailat {

// Matrix document: {"rows": R, "cols": C, "entries": [[...], ...]}.
// Entries are JSON integers when they fit in 64 bits and exact decimal
// strings otherwise; the reader accepts either form for any entry.

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const IntMatrix& m);

/// Accepts the full matrix document or a bare array of rows.
/// Throws std::invalid_argument on malformed input.
IntMatrix matrix_from_json(const nlohmann::json& j);
IntMatrix parse_matrix(const std::string& text);

}  // namespace mukailat
