#include "mukailat/matrix_json.hpp"

#include <stdexcept>

namespace mukailat {

std::optional<Integer> parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  Integer x;
  const std::string digits = text[0] == '+' ? text.substr(1) : text;
  if (x.set_str(digits, 10) != 0) return std::nullopt;
  return x;
}

nlohmann::json integer_to_json(const Integer& x) {
  if (fits_int64(x)) return to_int64(x);
  return x.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    return Integer(j.get<long>());
  }
  if (j.is_string()) {
    if (auto x = parse_integer(j.get<std::string>())) return *x;
  }
  throw std::invalid_argument("matrix entry is not an integer: " + j.dump());
}

nlohmann::json vector_to_json(const Vector& v) {
  auto arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  auto entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vector_to_json(m.row_vector(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  const nlohmann::json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw std::invalid_argument("matrix document lacks \"entries\"");
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw std::invalid_argument("matrix entries must be an array of rows");

  std::vector<Vector> rows;
  for (const auto& r : *entries) {
    if (!r.is_array()) throw std::invalid_argument("matrix row is not an array");
    Vector row;
    for (const auto& x : r) row.push_back(integer_from_json(x));
    rows.push_back(std::move(row));
  }
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  if (j.is_object() && j.contains("cols") && rows.empty()) cols = j.at("cols").get<std::size_t>();
  IntMatrix m = IntMatrix::from_rows(rows, cols);
  if (j.is_object()) {
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows()) {
      throw std::invalid_argument("matrix \"rows\" disagrees with entries");
    }
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols()) {
      throw std::invalid_argument("matrix \"cols\" disagrees with entries");
    }
  }
  return m;
}

IntMatrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
  }
}

}  // namespace mukailat
