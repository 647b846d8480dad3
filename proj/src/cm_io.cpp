#include "gaussent/cm_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gaussent/error.hpp"

namespace gaussent {

using nlohmann::json;

CovarianceMatrix parse_cm_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("n_modes") || !doc.contains("matrix")) {
    throw Error(ErrorCode::kParseError, "expected object with n_modes and matrix");
  }
  if (!doc["n_modes"].is_number_integer() || doc["n_modes"].get<long long>() < 1) {
    throw Error(ErrorCode::kParseError, "n_modes must be a positive integer");
  }
  const int n = static_cast<int>(doc["n_modes"].get<long long>());
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(2 * n)) {
    throw Error(ErrorCode::kParseError, "matrix must have 2*n_modes rows");
  }
  Matrix m(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(2 * n)) {
      throw Error(ErrorCode::kParseError, "matrix rows must have 2*n_modes entries");
    }
    for (int j = 0; j < 2 * n; ++j) {
      const json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) throw Error(ErrorCode::kParseError, "matrix entries must be numbers");
      m(i, j) = v.get<double>();
    }
  }
  return CovarianceMatrix(std::move(m));
}

CovarianceMatrix load_cm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cm_json(buf.str());
}

std::string cm_to_json(const CovarianceMatrix& cm) {
  json rows = json::array();
  for (int i = 0; i < cm.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < cm.dim(); ++j) row.push_back(cm(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n_modes", cm.n_modes()}, {"matrix", rows}}.dump();
}

}  // namespace gaussent
