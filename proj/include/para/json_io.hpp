#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "para/matrix.hpp"

namespace para {

using nlohmann::json;

/// Current on-disk schema version for every JSON document this library
/// reads or writes.
inline constexpr int kSchemaVersion = 1;

/// Parse text as JSON; syntax errors become SchemaError carrying the
/// parser's position diagnostics.
json parse_json_text(const std::string& text, const std::string& what);

/// Read and parse a JSON file (SchemaError on missing file / bad syntax).
json load_json_file(const std::string& path);

/// Verify doc["schema_version"] == 1 (SchemaError otherwise).
void require_schema_version(const json& doc, const std::string& what);

/// Required-field accessors; absence or wrong type raises SchemaError
/// naming the offending key.
const json& require_field(const json& doc, const std::string& key, const std::string& what);
int require_int(const json& doc, const std::string& key, const std::string& what);
bool require_bool(const json& doc, const std::string& key, const std::string& what);
std::string require_string(const json& doc, const std::string& key, const std::string& what);

/// Vectors/matrices travel as (nested) arrays of canonical rational
/// strings "a/b+c/di".
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& arr, const std::string& what);

json matrix_to_json(const ExactMatrix& m);
/// `cols_if_empty` disambiguates the width of a matrix with zero rows.
ExactMatrix matrix_from_json(const json& arr, const std::string& what, int cols_if_empty = 0);

json int_vector_to_json(const std::vector<int>& v);
std::vector<int> int_vector_from_json(const json& arr, const std::string& what);

}  // namespace para
