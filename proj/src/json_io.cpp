#include "para/json_io.hpp"

#include <fstream>
#include <sstream>

#include "para/errors.hpp"

namespace para {

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(what + ": " + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

void require_schema_version(const json& doc, const std::string& what) {
    if (!doc.is_object()) throw SchemaError(what + ": expected a JSON object");
    auto it = doc.find("schema_version");
    if (it == doc.end() || !it->is_number_integer())
        throw SchemaError(what + ": missing integer field \"schema_version\"");
    if (it->get<int>() != kSchemaVersion)
        throw SchemaError(what + ": unsupported schema_version " + it->dump() + " (expected " +
                          std::to_string(kSchemaVersion) + ")");
}

const json& require_field(const json& doc, const std::string& key, const std::string& what) {
    if (!doc.is_object()) throw SchemaError(what + ": expected a JSON object");
    auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(what + ": missing field \"" + key + "\"");
    return *it;
}

int require_int(const json& doc, const std::string& key, const std::string& what) {
    const json& f = require_field(doc, key, what);
    if (!f.is_number_integer()) throw SchemaError(what + ": field \"" + key + "\" must be an integer");
    return f.get<int>();
}

bool require_bool(const json& doc, const std::string& key, const std::string& what) {
    const json& f = require_field(doc, key, what);
    if (!f.is_boolean()) throw SchemaError(what + ": field \"" + key + "\" must be a boolean");
    return f.get<bool>();
}

std::string require_string(const json& doc, const std::string& key, const std::string& what) {
    const json& f = require_field(doc, key, what);
    if (!f.is_string()) throw SchemaError(what + ": field \"" + key + "\" must be a string");
    return f.get<std::string>();
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

Vec vec_from_json(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw SchemaError(what + ": expected an array of rational strings");
    Vec v;
    v.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_string()) throw SchemaError(what + ": vector entries must be rational strings");
        v.push_back(GaussianRational::parse(e.get<std::string>()));
    }
    return v;
}

json matrix_to_json(const ExactMatrix& m) {
    json arr = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        arr.push_back(std::move(row));
    }
    return arr;
}

ExactMatrix matrix_from_json(const json& arr, const std::string& what, int cols_if_empty) {
    if (!arr.is_array()) throw SchemaError(what + ": expected an array of rows");
    std::vector<Vec> rows;
    rows.reserve(arr.size());
    for (const auto& row : arr) rows.push_back(vec_from_json(row, what));
    if (rows.empty()) return ExactMatrix(0, cols_if_empty);
    const std::size_t cols = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != cols) throw SchemaError(what + ": ragged matrix rows");
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

json int_vector_to_json(const std::vector<int>& v) {
    json arr = json::array();
    for (int x : v) arr.push_back(x);
    return arr;
}

std::vector<int> int_vector_from_json(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw SchemaError(what + ": expected an array of integers");
    std::vector<int> v;
    v.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_number_integer()) throw SchemaError(what + ": entries must be integers");
        v.push_back(e.get<int>());
    }
    return v;
}

}  // namespace para
