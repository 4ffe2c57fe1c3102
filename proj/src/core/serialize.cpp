#include "core/serialize.hpp"

#include <json.hpp>

namespace pavcf {

using ordered_json = nlohmann::ordered_json;

stat_matrix matrix_from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::invalid_argument, std::string("bad matrix document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries")) {
        fail(errc::invalid_argument, "matrix document needs fields rows, cols, entries");
    }
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer() ||
        !doc["entries"].is_array()) {
        fail(errc::invalid_argument, "matrix document fields have wrong types");
    }
    stat_matrix m(doc["rows"].get<int>(), doc["cols"].get<int>());
    for (const auto& entry : doc["entries"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || !entry[2].is_number_integer()) {
            fail(errc::invalid_argument, "matrix entries must be [i, j, value] integer triples");
        }
        const int i = entry[0].get<int>();
        const int j = entry[1].get<int>();
        const int64_t v = entry[2].get<int64_t>();
        if (i < 1 || i > m.rows() || j < 1 || j > m.cols()) {
            fail(errc::invalid_argument, "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") outside " + std::to_string(m.rows()) + "x" +
                                             std::to_string(m.cols()));
        }
        if (v != 0 && m.at(i, j) != 0) {
            fail(errc::invalid_argument, "duplicate matrix entry at (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
        }
        if (v != 0) m.set(i, j, v);
    }
    return m;
}

std::string matrix_to_json(const stat_matrix& m) {
    ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["entries"] = ordered_json::array();
    for (const auto& [ij, v] : m.entries()) {
        doc["entries"].push_back({ij.first, ij.second, v});
    }
    return doc.dump();
}

std::string series_to_json(const graded_series& s) {
    ordered_json doc = ordered_json::array();
    for (int d = 0; d <= s.trunc(); ++d) {
        ordered_json grade;
        grade["grade"] = d;
        grade["terms"] = ordered_json::array();
        for (const auto& [e, c] : s.at(d).terms()) {
            ordered_json term;
            term["exponents"] = ordered_json::object();
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0) term["exponents"]["q" + std::to_string(i + 2)] = e[i];
            }
            term["coefficient"] = c.str();
            grade["terms"].push_back(std::move(term));
        }
        doc.push_back(std::move(grade));
    }
    return doc.dump();
}

} // namespace pavcf
