// SPDX-License-Identifier: Apache-2.0
#include "csd/state_io.hpp"

#include <fstream>

#include <json.hpp>

#include "csd/errors.hpp"
#include "csd/states.hpp"

namespace csd {

namespace {

using nlohmann::json;

CMat4 matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.size() != 4)
        throw ParseError("matrix must be an array of 4 rows");
    CMat4 m;
    for (int i = 0; i < 4; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != 4)
            throw ParseError("matrix row " + std::to_string(i + 1) + " must have 4 entries");
        for (int j = 0; j < 4; ++j) {
            const json& cell = row[j];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw ParseError("matrix entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") must be [re, im]");
            m(i, j) = Cx(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return m;
}

double field(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw ParseError("missing numeric field \"" + key + "\"");
    return obj[key].get<double>();
}

} // namespace

CMat4 load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("state file must hold a JSON object");

    if (doc.contains("matrix")) return matrix_from_json(doc["matrix"]);
    if (doc.contains("cs")) {
        const json& p = doc["cs"];
        return cs_matrix(CSParams{field(p, "p1"), field(p, "p2"), field(p, "p3"),
                                  field(p, "p4"), field(p, "p5"), field(p, "p6"),
                                  field(p, "p7")});
    }
    if (doc.contains("x")) {
        const json& q = doc["x"];
        return x_matrix(XParams{field(q, "q1"), field(q, "q2"), field(q, "q3"),
                                field(q, "q4"), field(q, "q5"), field(q, "q6"),
                                field(q, "q7")});
    }
    throw ParseError("expected one of \"matrix\", \"cs\", \"x\"");
}

void save_state(const std::filesystem::path& path, const CMat4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(row);
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << json{{"matrix", rows}}.dump(2) << "\n";
}

} // namespace csd
