#include "latmat/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace latmat {
namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based; translate to a line number for the message
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        fail(Errc::ParseError,
             "invalid JSON near line " + std::to_string(line) + ": " + e.what());
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        fail(Errc::ParseError, std::string("missing field '") + name + "'");
    return j.at(name);
}

RingKind ring_field(const json& j) {
    const json& r = field(j, "ring");
    if (!r.is_string()) fail(Errc::ParseError, "field 'ring' must be a string");
    return ring_from_name(r.get<std::string>());
}

std::size_t size_field(const json& j) {
    const json& n = field(j, "n");
    if (!n.is_number_unsigned() || n.get<std::size_t>() == 0)
        fail(Errc::ParseError, "field 'n' must be a positive integer");
    return n.get<std::size_t>();
}

Mat rows_to_mat(const json& rows, RingKind kind, std::size_t n, const char* name) {
    if (!rows.is_array() || rows.size() != n)
        fail(Errc::ParseError,
             std::string("field '") + name + "' must be an array of " +
             std::to_string(n) + " rows");
    Mat m(kind, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != n)
            fail(Errc::ParseError,
                 std::string("row ") + std::to_string(i + 1) + " of '" + name +
                 "' must have " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            const json& cell = row.at(j);
            if (!cell.is_string())
                fail(Errc::ParseError,
                     std::string("entry (") + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ") of '" + name + "' must be a string");
            m.set(i, j, FieldElem::parse(kind, cell.get<std::string>()));
        }
    }
    return m;
}

json mat_to_rows(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json mat_obj(const Mat& m) {
    json j;
    j["ring"] = ring_name(m.kind());
    j["n"] = m.rows();
    j["rows"] = mat_to_rows(m);
    return j;
}

Mat mat_from_obj(const json& j) {
    RingKind kind = ring_field(j);
    std::size_t n = size_field(j);
    return rows_to_mat(field(j, "rows"), kind, n, "rows");
}

}  // namespace

std::string mat_to_json(const Mat& m) {
    return mat_obj(m).dump(2);
}

Mat mat_from_json(const std::string& text) {
    return mat_from_obj(parse_text(text));
}

std::string cone_to_json(const ConeA& cone) {
    json j;
    j["cone_A"] = mat_obj(cone.matrix());
    return j.dump(2);
}

ConeA cone_from_json(const std::string& text) {
    json j = parse_text(text);
    return ConeA::validate(mat_from_obj(field(j, "cone_A")));
}

std::string structure_to_json(const StructureData& s) {
    json j;
    j["ring"] = ring_name(s.ring);
    j["n"] = s.n;
    j["H"] = mat_to_rows(s.h);
    j["D"] = mat_to_rows(s.d);
    j["Q"] = mat_to_rows(s.q);
    return j.dump(2);
}

StructureData structure_from_json(const std::string& text) {
    json j = parse_text(text);
    RingKind kind = ring_field(j);
    std::size_t n = size_field(j);
    Mat h = rows_to_mat(field(j, "H"), kind, n, "H");
    Mat d = rows_to_mat(field(j, "D"), kind, n, "D");
    Mat q = rows_to_mat(field(j, "Q"), kind, n, "Q");
    return checked_structure_data(std::move(h), std::move(d), std::move(q));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::UsageError, "cannot open file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::UsageError, "cannot write file " + path.string());
    out << text;
    if (!out.flush()) fail(Errc::UsageError, "cannot write file " + path.string());
}

Mat load_mat(const std::filesystem::path& path) {
    return mat_from_json(read_file(path));
}

ConeA load_cone(const std::filesystem::path& path) {
    return cone_from_json(read_file(path));
}

StructureData load_structure(const std::filesystem::path& path) {
    return structure_from_json(read_file(path));
}

}  // namespace latmat
