#include "knotcolor/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace knotcolor {

using nlohmann::json;

namespace {

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.at(0).size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = mpz_class(rows.at(i).at(j).get<std::string>());
    return m;
}

}  // namespace

std::string Report::to_json() const {
    json j;
    j["input"] = input;
    j["kind"] = kind;
    if (determinant) j["determinant"] = *determinant;
    if (determinant_coloring) j["determinant_coloring"] = *determinant_coloring;
    if (determinant_goeritz) j["determinant_goeritz"] = *determinant_goeritz;
    if (!nullities.empty()) {
        json ns = json::object();
        for (auto [p, k] : nullities) ns[std::to_string(p)] = k;
        j["nullities"] = ns;
    }
    if (coloring_modulus) j["coloring_modulus"] = *coloring_modulus;
    if (coloring_total) j["coloring_total"] = *coloring_total;
    if (coloring_nontrivial) j["coloring_nontrivial"] = *coloring_nontrivial;
    if (!coloring_group.empty()) j["coloring_group"] = coloring_group;
    if (!matrices.empty()) {
        json ms = json::object();
        for (const auto& [name, m] : matrices) ms[name] = matrix_to_json(m);
        j["matrices"] = ms;
    }
    if (!coloring_list.empty()) j["colorings"] = coloring_list;
    return j.dump(2);
}

Report Report::from_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.input = j.at("input").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    if (j.contains("determinant")) r.determinant = j["determinant"].get<std::string>();
    if (j.contains("determinant_coloring"))
        r.determinant_coloring = j["determinant_coloring"].get<std::string>();
    if (j.contains("determinant_goeritz"))
        r.determinant_goeritz = j["determinant_goeritz"].get<std::string>();
    if (j.contains("nullities")) {
        for (auto& [p, k] : j["nullities"].items())
            r.nullities.emplace_back(std::stoull(p), k.get<std::uint64_t>());
        std::sort(r.nullities.begin(), r.nullities.end());
    }
    if (j.contains("coloring_modulus"))
        r.coloring_modulus = j["coloring_modulus"].get<std::uint64_t>();
    if (j.contains("coloring_total")) r.coloring_total = j["coloring_total"].get<std::string>();
    if (j.contains("coloring_nontrivial"))
        r.coloring_nontrivial = j["coloring_nontrivial"].get<std::string>();
    if (j.contains("coloring_group"))
        r.coloring_group = j["coloring_group"].get<std::vector<std::string>>();
    if (j.contains("matrices"))
        for (auto& [name, m] : j["matrices"].items())
            r.matrices.emplace_back(name, matrix_from_json(m));
    if (j.contains("colorings"))
        r.coloring_list = j["colorings"].get<std::vector<std::vector<std::uint64_t>>>();
    return r;
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "input: " << input << " (" << kind << ")\n";
    if (determinant) out << "determinant: " << *determinant << "\n";
    if (determinant_coloring) out << "  via coloring matrix: " << *determinant_coloring << "\n";
    if (determinant_goeritz) out << "  via Goeritz matrix:  " << *determinant_goeritz << "\n";
    if (!coloring_group.empty()) {
        out << "coloring group: ";
        for (std::size_t i = 0; i < coloring_group.size(); ++i)
            out << (i ? " + " : "") << "Z/" << coloring_group[i];
        out << "\n";
    }
    for (auto [p, k] : nullities) out << "nullity mod " << p << ": " << k << "\n";
    if (coloring_modulus) {
        out << "colorings mod " << *coloring_modulus << ": " << *coloring_total << " total";
        if (coloring_nontrivial) out << ", " << *coloring_nontrivial << " nontrivial";
        out << "\n";
    }
    for (const auto& [name, m] : matrices) out << name << ":\n" << m.to_string();
    if (!coloring_list.empty()) {
        out << "coloring list (one row per coloring, strand order):\n";
        for (const auto& row : coloring_list) {
            out << " ";
            for (auto v : row) out << " " << v;
            out << "\n";
        }
    }
    return out.str();
}

bool Report::operator==(const Report& o) const {
    return input == o.input && kind == o.kind && determinant == o.determinant &&
           determinant_coloring == o.determinant_coloring &&
           determinant_goeritz == o.determinant_goeritz && nullities == o.nullities &&
           coloring_modulus == o.coloring_modulus && coloring_total == o.coloring_total &&
           coloring_nontrivial == o.coloring_nontrivial && coloring_group == o.coloring_group &&
           matrices == o.matrices && coloring_list == o.coloring_list;
}

}  // namespace knotcolor
