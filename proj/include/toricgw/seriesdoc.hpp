#pragma once

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "novikov.hpp"
#include "toric.hpp"
#include "xiseries.hpp"

namespace toricgw {

// Machine-readable form of a computed series: a header fixing the root order,
// variables and truncation, and one row per monomial with an exact coefficient.
struct SeriesDocument {
    int root_order = 1;
    std::vector<std::string> variables;
    int truncation = 0;

    struct Row {
        std::vector<int> exponents;
        int lambda = 0;
        std::string coefficient;
        std::string xi;  // optional genus-graded expansion

        bool operator==(const Row&) const = default;
    };
    std::vector<Row> rows;

    bool operator==(const SeriesDocument&) const = default;
};

inline SeriesDocument make_document(const ClassSeries& series, int truncation, int xi_order = -1) {
    SeriesDocument doc;
    doc.variables = series.variables;
    doc.truncation = truncation;
    int m = 1;
    for (auto& [exps, c] : series.terms) m = std::lcm(m, c.root_order());
    doc.root_order = m;
    for (auto& [exps, c] : series.terms) {
        SeriesDocument::Row row;
        row.exponents = exps;
        row.coefficient = c.rescaled(m).str();
        if (xi_order >= 0) row.xi = lambda_expand(c, xi_order).str();
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

inline SeriesDocument make_document(const NovikovSeries& series, int xi_order = -1) {
    SeriesDocument doc;
    doc.variables = series.variables();
    doc.truncation = series.truncation();
    int m = 1;
    for (auto& [key, c] : series.terms()) m = std::lcm(m, c.root_order());
    doc.root_order = m;
    for (auto& [key, c] : series.terms()) {
        SeriesDocument::Row row;
        row.exponents = key.exps;
        row.lambda = key.lambda;
        row.coefficient = c.rescaled(m).str();
        if (xi_order >= 0) row.xi = lambda_expand(c, xi_order).str();
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

inline nlohmann::ordered_json document_to_json(const SeriesDocument& doc) {
    nlohmann::ordered_json j;
    j["root_order"] = doc.root_order;
    j["variables"] = doc.variables;
    j["truncation"] = doc.truncation;
    j["terms"] = nlohmann::ordered_json::array();
    for (auto& row : doc.rows) {
        nlohmann::ordered_json r;
        r["exponents"] = row.exponents;
        r["lambda"] = row.lambda;
        r["coefficient"] = row.coefficient;
        if (!row.xi.empty()) r["xi"] = row.xi;
        j["terms"].push_back(std::move(r));
    }
    return j;
}

inline SeriesDocument document_from_json(const nlohmann::json& j) {
    SeriesDocument doc;
    doc.root_order = j.at("root_order").get<int>();
    doc.variables = j.at("variables").get<std::vector<std::string>>();
    doc.truncation = j.at("truncation").get<int>();
    for (auto& r : j.at("terms")) {
        SeriesDocument::Row row;
        row.exponents = r.at("exponents").get<std::vector<int>>();
        row.lambda = r.at("lambda").get<int>();
        row.coefficient = r.at("coefficient").get<std::string>();
        if (r.contains("xi")) row.xi = r.at("xi").get<std::string>();
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

inline std::string document_to_csv(const SeriesDocument& doc) {
    std::ostringstream os;
    for (auto& v : doc.variables) os << v << ",";
    os << "lambda,coefficient\n";
    for (auto& row : doc.rows) {
        for (int e : row.exponents) os << e << ",";
        os << row.lambda << ",\"" << row.coefficient << "\"\n";
    }
    return os.str();
}

inline std::string document_to_text(const SeriesDocument& doc) {
    std::ostringstream os;
    os << "root_order " << doc.root_order << ", truncation " << doc.truncation << "\n";
    for (auto& row : doc.rows) {
        bool any = false;
        for (size_t i = 0; i < doc.variables.size(); ++i) {
            if (row.exponents[i] == 0) continue;
            os << (any ? "*" : "") << doc.variables[i];
            if (row.exponents[i] != 1) os << "^" << row.exponents[i];
            any = true;
        }
        if (row.lambda != 0) {
            os << (any ? "*" : "") << "L^" << row.lambda;
            any = true;
        }
        if (!any) os << "1";
        os << ": " << row.coefficient;
        if (!row.xi.empty()) os << "   [" << row.xi << "]";
        os << "\n";
    }
    return os.str();
}

// Reconstruct the series a document describes (used by the round-trip checks).
inline ClassSeries document_to_class_series(const SeriesDocument& doc) {
    ClassSeries s;
    s.variables = doc.variables;
    for (auto& row : doc.rows) {
        if (row.lambda != 0) throw std::domain_error("document: unexpected genus grading");
        s.add_term(row.exponents, QCoefficient::parse(row.coefficient, doc.root_order));
    }
    return s;
}

inline ToricSurface surface_from_json(const nlohmann::json& j) {
    ToricSurface surf;
    surf.name = j.value("name", std::string("custom"));
    if (!j.contains("k")) throw std::domain_error("surface file: missing field 'k'");
    if (!j.contains("s")) throw std::domain_error("surface file: missing field 's'");
    if (!j.contains("variables")) throw std::domain_error("surface file: missing field 'variables'");
    if (!j.contains("class_map")) throw std::domain_error("surface file: missing field 'class_map'");
    surf.k = j.at("k").get<int>();
    surf.s = j.at("s").get<std::vector<int>>();
    surf.variables = j.at("variables").get<std::vector<std::string>>();
    surf.class_map = j.at("class_map").get<std::vector<std::vector<int>>>();
    if (j.contains("tau_seed")) {
        auto seed = j.at("tau_seed").get<std::vector<long>>();
        if (seed.size() != 4) throw std::domain_error("surface file: tau_seed needs 4 entries");
        std::copy(seed.begin(), seed.end(), surf.tau_seed.begin());
    }
    surf.validate();
    return surf;
}

inline ToricSurface load_surface(const std::string& name_or_path) {
    for (auto& name : preset_names())
        if (name == name_or_path) return preset(name);
    std::ifstream in(name_or_path);
    if (!in) throw std::domain_error("unknown preset and unreadable file: " + name_or_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("surface file: invalid JSON: " + std::string(e.what()));
    }
    return surface_from_json(j);
}

}  // namespace toricgw
