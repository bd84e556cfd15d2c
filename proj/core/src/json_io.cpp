#include "polyspace/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "polyspace/errors.hpp"

namespace polyspace::io {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ValidationError(std::string("invalid JSON for ") + what);
    }
    return j;
}

std::vector<double> number_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw ValidationError(std::string("missing or non-array field \"") + key + "\"");
    }
    std::vector<double> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number()) {
            throw ValidationError(std::string("non-numeric entry in \"") + key + "\"");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ValidationError(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j[key].get<int>();
}

}  // namespace

std::string to_json(const Polygon& p) {
    json j;
    j["edge_lengths"] = p.edge_lengths().values();
    j["ambient_dim"] = p.ambient_dim();
    json verts = json::array();
    for (Eigen::Index c = 0; c < p.vertices().cols(); ++c) {
        json v = json::array();
        for (Eigen::Index r = 0; r < p.vertices().rows(); ++r) {
            v.push_back(p.vertices()(r, c));
        }
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    return j.dump();
}

Polygon polygon_from_json(const std::string& text) {
    json j = parse_or_throw(text, "polygon");
    EdgeLengths ell(number_array(j, "edge_lengths"));
    const int d = int_field(j, "ambient_dim");
    if (d < 2) throw ValidationError("ambient_dim must be at least 2");
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        throw ValidationError("missing or non-array field \"vertices\"");
    }
    const auto& verts = j["vertices"];
    if (verts.size() != ell.count() - 1) {
        throw ValidationError("expected " + std::to_string(ell.count() - 1) +
                              " vertices, got " + std::to_string(verts.size()));
    }
    Eigen::MatrixXd m(d, static_cast<Eigen::Index>(verts.size()));
    for (std::size_t c = 0; c < verts.size(); ++c) {
        const auto& v = verts[c];
        if (!v.is_array() || v.size() != static_cast<std::size_t>(d)) {
            throw ValidationError("vertex " + std::to_string(c + 1) + " must have " +
                                  std::to_string(d) + " coordinates");
        }
        for (std::size_t r = 0; r < v.size(); ++r) {
            if (!v[r].is_number()) throw ValidationError("non-numeric vertex coordinate");
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[r].get<double>();
        }
    }
    return Polygon(std::move(ell), std::move(m));
}

std::string to_json(const quotient::ModuliPoint& mp) {
    json j;
    j["edge_lengths"] = mp.edge_lengths.values();
    j["ambient_dim"] = mp.ambient_dim;
    j["rank"] = mp.rank;
    j["orientation"] = mp.orientation ? json(*mp.orientation) : json(nullptr);
    json rows = json::array();
    for (Eigen::Index r = 0; r < mp.gram.entries.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < mp.gram.entries.cols(); ++c) {
            row.push_back(mp.gram.entries(r, c));
        }
        rows.push_back(std::move(row));
    }
    j["gram"] = std::move(rows);
    return j.dump();
}

quotient::ModuliPoint moduli_point_from_json(const std::string& text) {
    json j = parse_or_throw(text, "moduli point");
    EdgeLengths ell(number_array(j, "edge_lengths"));
    const int d = int_field(j, "ambient_dim");
    if (d < 2) throw ValidationError("ambient_dim must be at least 2");
    const int rank = int_field(j, "rank");
    std::optional<int> orientation;
    if (j.contains("orientation") && !j["orientation"].is_null()) {
        const int s = j["orientation"].get<int>();
        if (s != 1 && s != -1) throw ValidationError("orientation must be 1, -1 or null");
        orientation = s;
    }
    if (orientation.has_value() != (rank == d)) {
        throw ValidationError("orientation must be present exactly when rank == ambient_dim");
    }
    if (!j.contains("gram") || !j["gram"].is_array()) {
        throw ValidationError("missing or non-array field \"gram\"");
    }
    const auto m = ell.count() - 1;
    const auto& rows = j["gram"];
    if (rows.size() != m) throw ValidationError("gram must be (n-1) x (n-1)");
    Eigen::MatrixXd g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t r = 0; r < m; ++r) {
        if (!rows[r].is_array() || rows[r].size() != m) {
            throw ValidationError("gram must be (n-1) x (n-1)");
        }
        for (std::size_t c = 0; c < m; ++c) {
            if (!rows[r][c].is_number()) throw ValidationError("non-numeric gram entry");
            g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rows[r][c].get<double>();
        }
    }
    return quotient::ModuliPoint{std::move(ell), d, GramForm{std::move(g)}, rank, orientation};
}

std::string to_json(const verify::ExperimentReport& report, bool include_elapsed) {
    json j;
    j["name"] = report.name;
    j["ell"] = report.ell.values();
    j["d"] = report.d;
    j["trials"] = report.trials;
    j["failures"] = report.failures;
    json payloads = json::array();
    for (const auto& payload : report.failure_payloads) {
        payloads.push_back(parse_or_throw(payload, "failure payload"));
    }
    j["failure_payloads"] = std::move(payloads);
    j["seed"] = report.seed;
    if (include_elapsed) j["elapsed_ms"] = report.elapsed_ms;
    j["metadata"] = report.metadata;
    j["pass"] = report.passed();
    return j.dump();
}

const char* csv_header() { return "name,ell,d,trials,failures,seed,elapsed_ms,pass"; }

std::string to_csv_row(const verify::ExperimentReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << report.name << ",\"";
    for (std::size_t i = 0; i < report.ell.count(); ++i) {
        if (i > 0) out << ",";
        out << report.ell[i];
    }
    out << "\"," << report.d << "," << report.trials << "," << report.failures << ","
        << report.seed << "," << report.elapsed_ms << "," << (report.passed() ? 1 : 0);
    return out.str();
}

}  // namespace polyspace::io
