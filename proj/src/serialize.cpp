#include "gmconn/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gmconn {

namespace {

Q entry_to_rational(const json& e) {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return Q(static_cast<long>(e.get<long long>()));
    throw std::invalid_argument("matrix entries must be rational strings or integers");
}

PolyQ entry_to_poly(const json& e) {
    if (e.is_string()) return PolyQ::parse(e.get<std::string>());
    if (e.is_number_integer()) return PolyQ(static_cast<int>(e.get<long long>()));
    throw std::invalid_argument("matrix entries must be polynomial strings or integers");
}

PolyMat entries_to_polymat(const json& entries) {
    if (!entries.is_array()) throw std::invalid_argument("\"entries\" must be an array of rows");
    const int rows = static_cast<int>(entries.size());
    int cols = 0;
    if (rows > 0) {
        if (!entries[0].is_array()) throw std::invalid_argument("\"entries\" must be an array of rows");
        cols = static_cast<int>(entries[0].size());
    }
    PolyMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(entries[i].size()) != cols)
            throw std::invalid_argument("ragged matrix rows in \"entries\"");
        for (int j = 0; j < cols; ++j) m(i, j) = entry_to_poly(entries[i][j]);
    }
    return m;
}

json polymat_to_entries(const PolyMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMat oriented_to_internal(const PolyMat& as_written, const std::string& orientation) {
    if (orientation == "rows=domain") return as_written.transposed();
    if (orientation == "columns=domain") return as_written;
    throw std::invalid_argument("unknown orientation \"" + orientation +
                                "\" (expected rows=domain or columns=domain)");
}

PolyMat internal_to_oriented(const PolyMat& internal, const std::string& orientation) {
    return oriented_to_internal(internal, orientation);  // transposition is an involution
}

}  // namespace

json arrangement_to_json(const Arrangement& a) {
    json j;
    j["format"] = "gmconn-arrangement";
    j["ell"] = a.ell;
    j["n"] = a.n;
    json rows = json::array();
    for (int i = 1; i <= a.n; ++i) {
        json row = json::array();
        for (const Q& x : a.row(i)) row.push_back(rat_to_string(x));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ell") || !j.contains("rows"))
        throw std::invalid_argument("arrangement file needs \"ell\" and \"rows\"");
    if (j.contains("format") && j["format"] != "gmconn-arrangement")
        throw std::invalid_argument("not an arrangement file (format mismatch)");
    const int ell = j["ell"].get<int>();
    std::vector<std::vector<Q>> rows;
    for (const auto& r : j["rows"]) {
        std::vector<Q> row;
        for (const auto& e : r) row.push_back(entry_to_rational(e));
        rows.push_back(std::move(row));
    }
    if (j.contains("n") && j["n"].get<int>() != static_cast<int>(rows.size()))
        throw std::invalid_argument("\"n\" disagrees with the number of rows");
    return make_arrangement(ell, rows);
}

Arrangement load_arrangement(const std::string& path) { return arrangement_from_json(load_json_file(path)); }

void save_arrangement(const Arrangement& a, const std::string& path) {
    save_json_file(arrangement_to_json(a), path);
}

json matrix_fixture_to_json(const MatrixFixture& f, const std::string& orientation) {
    json j;
    j["format"] = "gmconn-matrix";
    j["name"] = f.name;
    j["degree"] = f.degree;
    j["orientation"] = orientation;
    j["domain"] = f.domain;
    j["codomain"] = f.codomain;
    if (!f.notes.empty()) j["notes"] = f.notes;
    j["entries"] = polymat_to_entries(internal_to_oriented(f.mat, orientation));
    return j;
}

MatrixFixture matrix_fixture_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries") || !j.contains("orientation"))
        throw std::invalid_argument("matrix file needs \"entries\" and \"orientation\"");
    if (j.contains("format") && j["format"] != "gmconn-matrix")
        throw std::invalid_argument("not a matrix file (format mismatch)");
    MatrixFixture f;
    f.name = j.value("name", "");
    f.degree = j.value("degree", 0);
    f.notes = j.value("notes", "");
    if (j.contains("domain")) f.domain = j["domain"].get<std::vector<std::string>>();
    if (j.contains("codomain")) f.codomain = j["codomain"].get<std::vector<std::string>>();
    f.mat = oriented_to_internal(entries_to_polymat(j["entries"]), j["orientation"].get<std::string>());
    return f;
}

MatrixFixture load_matrix_fixture(const std::string& path) {
    return matrix_fixture_from_json(load_json_file(path));
}

void save_matrix_fixture(const MatrixFixture& f, const std::string& path, const std::string& orientation) {
    save_json_file(matrix_fixture_to_json(f, orientation), path);
}

json graded_map_to_json(const GradedMap& m, const std::string& orientation) {
    json j;
    j["format"] = "gmconn-graded-map";
    j["n"] = m.n;
    j["ell"] = m.ell;
    j["shift"] = m.shift;
    j["orientation"] = orientation;
    json degrees = json::object();
    for (const auto& [q, mat] : m.mats)
        degrees[std::to_string(q)] = polymat_to_entries(internal_to_oriented(mat, orientation));
    j["degrees"] = std::move(degrees);
    return j;
}

GradedMap graded_map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degrees") || !j.contains("orientation"))
        throw std::invalid_argument("graded map file needs \"degrees\" and \"orientation\"");
    if (j.contains("format") && j["format"] != "gmconn-graded-map")
        throw std::invalid_argument("not a graded map file (format mismatch)");
    GradedMap m;
    m.n = j.value("n", 0);
    m.ell = j.value("ell", 0);
    m.shift = j.value("shift", 0);
    const std::string orientation = j["orientation"].get<std::string>();
    for (const auto& [key, entries] : j["degrees"].items())
        m.mats[std::stoi(key)] = oriented_to_internal(entries_to_polymat(entries), orientation);
    return m;
}

std::vector<std::string> diff_poly_matrices(const PolyMat& got, const PolyMat& expected) {
    std::vector<std::string> diffs;
    if (got.rows() != expected.rows() || got.cols() != expected.cols()) {
        std::ostringstream os;
        os << "shape " << got.rows() << "x" << got.cols() << " differs from expected " << expected.rows()
           << "x" << expected.cols();
        diffs.push_back(os.str());
        return diffs;
    }
    for (int i = 0; i < got.rows(); ++i)
        for (int j = 0; j < got.cols(); ++j)
            if (!(got(i, j) == expected(i, j))) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << "): got " << got(i, j).to_string() << ", expected "
                   << expected(i, j).to_string();
                diffs.push_back(os.str());
            }
    return diffs;
}

json polymat_display_json(const PolyMat& m) { return polymat_to_entries(m.transposed()); }

json qmat_display_json(const QMat& m) {
    const QMat t = m.transposed();
    json rows = json::array();
    for (int i = 0; i < t.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < t.cols(); ++j) row.push_back(rat_to_string(t(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json dep_to_json(const CombinatorialType& t) {
    json j;
    j["n"] = t.n;
    j["ell"] = t.ell;
    json dep = json::object();
    for (const auto& [q, sets] : t.dep) {
        json list = json::array();
        for (const Tuple& s : sets) list.push_back(s);
        dep[std::to_string(q)] = std::move(list);
    }
    j["dep"] = std::move(dep);
    json mult = json::object();
    for (const auto& [s, m] : t.mult) {
        std::string key;
        for (size_t i = 0; i < s.size(); ++i) key += (i ? "," : "") + std::to_string(s[i]);
        mult[key] = m;
    }
    j["multiplicity"] = std::move(mult);
    json circuits = json::array();
    for (const Tuple& c : t.circuits()) circuits.push_back(c);
    j["circuits"] = std::move(circuits);
    return j;
}

json cover_report_to_json(const CoverReport& r) {
    json conditions = json::array();
    for (const auto& c : r.conditions) {
        json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        if (!c.details.empty()) jc["details"] = c.details;
        conditions.push_back(std::move(jc));
    }
    json j;
    j["conditions"] = std::move(conditions);
    j["all_pass"] = r.all_pass();
    return j;
}

std::vector<Q> parse_weights(const std::string& csv) {
    std::vector<Q> out;
    std::string token;
    std::istringstream is(csv);
    while (std::getline(is, token, ',')) {
        // Trim surrounding spaces.
        const auto a = token.find_first_not_of(" \t");
        const auto b = token.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty weight in list");
        out.push_back(parse_rational(token.substr(a, b - a + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty weight list");
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace gmconn
