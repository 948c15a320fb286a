#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gmconn/aomoto.hpp"
#include "gmconn/arrangement.hpp"

namespace gmconn {

using nlohmann::json;

/// Arrangement files list the finite coefficient rows only; the infinity row
/// is implicit.  Entries are rational strings ("-2/3") or plain integers.
json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);
Arrangement load_arrangement(const std::string& path);
void save_arrangement(const Arrangement& a, const std::string& path);

/// A single matrix with polynomial entries and labeled bases.  Internally
/// columns index the domain; files carry an explicit "orientation" field
/// ("rows=domain" or "columns=domain") and the loader transposes as needed.
struct MatrixFixture {
    std::string name;
    int degree = 0;
    std::vector<std::string> domain;
    std::vector<std::string> codomain;
    std::string notes;
    PolyMat mat;
};

json matrix_fixture_to_json(const MatrixFixture& f, const std::string& orientation = "rows=domain");
MatrixFixture matrix_fixture_from_json(const json& j);
MatrixFixture load_matrix_fixture(const std::string& path);
void save_matrix_fixture(const MatrixFixture& f, const std::string& path,
                         const std::string& orientation = "rows=domain");

json graded_map_to_json(const GradedMap& m, const std::string& orientation = "rows=domain");
GradedMap graded_map_from_json(const json& j);

/// Entry-by-entry differences, empty when equal.
std::vector<std::string> diff_poly_matrices(const PolyMat& got, const PolyMat& expected);

/// Display helpers (rows=domain orientation, entries as strings).
json polymat_display_json(const PolyMat& m);
json qmat_display_json(const QMat& m);

json dep_to_json(const CombinatorialType& t);
json cover_report_to_json(const CoverReport& r);

/// Comma-separated rationals, e.g. "1/2,-1/3,2".
std::vector<Q> parse_weights(const std::string& csv);

json load_json_file(const std::string& path);
void save_json_file(const json& j, const std::string& path);

}  // namespace gmconn
