#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gmconn/aomoto.hpp"
#include "gmconn/arrangement.hpp"
#include "gmconn/connection.hpp"
#include "gmconn/os_algebra.hpp"
#include "gmconn/serialize.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace gmconn;

namespace {

struct LoadedPair {
    CombinatorialType t;
    CombinatorialType tp;
};

LoadedPair load_pair(const std::string& base, const std::string& degenerate) {
    return {dep_sets(load_arrangement(base)), dep_sets(load_arrangement(degenerate))};
}

std::vector<int> betti_of(const std::string& path) {
    return OSReducer(dep_sets(load_arrangement(path))).betti();
}

std::string dep_json(const std::string& path) {
    CombinatorialType t = dep_sets(load_arrangement(path));
    json j = dep_to_json(t);
    j["betti"] = OSReducer(t).betti();
    return j.dump();
}

std::string omega_json(const std::string& base, const std::string& degenerate) {
    LoadedPair p = load_pair(base, degenerate);
    auto weighted = weighted_relative_dep(p.tp, p.t);
    GradedMap tilde = tilde_omega_pair(p.t.n, p.t.ell, weighted);
    OSReducer red(p.t);
    GradedMap induced = induced_omega(red, tilde);

    json rel = json::array();
    for (const auto& [s, m] : weighted) rel.push_back({{"set", s}, {"multiplicity", m}});
    json j;
    j["relative_dep"] = std::move(rel);
    j["formal"] = graded_map_to_json(tilde);
    j["induced"] = graded_map_to_json(induced);
    return j.dump();
}

std::string gm_json(const std::string& base, const std::string& degenerate,
                    const std::string& weights, int degree) {
    Arrangement arr = load_arrangement(base);
    LoadedPair p = load_pair(base, degenerate);
    std::vector<Q> lam = parse_weights(weights);
    OSReducer red(p.t);
    GradedMap omega = omega_pair(p.tp, p.t);
    int q = degree < 0 ? p.t.ell : degree;
    QMat conn = induced_connection(red, omega, lam, q);
    json j;
    j["degree"] = q;
    j["orientation"] = "rows=domain";
    j["entries"] = qmat_display_json(conn);
    j["nonresonant"] = t_nonresonant(arr, lam).ok;
    return j.dump();
}

std::string verify_json(const std::string& base, const std::string& degenerate) {
    Arrangement arr_prime = load_arrangement(degenerate);
    LoadedPair p = load_pair(base, degenerate);
    OSReducer red(p.t);
    GradedMap tilde = tilde_omega_pair(p.t.n, p.t.ell, weighted_relative_dep(p.tp, p.t));
    InvarianceReport inv = verify_ideal_invariance(red, tilde);
    CochainReport free_chain =
        verify_cochain(tilde, aomoto_boundary(OSReducer(general_position_type(p.t.n, p.t.ell))));
    CoverReport cover = check_cover_necessary(p.tp, p.t, &arr_prime);

    json j;
    j["cover"] = cover_report_to_json(cover);
    j["ideal_invariance"] = inv.pass;
    j["cochain_free"] = free_chain.pass;
    bool quotient_pass = false;
    if (inv.pass) {
        GradedMap induced = induced_omega(red, tilde);
        quotient_pass = verify_cochain(induced, aomoto_boundary(red)).pass;
    }
    j["cochain_quotient"] = quotient_pass;
    j["pass"] = cover.all_pass() && inv.pass && free_chain.pass && quotient_pass;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_gmconn, m) {
    m.doc() = "Exact connection matrices for hyperplane arrangement degenerations";
    m.def("betti", &betti_of, py::arg("arrangement"),
          "Betti numbers of the arrangement's Orlik-Solomon algebra");
    m.def("dep_json", &dep_json, py::arg("arrangement"),
          "Dependent sets, multiplicities, circuits and Betti numbers as JSON");
    m.def("omega_json", &omega_json, py::arg("base"), py::arg("degenerate"),
          "Formal and induced endomorphisms of a degeneration pair as JSON");
    m.def("gm_json", &gm_json, py::arg("base"), py::arg("degenerate"), py::arg("weights"),
          py::arg("degree") = -1, "Connection matrix at rational weights as JSON");
    m.def("verify_json", &verify_json, py::arg("base"), py::arg("degenerate"),
          "Covering conditions and endomorphism certificates as JSON");
}
