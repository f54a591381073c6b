#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "boppana/alpha.hpp"
#include "boppana/io.hpp"
#include "boppana/scalar.hpp"
#include "boppana/setfamily.hpp"
#include "boppana/verifier.hpp"

namespace py = pybind11;
using namespace boppana;

namespace {

std::pair<double, double> bounds(const Interval& iv) { return {iv.lo(), iv.hi()}; }

// Elements are 1-based, as in the family text format.
SetFamily family_from_lists(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<Mask> members;
    members.reserve(sets.size());
    for (const auto& set : sets) {
        Mask m = 0;
        for (int e : set) {
            if (e < 1 || e > n) {
                throw DomainError("element " + std::to_string(e) + " is outside [1," + std::to_string(n) + "]");
            }
            m |= Mask{1} << (e - 1);
        }
        members.push_back(m);
    }
    return SetFamily(n, std::move(members));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Compiled core of the boppana package; use the wrappers in boppana instead.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);

    m.def("entropy", [](double x) { return entropy(UnitPoint(x)); }, py::arg("x"));
    m.def("q", [](double k, double x) { return q(Exponent(k), UnitPoint(x)); }, py::arg("k"), py::arg("x"));
    m.def("u_fn", &u_fn, py::arg("x"));
    m.def("u_residual", [](double k, double x) { return u_residual(Exponent(k), x); }, py::arg("k"), py::arg("x"));
    m.def("log_mean", &log_mean, py::arg("a"), py::arg("b"));
    m.def(
        "defect", [](double k, double alpha, double x) { return defect(Exponent(k), alpha, UnitPoint(x)); },
        py::arg("k"), py::arg("alpha"), py::arg("x"));

    m.def(
        "solve_alpha_json", [](double k, double tol) { return to_json(solve_alpha(Exponent(k), tol)).dump(); },
        py::arg("k"), py::arg("tol"));
    m.def(
        "equality_point", [](double k, double tol) { return bounds(equality_point(Exponent(k), tol)); },
        py::arg("k"), py::arg("tol"));
    m.def(
        "frequency_threshold", [](double k, double tol) { return bounds(frequency_threshold(Exponent(k), tol)); },
        py::arg("k"), py::arg("tol"));

    m.def(
        "certify_json",
        [](double k, double exclusion_radius, int max_depth, double tol, int workers) {
            const CertifyOptions options{
                .exclusion_radius = exclusion_radius, .max_depth = max_depth, .tol = tol, .workers = workers};
            py::gil_scoped_release release;
            return to_json(certify(Exponent(k), options)).dump();
        },
        py::arg("k"), py::arg("exclusion_radius"), py::arg("max_depth"), py::arg("tol"), py::arg("workers"));
    m.def(
        "scan",
        [](double k, int grid) {
            std::vector<std::tuple<double, double, double, double>> rows;
            for (const ScanRow& r : scan(Exponent(k), grid)) {
                rows.emplace_back(r.x, r.q, r.defect, r.u_residual);
            }
            return rows;
        },
        py::arg("k"), py::arg("grid"));

    m.def(
        "closure_stats_json",
        [](int n, const std::vector<std::vector<int>>& sets, int k) {
            const SetFamily f = family_from_lists(n, sets);
            return to_json(closure_stats(f, k, solve_alpha(Exponent(k)))).dump();
        },
        py::arg("n"), py::arg("sets"), py::arg("k"));
    m.def(
        "is_union_closed",
        [](int n, const std::vector<std::vector<int>>& sets) { return is_union_closed(family_from_lists(n, sets)); },
        py::arg("n"), py::arg("sets"));
    m.def(
        "exhaustive_check_json",
        [](int n, int k, int workers) {
            py::gil_scoped_release release;
            return to_json(exhaustive_check(n, k, workers)).dump();
        },
        py::arg("n"), py::arg("k"), py::arg("workers"));
    m.def(
        "random_probe_json",
        [](int n, int k, std::uint64_t trials, std::uint64_t seed, int workers) {
            py::gil_scoped_release release;
            return to_json(random_probe(n, k, trials, seed, workers)).dump();
        },
        py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("workers"));
}
