#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "wigner/kinematics.hpp"
#include "wigner/measures.hpp"
#include "wigner/selftest.hpp"
#include "wigner/sweep.hpp"

namespace py = pybind11;

namespace {

wigner::SweepConfig make_config(std::size_t grid_n, std::pair<double, double> v1_range,
                                std::pair<double, double> v2_range, int precision) {
    wigner::SweepConfig cfg;
    cfg.grid_n = grid_n;
    cfg.v1_min = v1_range.first;
    cfg.v1_max = v1_range.second;
    cfg.v2_min = v2_range.first;
    cfg.v2_max = v2_range.second;
    cfg.precision = precision;
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Velocity-mode entanglement of a boosted spin-1/2 particle";

    py::class_<wigner::WignerAngle>(m, "WignerAngle")
        .def_readonly("gamma1", &wigner::WignerAngle::gamma1)
        .def_readonly("gamma2", &wigner::WignerAngle::gamma2)
        .def_readonly("sin_omega", &wigner::WignerAngle::sin_omega)
        .def_readonly("cos_two_omega", &wigner::WignerAngle::cos_two_omega)
        .def_property_readonly("omega", &wigner::WignerAngle::omega)
        .def_property_readonly("cos_omega", &wigner::WignerAngle::cos_omega)
        .def_property_readonly("sin_two_omega", &wigner::WignerAngle::sin_two_omega)
        .def("__repr__", [](const wigner::WignerAngle& w) {
            return "WignerAngle(sin_omega=" + wigner::format_real(w.sin_omega, 12) +
                   ", cos_two_omega=" + wigner::format_real(w.cos_two_omega, 12) + ")";
        });

    py::class_<wigner::AnalysisRecord>(m, "AnalysisRecord")
        .def_readonly("v1", &wigner::AnalysisRecord::v1)
        .def_readonly("v2", &wigner::AnalysisRecord::v2)
        .def_readonly("omega", &wigner::AnalysisRecord::omega)
        .def_readonly("cos_two_omega", &wigner::AnalysisRecord::cos_two_omega)
        .def_readonly("eig_low", &wigner::AnalysisRecord::eig_low)
        .def_readonly("eig_high", &wigner::AnalysisRecord::eig_high)
        .def_readonly("entropy", &wigner::AnalysisRecord::entropy)
        .def_readonly("entanglement", &wigner::AnalysisRecord::entanglement)
        .def_readonly("bell", &wigner::AnalysisRecord::bell)
        .def_readonly("concurrence", &wigner::AnalysisRecord::concurrence)
        .def("as_dict",
             [](const wigner::AnalysisRecord& r) {
                 py::dict d;
                 d["v1"] = r.v1;
                 d["v2"] = r.v2;
                 d["omega"] = r.omega;
                 d["cos2w"] = r.cos_two_omega;
                 d["S"] = r.entropy;
                 d["E"] = r.entanglement;
                 d["B"] = r.bell;
                 d["C"] = r.concurrence;
                 return d;
             })
        .def("__repr__", [](const wigner::AnalysisRecord& r) {
            return "AnalysisRecord(v1=" + wigner::format_real(r.v1, 6) +
                   ", v2=" + wigner::format_real(r.v2, 6) +
                   ", E=" + wigner::format_real(r.entanglement, 6) +
                   ", B=" + wigner::format_real(r.bell, 6) + ")";
        });

    py::class_<wigner::SuiteResult>(m, "SuiteResult")
        .def_readonly("name", &wigner::SuiteResult::name)
        .def_readonly("max_error", &wigner::SuiteResult::max_error)
        .def_readonly("tolerance", &wigner::SuiteResult::tolerance)
        .def_readonly("worst_case", &wigner::SuiteResult::worst_case)
        .def_readonly("passed", &wigner::SuiteResult::passed)
        .def("__repr__", [](const wigner::SuiteResult& r) {
            return "SuiteResult(name='" + r.name +
                   "', passed=" + (r.passed ? "True" : "False") + ")";
        });

    m.def(
        "lorentz_gamma",
        [](double beta) { return wigner::lorentz_gamma(wigner::Velocity(beta)); },
        py::arg("beta"), "Lorentz factor; +inf at beta = 1.");

    m.def(
        "rapidity", [](double beta) { return wigner::rapidity(wigner::Velocity(beta)); },
        py::arg("beta"), "atanh(beta); raises ValueError at beta = 1.");

    m.def(
        "wigner_angle",
        [](double v1, double v2) {
            return wigner::wigner_angle(wigner::Velocity(v1), wigner::Velocity(v2));
        },
        py::arg("v1"), py::arg("v2"),
        "Spin rotation seen by an observer moving perpendicular to the particle.");

    m.def(
        "analyze",
        [](double v1, double v2) {
            return wigner::analyze(wigner::Velocity(v1), wigner::Velocity(v2));
        },
        py::arg("v1"), py::arg("v2"),
        "Angle, coherence, entropies, CHSH value and concurrence at one point.");

    m.def(
        "cnot_limit_fidelity",
        [](double v1, double v2) {
            return wigner::cnot_limit_fidelity(wigner::Velocity(v1), wigner::Velocity(v2));
        },
        py::arg("v1"), py::arg("v2"),
        "Squared overlap of the boosted state with the light-speed limit state.");

    m.def(
        "run_sweep",
        [](std::size_t grid_n, std::pair<double, double> v1_range,
           std::pair<double, double> v2_range, unsigned threads) {
            return wigner::run_sweep(make_config(grid_n, v1_range, v2_range, 12), threads);
        },
        py::arg("grid_n") = 101, py::arg("v1_range") = std::pair<double, double>(0.0, 1.0),
        py::arg("v2_range") = std::pair<double, double>(0.0, 1.0), py::arg("threads") = 0,
        "Row-major grid of AnalysisRecord, v1 on the outer axis.");

    m.def(
        "sweep_csv",
        [](std::size_t grid_n, std::pair<double, double> v1_range,
           std::pair<double, double> v2_range, int precision) {
            const wigner::SweepConfig cfg =
                make_config(grid_n, v1_range, v2_range, precision);
            return wigner::render_csv(wigner::run_sweep(cfg), cfg.precision);
        },
        py::arg("grid_n") = 101, py::arg("v1_range") = std::pair<double, double>(0.0, 1.0),
        py::arg("v2_range") = std::pair<double, double>(0.0, 1.0), py::arg("precision") = 12,
        "The grid rendered as CSV (header v1,v2,omega,cos2w,S,E,B,C).");

    m.def("selftest", &wigner::run_selftest,
          "Run every invariant suite; returns a list of SuiteResult.");
}
