#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hc2d/eigensolver.hpp"
#include "hc2d/errors.hpp"
#include "hc2d/observables.hpp"
#include "hc2d/oracle.hpp"
#include "hc2d/specfun.hpp"
#include "hc2d/spectrum.hpp"
#include "hc2d/version.hpp"
#include "hc2d/wavefunction.hpp"

#include <sstream>

namespace py = pybind11;
using namespace hc2d;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Relative motion of two hard-core bosons in a 2d harmonic trap";
    m.attr("__version__") = version_string;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ComputeError>(m, "ComputeError", PyExc_RuntimeError);

    m.def("gamma", &specfun::gamma, py::arg("x"));
    m.def("digamma", &specfun::digamma, py::arg("x"));

    py::class_<specfun::EvalResult>(m, "EvalResult")
        .def_readonly("value", &specfun::EvalResult::value)
        .def_readonly("est_abs_error", &specfun::EvalResult::est_abs_error)
        .def("__repr__", [](const specfun::EvalResult& r) {
            std::ostringstream ss;
            ss << "EvalResult(value=" << r.value
               << ", est_abs_error=" << r.est_abs_error << ")";
            return ss.str();
        });

    m.def(
        "kummer_m",
        [](double a, int b, double z) {
            return specfun::kummer_m({a, b, z});
        },
        py::arg("a"), py::arg("b"), py::arg("z"));
    m.def(
        "kummer_u_intb",
        [](double a, int b, double z) {
            return specfun::kummer_u_intb({a, b, z});
        },
        py::arg("a"), py::arg("b"), py::arg("z"));

    py::class_<QuantumLabel>(m, "QuantumLabel")
        .def(py::init<int, int>(), py::arg("l"), py::arg("order"))
        .def_readwrite("l", &QuantumLabel::l)
        .def_readwrite("order", &QuantumLabel::order)
        .def("__eq__", [](const QuantumLabel& a, const QuantumLabel& b) { return a == b; })
        .def("__lt__", [](const QuantumLabel& a, const QuantumLabel& b) { return a < b; })
        .def("__hash__", [](const QuantumLabel& a) { return a.l * 1000003 + a.order; })
        .def("__repr__", [](const QuantumLabel& a) {
            return "QuantumLabel(l=" + std::to_string(a.l)
                   + ", order=" + std::to_string(a.order) + ")";
        });

    py::class_<EigenState>(m, "EigenState")
        .def_readonly("label", &EigenState::label)
        .def_readonly("r0", &EigenState::r0)
        .def_readonly("m", &EigenState::m)
        .def_readonly("energy", &EigenState::energy)
        .def("__repr__", [](const EigenState& s) {
            std::ostringstream ss;
            ss << "EigenState(l=" << s.label.l << ", order=" << s.label.order
               << ", r0=" << s.r0 << ", energy=" << s.energy << ")";
            return ss.str();
        });

    py::class_<eigensolver::SolverOptions>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("m_max", &eigensolver::SolverOptions::m_max)
        .def_readwrite("scan_step", &eigensolver::SolverOptions::scan_step)
        .def_readwrite("m_tol", &eigensolver::SolverOptions::m_tol);

    m.def("boundary_function", &eigensolver::boundary_function, py::arg("l"),
          py::arg("r0"), py::arg("m"));
    m.def("solve_m_values", &eigensolver::solve_m_values, py::arg("l"),
          py::arg("r0"), py::arg("count"),
          py::arg("options") = eigensolver::SolverOptions{});
    m.def("solve_state", &eigensolver::solve_state, py::arg("label"),
          py::arg("r0"), py::arg("options") = eigensolver::SolverOptions{});
    m.def("free_energy", &eigensolver::free_energy, py::arg("label"));

    py::class_<wavefunction::GridConfig>(m, "GridConfig")
        .def(py::init<>())
        .def_readwrite("samples", &wavefunction::GridConfig::samples)
        .def_readwrite("panel_tol", &wavefunction::GridConfig::panel_tol);

    py::class_<wavefunction::RadialProfile>(m, "RadialProfile")
        .def_readonly("state", &wavefunction::RadialProfile::state)
        .def_readonly("r_grid", &wavefunction::RadialProfile::r_grid)
        .def_readonly("R_values", &wavefunction::RadialProfile::R_values)
        .def_readonly("rho_values", &wavefunction::RadialProfile::rho_values)
        .def_readonly("r_max", &wavefunction::RadialProfile::r_max)
        .def_readonly("node_count", &wavefunction::RadialProfile::node_count)
        .def_readonly("nodes", &wavefunction::RadialProfile::nodes)
        .def_readonly("norm_constant", &wavefunction::RadialProfile::norm_constant)
        .def("radial", &wavefunction::RadialProfile::radial, py::arg("r"))
        .def("radial_derivative", &wavefunction::RadialProfile::radial_derivative,
             py::arg("r"));

    m.def("eval_radial_unnormalized", &wavefunction::eval_radial_unnormalized,
          py::arg("state"), py::arg("r"));
    m.def("build_profile", &wavefunction::build_profile, py::arg("state"),
          py::arg("config") = wavefunction::GridConfig{});
    m.def("density_overlap", &wavefunction::density_overlap, py::arg("p"),
          py::arg("q"));

    py::class_<observables::EnergySplit>(m, "EnergySplit")
        .def_readonly("kinetic", &observables::EnergySplit::kinetic)
        .def_readonly("potential", &observables::EnergySplit::potential)
        .def_readonly("total", &observables::EnergySplit::total);

    py::enum_<observables::QfiKind>(m, "QfiKind")
        .value("density", observables::QfiKind::density)
        .value("parameter", observables::QfiKind::parameter);

    py::class_<observables::QfiValue>(m, "QfiValue")
        .def_readonly("kind", &observables::QfiValue::kind)
        .def_readonly("value", &observables::QfiValue::value)
        .def_readonly("step_used", &observables::QfiValue::step_used);

    m.def("energy_split", &observables::energy_split, py::arg("profile"));
    m.def("fisher_density", &observables::fisher_density, py::arg("profile"));
    m.def("fisher_parameter", &observables::fisher_parameter, py::arg("label"),
          py::arg("r0"), py::arg("step"),
          py::arg("options") = eigensolver::SolverOptions{});
    m.def("fisher_parameter_refined", &observables::fisher_parameter_refined,
          py::arg("label"), py::arg("r0"),
          py::arg("options") = eigensolver::SolverOptions{});
    m.def("default_parameter_step", &observables::default_parameter_step,
          py::arg("r0"));

    py::class_<spectrum::SpectrumTable>(m, "SpectrumTable")
        .def_readonly("r0_grid", &spectrum::SpectrumTable::r0_grid)
        .def_readonly("levels", &spectrum::SpectrumTable::levels)
        .def_readonly("energies", &spectrum::SpectrumTable::energies)
        .def_readonly("m_values", &spectrum::SpectrumTable::m_values);

    py::class_<spectrum::CrossingEvent>(m, "CrossingEvent")
        .def_readonly("label_a", &spectrum::CrossingEvent::label_a)
        .def_readonly("label_b", &spectrum::CrossingEvent::label_b)
        .def_readonly("r0_star", &spectrum::CrossingEvent::r0_star)
        .def_readonly("energy_star", &spectrum::CrossingEvent::energy_star)
        .def_readonly("bracket_width", &spectrum::CrossingEvent::bracket_width)
        .def("__repr__", [](const spectrum::CrossingEvent& e) {
            std::ostringstream ss;
            ss << "CrossingEvent((" << e.label_a.l << "," << e.label_a.order
               << ") x (" << e.label_b.l << "," << e.label_b.order
               << ") at r0=" << e.r0_star << ")";
            return ss.str();
        });

    py::class_<spectrum::RankedQfiPoint>(m, "RankedQfiPoint")
        .def_readonly("r0", &spectrum::RankedQfiPoint::r0)
        .def_readonly("label", &spectrum::RankedQfiPoint::label)
        .def_readonly("value", &spectrum::RankedQfiPoint::value);

    m.def("default_labels", &spectrum::default_labels, py::arg("l_max"),
          py::arg("orders"));
    m.def("linspace_grid", &spectrum::linspace_grid, py::arg("lo"), py::arg("hi"),
          py::arg("steps"));
    m.def("scan", &spectrum::scan, py::arg("labels"), py::arg("r0_grid"),
          py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("detect_crossings", &spectrum::detect_crossings, py::arg("table"),
          py::call_guard<py::gil_scoped_release>());
    m.def("ordered_level_qfi", &spectrum::ordered_level_qfi, py::arg("n"),
          py::arg("r0_grid"), py::arg("labels"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());

    py::class_<oracle::OracleConfig>(m, "OracleConfig")
        .def(py::init<>())
        .def_readwrite("h", &oracle::OracleConfig::h)
        .def_readwrite("r_max", &oracle::OracleConfig::r_max)
        .def_readwrite("n_eigen", &oracle::OracleConfig::n_eigen)
        .def_readwrite("tolerance", &oracle::OracleConfig::tolerance);

    py::class_<oracle::FdEigenvalue>(m, "FdEigenvalue")
        .def_readonly("energy", &oracle::FdEigenvalue::energy)
        .def_readonly("est_abs_error", &oracle::FdEigenvalue::est_abs_error);

    m.def("fd_eigenvalues", &oracle::fd_eigenvalues, py::arg("l"), py::arg("r0"),
          py::arg("config") = oracle::OracleConfig{});
}
