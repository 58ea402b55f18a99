#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slme/atom.hpp"
#include "slme/bath.hpp"
#include "slme/control.hpp"
#include "slme/density.hpp"
#include "slme/dynamics.hpp"
#include "slme/form_factor.hpp"
#include "slme/liouvillian.hpp"
#include "slme/steady_state.hpp"

namespace py = pybind11;
using namespace slme;

namespace {

Atom make_atom(const std::vector<double>& energies,
               const std::vector<std::tuple<int, int, Complex>>& dipoles) {
  std::vector<Atom::DipoleEntry> entries;
  entries.reserve(dipoles.size());
  for (const auto& [u, l, d] : dipoles) entries.push_back(Atom::DipoleEntry{u, l, d});
  return Atom(energies, entries);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stochastic-limit master equations for laser-driven atoms: bath "
            "coefficients, Liouvillian dynamics, stationary states, dark-state design.";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<DegenerateKernelError>(m, "DegenerateKernelError", PyExc_RuntimeError);

  py::class_<Window>(m, "Window")
      .def_static("always", &Window::always)
      .def_static("interval", &Window::interval, py::arg("start"), py::arg("end"))
      .def("contains", &Window::contains, py::arg("t"))
      .def_readonly("start", &Window::start)
      .def_readonly("end", &Window::end)
      .def_readonly("always_on", &Window::always_on);

  py::class_<Transition>(m, "Transition")
      .def_readonly("upper", &Transition::upper)
      .def_readonly("lower", &Transition::lower)
      .def_readonly("amplitude", &Transition::amplitude)
      .def_readonly("omega", &Transition::omega);

  py::class_<Atom>(m, "Atom")
      .def(py::init(&make_atom), py::arg("energies"), py::arg("dipoles"),
           "dipoles: list of (upper, lower, amplitude) with e_upper > e_lower")
      .def_property_readonly("dim", &Atom::dim)
      .def_property_readonly("energies", &Atom::energies)
      .def("dipole", &Atom::dipole, py::arg("upper"), py::arg("lower"))
      .def("hamiltonian", &Atom::hamiltonian)
      .def("lowering", &Atom::lowering);

  py::class_<TransitionMode>(m, "TransitionMode")
      .def_readonly("omega", &TransitionMode::omega)
      .def_readonly("op", &TransitionMode::op)
      .def_readonly("pairs", &TransitionMode::pairs);

  py::class_<TransitionSet>(m, "TransitionSet")
      .def_property_readonly("dim", &TransitionSet::dim)
      .def("__len__", &TransitionSet::size)
      .def_property_readonly("frequencies", &TransitionSet::frequencies)
      .def_property_readonly("modes", &TransitionSet::modes)
      .def("index_of", &TransitionSet::index_of, py::arg("omega"),
           py::arg("tol") = kDefaultMergeTol)
      .def("total_lowering", &TransitionSet::total_lowering);

  m.def("bohr_frequencies", &bohr_frequencies, py::arg("atom"),
        py::arg("merge_tol") = kDefaultMergeTol);
  m.def("transition_operators", &transition_operators, py::arg("atom"),
        py::arg("merge_tol") = kDefaultMergeTol);

  py::class_<FormFactor> ff(m, "FormFactor");
  ff.def_static("gaussian", &FormFactor::gaussian, py::arg("amplitude"), py::arg("width"),
                py::arg("cutoff"))
      .def_static("lorentzian", &FormFactor::lorentzian, py::arg("amplitude"), py::arg("width"),
                  py::arg("cutoff"))
      .def_static("table", &FormFactor::table, py::arg("k"), py::arg("value"),
                  py::arg("cutoff") = 0.0)
      .def("__call__", &FormFactor::operator(), py::arg("k"))
      .def_property_readonly("cutoff", &FormFactor::cutoff)
      .def("scaled", &FormFactor::scaled, py::arg("s"));

  py::class_<QuadratureSettings>(m, "QuadratureSettings")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureSettings::rel_tol)
      .def_readwrite("abs_tol", &QuadratureSettings::abs_tol)
      .def_readwrite("initial_cells", &QuadratureSettings::initial_cells)
      .def_readwrite("max_doublings", &QuadratureSettings::max_doublings);

  py::class_<Susceptibility>(m, "Susceptibility")
      .def_readonly("gamma", &Susceptibility::gamma)
      .def_readonly("shell_outside", &Susceptibility::shell_outside)
      .def_readonly("im_error", &Susceptibility::im_error);

  m.def("susceptibility", &susceptibility, py::arg("g"), py::arg("omega"),
        py::arg("quad") = QuadratureSettings{});
  m.def("rabi_coefficient", &rabi_coefficient, py::arg("g"), py::arg("f"), py::arg("omega_l"));

  py::class_<LaserSpec>(m, "LaserSpec")
      .def(py::init<>())
      .def_readwrite("omega", &LaserSpec::omega)
      .def_readwrite("target", &LaserSpec::target)
      .def_readwrite("intensity", &LaserSpec::intensity)
      .def_readwrite("rabi_override", &LaserSpec::rabi_override)
      .def_readwrite("window", &LaserSpec::window);

  py::class_<Drive>(m, "Drive")
      .def_readonly("c", &Drive::c)
      .def_readonly("window", &Drive::window);

  py::class_<BathCoefficients>(m, "BathCoefficients")
      .def_static("direct", &BathCoefficients::direct, py::arg("transitions"), py::arg("gamma"))
      .def_readwrite("frequencies", &BathCoefficients::frequencies)
      .def_readwrite("gamma", &BathCoefficients::gamma)
      .def_readonly("drives", &BathCoefficients::drives)
      .def("set_drive",
           [](BathCoefficients& self, int index, Complex c, const Window& window) {
             self.drives.at(index) = Drive{c, window};
           },
           py::arg("index"), py::arg("c"), py::arg("window") = Window::always())
      .def_property_readonly("time_independent", &BathCoefficients::time_independent);

  m.def("rabi_frequencies", &rabi_frequencies, py::arg("atom"), py::arg("lasers"), py::arg("g"),
        py::arg("quad") = QuadratureSettings{}, py::arg("merge_tol") = kDefaultMergeTol);

  py::class_<Liouvillian>(m, "Liouvillian")
      .def(py::init<TransitionSet, BathCoefficients>(), py::arg("transitions"),
           py::arg("coefficients"))
      .def_property_readonly("dim", &Liouvillian::dim)
      .def_property_readonly("transitions", &Liouvillian::transitions)
      .def_property_readonly("coefficients", &Liouvillian::coefficients)
      .def("dissipator", &Liouvillian::dissipator, py::arg("rho"))
      .def("effective_hamiltonian",
           py::overload_cast<double>(&Liouvillian::effective_hamiltonian, py::const_),
           py::arg("t"))
      .def("effective_hamiltonian",
           py::overload_cast<>(&Liouvillian::effective_hamiltonian, py::const_))
      .def("apply", py::overload_cast<const Matrix&, double>(&Liouvillian::apply, py::const_),
           py::arg("rho"), py::arg("t"))
      .def("apply", py::overload_cast<const Matrix&>(&Liouvillian::apply, py::const_),
           py::arg("rho"))
      .def("heisenberg",
           py::overload_cast<const Matrix&, double>(&Liouvillian::heisenberg, py::const_),
           py::arg("X"), py::arg("t"))
      .def("heisenberg", py::overload_cast<const Matrix&>(&Liouvillian::heisenberg, py::const_),
           py::arg("X"))
      .def("matrix", py::overload_cast<double>(&Liouvillian::matrix, py::const_), py::arg("t"))
      .def("matrix", py::overload_cast<>(&Liouvillian::matrix, py::const_))
      .def_property_readonly("time_independent", &Liouvillian::time_independent)
      .def("stationary", &Liouvillian::stationary)
      .def("breakpoints", &Liouvillian::breakpoints, py::arg("t0"), py::arg("t1"));

  py::class_<StepControl>(m, "StepControl")
      .def(py::init<>())
      .def_readwrite("dt", &StepControl::dt)
      .def_readwrite("adaptive", &StepControl::adaptive)
      .def_readwrite("rel_tol", &StepControl::rel_tol)
      .def_readwrite("abs_tol", &StepControl::abs_tol)
      .def_readwrite("min_dt", &StepControl::min_dt)
      .def_readwrite("trace_drift_limit", &StepControl::trace_drift_limit);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("states", &Trajectory::states)
      .def_readonly("trace_error", &Trajectory::trace_error)
      .def_readonly("min_eigenvalue", &Trajectory::min_eigenvalue)
      .def("__len__", &Trajectory::size)
      .def_property_readonly("final_state", &Trajectory::final_state)
      .def_property_readonly("final_time", &Trajectory::final_time);

  m.def("evolve", &evolve, py::arg("rho0"), py::arg("L"), py::arg("t0"), py::arg("t1"),
        py::arg("ctrl") = StepControl{});
  m.def("expectation", &expectation, py::arg("rho"), py::arg("X"));
  m.def("observable_average",
        [](const Matrix& rho, const Matrix& X) {
          bool warn = false;
          const double value = observable_average(rho, X, &warn);
          return py::make_tuple(value, warn);
        },
        py::arg("rho"), py::arg("X"),
        "returns (Re Tr(rho X), non_hermitian_warning)");
  m.def("default_step", &default_step, py::arg("L"));

  py::class_<SteadyState>(m, "SteadyState")
      .def_readonly("states", &SteadyState::states)
      .def_readonly("kernel_dimension", &SteadyState::kernel_dimension)
      .def_readonly("degenerate", &SteadyState::degenerate)
      .def_readonly("residual", &SteadyState::residual)
      .def_readonly("gap", &SteadyState::gap)
      .def_readonly("spectrum", &SteadyState::spectrum);

  m.def("steady_state", &steady_state, py::arg("L"), py::arg("kernel_tol_rel") = 1e-10);
  m.def("relaxation_rate", &relaxation_rate, py::arg("L"), py::arg("threshold_rel") = 1e-10);
  m.def("two_level_steady_state", &two_level_steady_state, py::arg("gamma"), py::arg("Omega"));
  m.def("three_level_single_laser_steady_state", &three_level_single_laser_steady_state,
        py::arg("gamma1"), py::arg("gamma2"), py::arg("gamma3"), py::arg("Omega"));
  m.def("lambda_dark_state", &lambda_dark_state, py::arg("Omega2"), py::arg("Omega3"));

  m.def("density_diagnostics",
        [](const Matrix& rho) {
          const DensityDiagnostics d = density_diagnostics(rho);
          return py::make_tuple(d.trace_error, d.hermiticity_error, d.min_eigenvalue);
        },
        py::arg("rho"), "returns (trace_error, hermiticity_error, min_eigenvalue)");
  m.def("level_projector", &level_projector, py::arg("dim"), py::arg("level"));
  m.def("maximally_mixed", &maximally_mixed, py::arg("dim"));
  m.def("pure_density", &pure_density, py::arg("psi"));
  m.def("trace_distance", &trace_distance, py::arg("rho"), py::arg("sigma"));

  py::enum_<DarkStateConvention>(m, "DarkStateConvention")
      .value("Consistent", DarkStateConvention::Consistent)
      .value("Conjugate", DarkStateConvention::Conjugate);

  py::class_<ControlTarget>(m, "ControlTarget")
      .def(py::init([](Complex c0, Complex c1, double kappa) {
             return ControlTarget{c0, c1, kappa};
           }),
           py::arg("c0"), py::arg("c1"), py::arg("kappa") = 1.0)
      .def_static("normalized", &ControlTarget::normalized, py::arg("c0"), py::arg("c1"),
                  py::arg("kappa") = 1.0)
      .def_readwrite("c0", &ControlTarget::c0)
      .def_readwrite("c1", &ControlTarget::c1)
      .def_readwrite("kappa", &ControlTarget::kappa)
      .def("state", &ControlTarget::state);

  py::class_<LambdaCoefficients>(m, "LambdaCoefficients")
      .def(py::init([](Complex g2, Complex g3) {
             return LambdaCoefficients{g2, g3};
           }),
           py::arg("gamma2") = Complex{1.0, 0.0}, py::arg("gamma3") = Complex{1.0, 0.0})
      .def_readwrite("gamma2", &LambdaCoefficients::gamma2)
      .def_readwrite("gamma3", &LambdaCoefficients::gamma3);

  py::class_<DesignVerification>(m, "DesignVerification")
      .def_readonly("fidelity", &DesignVerification::fidelity)
      .def_readonly("gap", &DesignVerification::gap)
      .def_readonly("kernel_dimension", &DesignVerification::kernel_dimension);

  m.def("design_rabi", &design_rabi, py::arg("target"),
        py::arg("convention") = DarkStateConvention::Consistent);
  m.def("design_intensity", &design_intensity, py::arg("Omega"), py::arg("g"), py::arg("d"),
        py::arg("omega_l"));
  m.def("lambda_liouvillian", &lambda_liouvillian, py::arg("Omega2"), py::arg("Omega3"),
        py::arg("bath") = LambdaCoefficients{});
  m.def("verify_design", &verify_design, py::arg("target"), py::arg("Omega2"), py::arg("Omega3"),
        py::arg("bath") = LambdaCoefficients{});
}
