#include "slme/run.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slme/config.hpp"
#include "slme/density.hpp"
#include "slme/dynamics.hpp"
#include "slme/serialize.hpp"
#include "slme/steady_state.hpp"

namespace slme {

namespace {

double env_or(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stod(v);
  } catch (...) {
    throw ConfigError(std::string("environment override ") + name + " is not a number");
  }
}

std::ofstream open_artifact(const std::string& dir, const std::string& name) {
  std::ofstream f(dir + "/" + name);
  if (!f) throw NumericalError("cannot write output file " + dir + "/" + name);
  return f;
}

void write_meta(const std::string& dir, const std::string& command, const std::string& config_path) {
  auto f = open_artifact(dir, "run.meta.txt");
  f << "tool = slme " << kToolVersion << "\n";
  f << "command = " << command << "\n";
  f << "config = " << config_path << "\n";
  f << "basis = ascending-energy\n";
}

std::string window_text(const Window& w) {
  if (w.always_on) return "always";
  return format_real(w.start) + "," + format_real(w.end);
}

void write_coeffs(std::ostream& f, const TransitionSet& ts, const BathCoefficients& coeffs) {
  f << "basis = ascending-energy\n";
  f << "mode_count = " << ts.size() << "\n";
  for (int i = 0; i < ts.size(); ++i) {
    const std::string p = "mode_" + std::to_string(i);
    f << p << ".omega = " << format_real(ts.mode(i).omega) << "\n";
    f << p << ".gamma = " << format_complex(coeffs.gamma[i]) << "\n";
    const Complex c = coeffs.drives[i] ? coeffs.drives[i]->c : Complex{0.0, 0.0};
    f << p << ".c = " << format_complex(c) << "\n";
    f << p << ".window = "
      << (coeffs.drives[i] ? window_text(coeffs.drives[i]->window) : "none") << "\n";
  }
  int t = 0;
  for (int i = 0; i < ts.size(); ++i) t += static_cast<int>(ts.mode(i).pairs.size());
  f << "transition_count = " << t << "\n";
  t = 0;
  for (int i = 0; i < ts.size(); ++i) {
    for (const auto& pair : ts.mode(i).pairs) {
      const std::string p = "transition_" + std::to_string(t++);
      const Complex c = coeffs.drives[i] ? coeffs.drives[i]->c : Complex{0.0, 0.0};
      const double w2 = std::norm(pair.amplitude);
      f << p << ".levels = " << pair.upper << "," << pair.lower << "\n";
      f << p << ".omega = " << format_real(ts.mode(i).omega) << "\n";
      f << p << ".dipole = " << format_complex(pair.amplitude) << "\n";
      f << p << ".gamma_omega = " << format_complex(coeffs.gamma[i]) << "\n";
      f << p << ".gamma_weighted = " << format_complex(coeffs.gamma[i] * w2) << "\n";
      f << p << ".rabi = " << format_complex(c * pair.amplitude) << "\n";
    }
  }
}

void write_state(std::ostream& f, const std::string& prefix, const Matrix& rho) {
  f << prefix << ".purity = " << format_real((rho * rho).trace().real()) << "\n";
  for (int m = 0; m < rho.rows(); ++m)
    for (int n = 0; n < rho.cols(); ++n)
      f << prefix << ".rho_" << m << "_" << n << " = " << format_complex(rho(m, n)) << "\n";
}

int cmd_coeffs(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& out) {
  const Atom atom = cfg.atom();
  const TransitionSet ts = transition_operators(atom, cfg.merge_tol);
  const BathCoefficients coeffs = cfg.coefficients(ts);
  auto f = open_artifact(out_dir, cfg.output.coeffs);
  write_coeffs(f, ts, coeffs);
  out << "coeffs: " << ts.size() << " transition mode(s), wrote " << cfg.output.coeffs << "\n";
  return 0;
}

int cmd_evolve(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& out) {
  if (!cfg.solver.t_span) throw ConfigError("solver.t_span: required by the evolve command");
  const Liouvillian L = cfg.liouvillian();
  const Matrix rho0 = cfg.initial_density(L.dim());
  StepControl ctrl;
  ctrl.dt = cfg.solver.dt;
  ctrl.adaptive = cfg.solver.adaptive;
  ctrl.rel_tol = cfg.solver.rel_tol;
  ctrl.abs_tol = cfg.solver.abs_tol;
  const Trajectory traj =
      evolve(rho0, L, (*cfg.solver.t_span)[0], (*cfg.solver.t_span)[1], ctrl);

  auto f = open_artifact(out_dir, cfg.output.trajectory);
  f << trajectory_csv_header(L.dim()) << "\n";
  for (int i = 0; i < traj.size(); ++i)
    f << trajectory_csv_row(traj.times[i], traj.states[i]) << "\n";

  auto g = open_artifact(out_dir, cfg.output.diagnostics);
  g << "t,trace_error,min_eigenvalue\n";
  for (int i = 0; i < traj.size(); ++i)
    g << format_real(traj.times[i]) << "," << format_real(traj.trace_error[i]) << ","
      << format_real(traj.min_eigenvalue[i]) << "\n";

  out << "evolve: " << traj.size() << " snapshot(s) over [" << (*cfg.solver.t_span)[0] << ", "
      << (*cfg.solver.t_span)[1] << "], wrote " << cfg.output.trajectory << "\n";
  return 0;
}

int cmd_steady(const ExperimentConfig& cfg, const std::string& out_dir, bool strict,
               std::ostream& out) {
  const double kernel_tol = env_or("SLME_KERNEL_TOL", 1e-10);
  const Liouvillian L = cfg.liouvillian().stationary();
  const SteadyState ss = steady_state(L, kernel_tol);

  auto f = open_artifact(out_dir, cfg.output.steady);
  f << "basis = ascending-energy\n";
  f << "dim = " << L.dim() << "\n";
  f << "kernel_dim = " << ss.kernel_dimension << "\n";
  f << "degenerate = " << (ss.degenerate ? "true" : "false") << "\n";
  f << "gap = " << format_real(ss.gap) << "\n";
  f << "residual = " << format_real(ss.residual) << "\n";
  f << "state_count = " << ss.kernel_dimension << "\n";
  for (int i = 0; i < ss.kernel_dimension; ++i)
    write_state(f, "state_" + std::to_string(i), ss.states[i]);
  f << "spectrum_count = " << ss.spectrum.size() << "\n";
  for (size_t i = 0; i < ss.spectrum.size(); ++i)
    f << "spectrum_" << i << " = " << format_complex(ss.spectrum[i]) << "\n";

  out << "steady: kernel dimension " << ss.kernel_dimension << ", gap " << ss.gap
      << ", residual " << ss.residual << ", wrote " << cfg.output.steady << "\n";
  if (ss.degenerate) {
    out << "steady: stationary subspace is degenerate\n";
    if (strict) return 4;
  }
  return 0;
}

int cmd_design(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& out) {
  if (!cfg.design) throw ConfigError("design: section required by the design command");
  const Atom atom = cfg.atom();
  if (atom.dim() != 3 || atom.dipole(1, 0) != Complex{0.0, 0.0} ||
      atom.dipole(2, 1) == Complex{0.0, 0.0} || atom.dipole(2, 0) == Complex{0.0, 0.0})
    throw ConfigError(
        "design: requires a lambda atom (3 levels, no (1,0) dipole, (2,1) and (2,0) coupled)");

  const ControlTarget target =
      ControlTarget::normalized(cfg.design->c0, cfg.design->c1, cfg.design->kappa);
  const auto [O2, O3] = design_rabi(target, cfg.design->convention);

  const TransitionSet ts = transition_operators(atom, cfg.merge_tol);
  ExperimentConfig bare = cfg;
  bare.lasers.clear();
  BathCoefficients coeffs = bare.coefficients(ts);
  const double w2 = cfg.energies[2] - cfg.energies[1];
  const double w3 = cfg.energies[2] - cfg.energies[0];
  const int i2 = ts.index_of(w2, cfg.merge_tol);
  const int i3 = ts.index_of(w3, cfg.merge_tol);
  if (i2 < 0 || i3 < 0 || i2 == i3)
    throw ConfigError("design: lambda transitions must map to two distinct Bohr frequencies");
  coeffs.drives[i2] = Drive{O2 / atom.dipole(2, 1), Window::always()};
  coeffs.drives[i3] = Drive{O3 / atom.dipole(2, 0), Window::always()};

  const Liouvillian L(ts, std::move(coeffs));
  const double kernel_tol = env_or("SLME_KERNEL_TOL", 1e-10);
  const SteadyState ss = steady_state(L, kernel_tol);
  if (ss.degenerate)
    throw DegenerateKernelError("design produced a degenerate stationary subspace");
  const Vector psi = target.state();
  const double fidelity = (psi.adjoint() * ss.states.front() * psi).value().real();

  auto f = open_artifact(out_dir, cfg.output.design);
  f << "basis = ascending-energy\n";
  f << "convention = "
    << (cfg.design->convention == DarkStateConvention::Consistent ? "consistent" : "conjugate")
    << "\n";
  f << "target.c0 = " << format_complex(target.c0) << "\n";
  f << "target.c1 = " << format_complex(target.c1) << "\n";
  f << "kappa = " << format_real(target.kappa) << "\n";
  f << "Omega2 = " << format_complex(O2) << "\n";
  f << "Omega3 = " << format_complex(O3) << "\n";
  f << "fidelity = " << format_real(fidelity) << "\n";
  f << "gap = " << format_real(ss.gap) << "\n";
  f << "kernel_dim = " << ss.kernel_dimension << "\n";
  write_state(f, "steady", ss.states.front());
  if (cfg.form_factor) {
    const FormFactor g = cfg.make_form_factor(*cfg.form_factor);
    f << "intensity_count = 2\n";
    f << "intensity_0.transition = 2,1\n";
    f << "intensity_0.omega = " << format_real(w2) << "\n";
    f << "intensity_0.f_on_shell = "
      << format_complex(design_intensity(O2, g, atom.dipole(2, 1), w2)) << "\n";
    f << "intensity_1.transition = 2,0\n";
    f << "intensity_1.omega = " << format_real(w3) << "\n";
    f << "intensity_1.f_on_shell = "
      << format_complex(design_intensity(O3, g, atom.dipole(2, 0), w3)) << "\n";
  } else {
    f << "intensity_count = 0\n";
  }

  out << "design: Omega2 = " << format_complex(O2) << ", Omega3 = " << format_complex(O3)
      << ", fidelity " << fidelity << ", gap " << ss.gap << ", wrote " << cfg.output.design
      << "\n";
  return 0;
}

}  // namespace

int run_command(const std::string& command, const std::string& config_path,
                const std::string& out_dir, bool strict_kernel, std::ostream& out,
                std::ostream& err) {
  try {
    ExperimentConfig cfg = load_config(config_path);
    cfg.merge_tol = env_or("SLME_MERGE_TOL", cfg.merge_tol);
    cfg.quadrature.rel_tol = env_or("SLME_QUAD_RTOL", cfg.quadrature.rel_tol);
    std::filesystem::create_directories(out_dir);
    write_meta(out_dir, command, config_path);
    if (command == "coeffs") return cmd_coeffs(cfg, out_dir, out);
    if (command == "evolve") return cmd_evolve(cfg, out_dir, out);
    if (command == "steady") return cmd_steady(cfg, out_dir, strict_kernel, out);
    if (command == "design") return cmd_design(cfg, out_dir, out);
    err << "error [config]: unknown command " << command << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error [config]: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateKernelError& e) {
    err << "error [degenerate-kernel]: " << e.what() << "\n";
    return 4;
  } catch (const NumericalError& e) {
    err << "error [numerical]: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error [config]: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error [numerical]: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error [numerical]: " << e.what() << "\n";
    return 3;
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"stochastic-limit master equations for laser-driven atoms"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  bool strict = false;

  const char* names[] = {"coeffs", "evolve", "steady", "design"};
  const char* descs[] = {"bath coefficient table (gamma, c, Rabi frequencies)",
                         "integrate the master equation over the pulse schedule",
                         "stationary states, spectral gap, residual",
                         "laser design for a target lower-level superposition"};
  for (int i = 0; i < 4; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("--config", config_path, "experiment config file")->required();
    sub->add_option("--out", out_dir, "output directory (default: current)");
    sub->add_flag("--strict", strict, "treat a degenerate stationary subspace as an error");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return run_command(command, config_path, out_dir, strict, std::cout, std::cerr);
}

}  // namespace slme
