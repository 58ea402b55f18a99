#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slme/atom.hpp"
#include "slme/bath.hpp"
#include "slme/control.hpp"
#include "slme/liouvillian.hpp"
#include "slme/types.hpp"

namespace slme {

struct FormFactorConfig {
  std::string model;          // gaussian | lorentzian | table
  Complex amplitude{1.0, 0.0};
  double width = 1.0;
  double cutoff = 0.0;        // 0 = auto: 10 x largest Bohr frequency
  std::string path;           // table file, relative to the config file
};

struct LaserConfig {
  std::pair<int, int> target{0, 0};
  std::optional<Complex> rabi;
  std::optional<FormFactorConfig> intensity;
  Window window{};
};

struct GammaEntry {
  std::pair<int, int> transition{0, 0};
  Complex value{0.0, 0.0};
};

struct SolverConfig {
  std::optional<std::array<double, 2>> t_span;
  double dt = 0.0;
  bool adaptive = false;
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
};

struct InitialStateConfig {
  enum class Kind { Level, Mixed, Explicit };
  Kind kind = Kind::Level;
  int level = 0;
  Matrix rho;
};

struct DesignConfig {
  Complex c0{0.0, 0.0};
  Complex c1{1.0, 0.0};
  double kappa = 1.0;
  DarkStateConvention convention = DarkStateConvention::Consistent;
};

struct OutputConfig {
  std::string trajectory = "trajectory.csv";
  std::string diagnostics = "diagnostics.csv";
  std::string steady = "steady.txt";
  std::string coeffs = "coeffs.txt";
  std::string design = "design.txt";
};

/// Parsed and cross-checked experiment description. Parsing rejects
/// unknown keys and names the offending key path in error messages.
struct ExperimentConfig {
  std::vector<double> energies;
  std::vector<Atom::DipoleEntry> dipoles;
  double merge_tol = kDefaultMergeTol;

  std::optional<FormFactorConfig> form_factor;
  std::vector<GammaEntry> gamma_table;
  QuadratureSettings quadrature;

  std::vector<LaserConfig> lasers;
  SolverConfig solver;
  InitialStateConfig initial_state;
  std::optional<DesignConfig> design;
  OutputConfig output;
  std::string base_dir = ".";

  Atom atom() const;
  double default_cutoff() const;
  FormFactor make_form_factor(const FormFactorConfig& c) const;
  std::optional<FormFactor> bath_form_factor() const;

  /// gamma per mode (direct table or quadrature) plus laser drives.
  BathCoefficients coefficients(const TransitionSet& ts) const;
  Liouvillian liouvillian() const;
  Matrix initial_density(int dim) const;
};

/// Comment-friendly JSON (// and /* */ comments are stripped).
ExperimentConfig parse_config(const std::string& text, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

}  // namespace slme
