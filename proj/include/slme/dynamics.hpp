#pragma once

#include <vector>

#include "slme/density.hpp"
#include "slme/liouvillian.hpp"
#include "slme/types.hpp"

namespace slme {

struct StepControl {
  double dt = 0.0;          // fixed step; 0 selects 1e-2 / coefficient_scale
  bool adaptive = false;    // embedded RKF45 pair instead of fixed RK4
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double min_dt = 1e-12;
  double trace_drift_limit = 1e-6;  // hard failure threshold
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix> states;
  std::vector<double> trace_error;
  std::vector<double> min_eigenvalue;

  const Matrix& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
  int size() const { return static_cast<int>(times.size()); }
};

/// Integrate d rho / dt = L_t(rho) over [t0, t1]. Window edges are
/// mandatory breakpoints; the generator is held constant within each
/// segment (piecewise-constant windows). Per-snapshot diagnostics are
/// recorded; trace drift beyond the limit raises NumericalError.
Trajectory evolve(const Matrix& rho0, const Liouvillian& L, double t0, double t1,
                  const StepControl& ctrl = {});

/// Tr(rho X).
Complex expectation(const Matrix& rho, const Matrix& X);

/// Real expectation value of a Hermitian observable. A non-Hermitian X
/// sets the warning flag and the real part of the trace is returned.
double observable_average(const Matrix& rho, const Matrix& X,
                          bool* non_hermitian_warning = nullptr);

double default_step(const Liouvillian& L);

}  // namespace slme
