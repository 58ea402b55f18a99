#include "slme/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace slme {

namespace {

void record(Trajectory& traj, double t, const Matrix& rho, double drift_limit) {
  const DensityDiagnostics d = density_diagnostics(rho);
  if (d.trace_error > drift_limit)
    throw NumericalError("trace drift " + std::to_string(d.trace_error) +
                         " exceeds the hard limit");
  traj.times.push_back(t);
  traj.states.push_back(rho);
  traj.trace_error.push_back(d.trace_error);
  traj.min_eigenvalue.push_back(d.min_eigenvalue);
}

void integrate_fixed_rk4(Trajectory& traj, const Matrix& M, Vector& v, double a, double b,
                         double dt, int dim, double drift_limit) {
  const long n = std::max(1l, static_cast<long>(std::ceil((b - a) / dt - 1e-12)));
  const double h = (b - a) / static_cast<double>(n);
  for (long s = 0; s < n; ++s) {
    const Vector k1 = M * v;
    const Vector k2 = M * (v + 0.5 * h * k1);
    const Vector k3 = M * (v + 0.5 * h * k2);
    const Vector k4 = M * (v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record(traj, a + h * static_cast<double>(s + 1), unvec(v, dim), drift_limit);
  }
  // land exactly on the breakpoint
  traj.times.back() = b;
}

// Fehlberg 4(5) embedded pair; the 5th-order solution advances.
void integrate_adaptive(Trajectory& traj, const Matrix& M, Vector& v, double a, double b,
                        const StepControl& ctrl, int dim) {
  double t = a;
  double h = std::min(b - a, 0.1 * (b - a));
  bool recorded = false;
  while (t < b - 1e-15 * std::max(1.0, std::abs(b))) {
    h = std::min(h, b - t);
    const Vector k1 = M * v;
    const Vector k2 = M * (v + h * (0.25 * k1));
    const Vector k3 = M * (v + h * ((3.0 / 32.0) * k1 + (9.0 / 32.0) * k2));
    const Vector k4 = M * (v + h * ((1932.0 / 2197.0) * k1 - (7200.0 / 2197.0) * k2 +
                                    (7296.0 / 2197.0) * k3));
    const Vector k5 = M * (v + h * ((439.0 / 216.0) * k1 - 8.0 * k2 + (3680.0 / 513.0) * k3 -
                                    (845.0 / 4104.0) * k4));
    const Vector k6 = M * (v + h * ((-8.0 / 27.0) * k1 + 2.0 * k2 - (3544.0 / 2565.0) * k3 +
                                    (1859.0 / 4104.0) * k4 - (11.0 / 40.0) * k5));
    const Vector y5 = v + h * ((16.0 / 135.0) * k1 + (6656.0 / 12825.0) * k3 +
                               (28561.0 / 56430.0) * k4 - (9.0 / 50.0) * k5 + (2.0 / 55.0) * k6);
    const Vector y4 = v + h * ((25.0 / 216.0) * k1 + (1408.0 / 2565.0) * k3 +
                               (2197.0 / 4104.0) * k4 - (1.0 / 5.0) * k5);
    const double err = (y5 - y4).norm();
    const double scale = ctrl.abs_tol + ctrl.rel_tol * std::max(v.norm(), y5.norm());
    if (err <= scale) {
      t += h;
      v = y5;
      record(traj, t, unvec(v, dim), ctrl.trace_drift_limit);
      recorded = true;
    }
    const double factor = err > 0.0 ? 0.9 * std::pow(scale / err, 0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
    if (h < ctrl.min_dt) throw NumericalError("adaptive step size underflow");
  }
  if (recorded) traj.times.back() = b;
}

}  // namespace

double default_step(const Liouvillian& L) { return 1e-2 / L.coefficient_scale(); }

Trajectory evolve(const Matrix& rho0, const Liouvillian& L, double t0, double t1,
                  const StepControl& ctrl) {
  if (!(t0 < t1)) throw std::invalid_argument("evolve requires t0 < t1");
  require_density(rho0);
  if (rho0.rows() != L.dim()) throw std::invalid_argument("dimension mismatch");

  std::vector<double> edges = L.breakpoints(t0, t1);
  edges.insert(edges.begin(), t0);
  edges.push_back(t1);

  const double dt = ctrl.dt > 0.0 ? ctrl.dt : default_step(L);

  Trajectory traj;
  record(traj, t0, rho0, ctrl.trace_drift_limit);
  Vector v = vec(rho0);
  for (size_t s = 0; s + 1 < edges.size(); ++s) {
    const double a = edges[s], b = edges[s + 1];
    if (!(b > a)) continue;
    const Matrix M = L.matrix(0.5 * (a + b));
    if (ctrl.adaptive)
      integrate_adaptive(traj, M, v, a, b, ctrl, L.dim());
    else
      integrate_fixed_rk4(traj, M, v, a, b, dt, L.dim(), ctrl.trace_drift_limit);
  }
  return traj;
}

Complex expectation(const Matrix& rho, const Matrix& X) {
  if (rho.rows() != X.rows() || rho.cols() != X.cols())
    throw std::invalid_argument("dimension mismatch");
  return (rho * X).trace();
}

double observable_average(const Matrix& rho, const Matrix& X, bool* non_hermitian_warning) {
  const double herm = (X - X.adjoint()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, X.cwiseAbs().maxCoeff());
  if (non_hermitian_warning) *non_hermitian_warning = herm > 1e-12 * scale;
  return expectation(rho, X).real();
}

}  // namespace slme
