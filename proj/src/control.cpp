#include "slme/control.hpp"

#include <cmath>
#include <numbers>

#include "slme/density.hpp"

namespace slme {

ControlTarget ControlTarget::normalized(Complex c0, Complex c1, double kappa) {
  const double n = std::sqrt(std::norm(c0) + std::norm(c1));
  if (!(n > 0.0)) throw std::invalid_argument("target amplitudes must not both vanish");
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
  return ControlTarget{c0 / n, c1 / n, kappa};
}

Vector ControlTarget::state() const {
  Vector psi = Vector::Zero(3);
  psi(0) = c0;
  psi(1) = c1;
  return psi;
}

std::pair<Complex, Complex> design_rabi(const ControlTarget& target,
                                        DarkStateConvention convention) {
  const double n2 = std::norm(target.c0) + std::norm(target.c1);
  if (!(n2 > 0.0)) throw std::invalid_argument("target amplitudes must not both vanish");
  if (std::abs(n2 - 1.0) > 1e-9)
    throw std::invalid_argument("target amplitudes must be unit norm");
  if (!(target.kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
  if (convention == DarkStateConvention::Conjugate)
    return {target.kappa * std::conj(target.c1), -target.kappa * std::conj(target.c0)};
  return {-target.kappa * target.c0, target.kappa * target.c1};
}

Complex design_intensity(Complex Omega, const FormFactor& g, Complex d, double omega_l) {
  if (!(omega_l > 0.0)) throw std::invalid_argument("design_intensity requires omega_l > 0");
  const Complex shell = std::conj(g(omega_l));
  if (shell == Complex{0.0, 0.0})
    throw std::domain_error("transition not drivable: form factor vanishes on the shell");
  if (d == Complex{0.0, 0.0})
    throw std::domain_error("transition not drivable: zero dipole amplitude");
  const double pi = std::numbers::pi;
  return Omega / (8.0 * pi * pi * omega_l * omega_l * shell * d);
}

Liouvillian lambda_liouvillian(Complex Omega2, Complex Omega3, const LambdaCoefficients& bath) {
  const Atom atom({0.0, 1.0, 3.0}, {{2, 1, Complex{1.0, 0.0}}, {2, 0, Complex{1.0, 0.0}}});
  const TransitionSet ts = transition_operators(atom);
  BathCoefficients coeffs = BathCoefficients::direct(ts, {bath.gamma2, bath.gamma3});
  coeffs.drives[0] = Drive{Omega2, Window::always()};  // omega2 = 2 sorts first
  coeffs.drives[1] = Drive{Omega3, Window::always()};
  return Liouvillian(ts, std::move(coeffs));
}

DesignVerification verify_design(const ControlTarget& target, Complex Omega2, Complex Omega3,
                                 const LambdaCoefficients& bath) {
  const Liouvillian L = lambda_liouvillian(Omega2, Omega3, bath);
  const SteadyState ss = steady_state(L);
  if (ss.degenerate)
    throw DegenerateKernelError("design verification found a degenerate stationary subspace (" +
                                std::to_string(ss.kernel_dimension) + " states)");
  const Vector psi = target.state();
  DesignVerification out;
  out.fidelity = (psi.adjoint() * ss.states.front() * psi).value().real();
  out.gap = ss.gap;
  out.kernel_dimension = ss.kernel_dimension;
  return out;
}

}  // namespace slme
