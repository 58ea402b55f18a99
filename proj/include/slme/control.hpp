#pragma once

#include <utility>

#include "slme/form_factor.hpp"
#include "slme/liouvillian.hpp"
#include "slme/steady_state.hpp"
#include "slme/types.hpp"

namespace slme {

/// Target qubit superposition c1 |1> + c0 |0> on the two lower levels of a
/// lambda atom, with overall Rabi magnitude kappa.
struct ControlTarget {
  Complex c0{0.0, 0.0};
  Complex c1{1.0, 0.0};
  double kappa = 1.0;

  /// Normalizes (c0, c1); kappa must be positive.
  static ControlTarget normalized(Complex c0, Complex c1, double kappa = 1.0);
  Vector state() const;  // 3-component vector in the lambda-atom basis
};

/// Which lower-level superposition a Rabi pair is inverted against.
/// Consistent (default) uses the state annihilated by the raising coupling;
/// Conjugate is the legacy conjugated-amplitude variant, kept only for
/// comparison.
enum class DarkStateConvention { Consistent, Conjugate };

/// Rabi pair whose dark state is the target: (Omega2, Omega3) = kappa (-c0, c1).
std::pair<Complex, Complex> design_rabi(const ControlTarget& target,
                                        DarkStateConvention convention = DarkStateConvention::Consistent);

/// On-shell field amplitude reproducing a requested Rabi frequency,
///   f(omega_l) = Omega / (8 pi^2 omega_l^2 conj(g(omega_l)) d).
/// Only the resonant-shell value is determined; off-shell the profile is free.
Complex design_intensity(Complex Omega, const FormFactor& g, Complex d, double omega_l);

/// Weighted susceptibilities gamma_j = gamma_w |d_j|^2 of the two open decay
/// channels of a lambda atom.
struct LambdaCoefficients {
  Complex gamma2{1.0, 0.0};
  Complex gamma3{1.0, 0.0};
};

/// Canonical driven lambda-atom generator (levels 0, 1, 3; d2 = d3 = 1,
/// always-on drives). Dynamics depend only on (gamma_j, Omega_j), so any
/// lambda atom reduces to this form.
Liouvillian lambda_liouvillian(Complex Omega2, Complex Omega3,
                               const LambdaCoefficients& bath = {});

struct DesignVerification {
  double fidelity = 0.0;  // <target| rho_st |target>
  double gap = 0.0;       // preparation-speed figure of merit
  int kernel_dimension = 0;
};

/// Closes the design loop: builds the lambda generator for (Omega2, Omega3),
/// solves for the steady state, and scores it against the target. A
/// degenerate kernel (failed design) raises DegenerateKernelError.
DesignVerification verify_design(const ControlTarget& target, Complex Omega2, Complex Omega3,
                                 const LambdaCoefficients& bath = {});

}  // namespace slme
