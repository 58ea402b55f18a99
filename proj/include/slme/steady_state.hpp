#pragma once

#include <vector>

#include "slme/liouvillian.hpp"
#include "slme/types.hpp"

namespace slme {

struct SteadyState {
  std::vector<Matrix> states;       // Hermitized kernel basis, trace-normalized where possible
  int kernel_dimension = 0;
  bool degenerate = false;
  double residual = 0.0;            // ||L(states[0])||_F
  double gap = 0.0;                 // smallest |Re lambda| of the decaying sector
  std::vector<Complex> spectrum;    // all d^2 eigenvalues, sorted by Re then Im
};

/// Stationary states of a time-independent generator via the SVD null
/// space of the vectorized Liouvillian. Singular values below
/// kernel_tol_rel * sigma_max span the kernel; the kernel vectors are
/// Hermitized and trace-normalized. A kernel dimension above one sets the
/// degeneracy flag; an empty kernel raises NumericalError.
SteadyState steady_state(const Liouvillian& L, double kernel_tol_rel = 1e-10);

/// Spectral gap of the decaying sector; 0 when undamped oscillating
/// modes (purely imaginary eigenvalues) survive alongside a degenerate
/// kernel, or when nothing decays.
double relaxation_rate(const Liouvillian& L, double threshold_rel = 1e-10);

/// Two-level stationary state, basis (|0>, |1>):
/// alpha = -i Omega / gamma; rho00 = (1+|a|^2)/N, rho11 = |a|^2/N,
/// rho10 = alpha/N with N = 1 + 2 |alpha|^2. Requires Re gamma > 0.
Matrix two_level_steady_state(Complex gamma, Complex Omega);

/// Three-level atom, single laser on the 2<->0 transition, generic case.
/// gamma_j are the per-transition weighted susceptibilities
/// gamma_w |d_j|^2 = a_j + i b_j; requires a1 > 0 and Re(gamma2+gamma3) > 0.
/// alpha = -i Omega / (gamma2+gamma3), r = a2/a1, N = 1 + (2+r)|alpha|^2;
/// rho00 = (1+|a|^2)/N, rho11 = r|a|^2/N, rho22 = |a|^2/N, rho20 = alpha/N.
Matrix three_level_single_laser_steady_state(Complex gamma1, Complex gamma2, Complex gamma3,
                                             Complex Omega);

/// Dark state of the driven lambda atom: the lower-level superposition
/// annihilated by the raising coupling Omega2 |2><1| + Omega3 |2><0|,
///   psi = (Omega3 |1> - Omega2 |0>) / sqrt(|Omega2|^2 + |Omega3|^2).
/// Unique stationary state when both decay channels are open.
Vector lambda_dark_state(Complex Omega2, Complex Omega3);

/// The conjugated-amplitude variant psi = (conj(Omega2)|1> - conj(Omega3)|0>)/N,
/// kept for comparison; it is stationary only for |Omega2| = |Omega3|.
Vector lambda_dark_state_conjugate_variant(Complex Omega2, Complex Omega3);

}  // namespace slme
