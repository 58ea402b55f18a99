#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "slme/atom.hpp"
#include "slme/form_factor.hpp"
#include "slme/types.hpp"

namespace slme {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  int initial_cells = 64;    // composite Simpson cells per subinterval
  int max_doublings = 20;    // refinement budget before giving up
};

struct Susceptibility {
  Complex gamma{0.0, 0.0};   // a + ib: a = decay rate, b = energy shift
  bool shell_outside = false;  // omega at or beyond the cutoff; Re forced to 0
  double im_error = 0.0;       // last refinement change of the Im part
};

/// Generalized susceptibility of an isotropic profile at transition
/// frequency omega:
///   Re = pi * 4 pi omega^2 |g(omega)|^2        (resonant shell)
///   Im = -P.V. integral 4 pi k^2 |g(k)|^2 / (k - omega) dk over [0, K_max]
/// The principal value is evaluated by singularity subtraction,
///   integral h(k)/(k-omega) = integral (h(k)-h(omega))/(k-omega)
///                             + h(omega) ln((K_max-omega)/omega),
/// with adaptive composite refinement split at k = omega. The sign of the
/// Im part follows 1/(i(x-i0)) = pi delta(x) - i P.V.(1/x).
Susceptibility susceptibility(const FormFactor& g, double omega,
                              const QuadratureSettings& quad = {});

/// Resonant-shell field coefficient for isotropic profiles:
///   c = 2 pi * 4 pi omega_l^2 * conj(g(omega_l)) f(omega_l).
Complex rabi_coefficient(const FormFactor& g, const FormFactor& f, double omega_l);

/// One laser: resonant frequency, optional explicit target pair, and either
/// a direct Rabi value or an intensity profile to integrate.
struct LaserSpec {
  double omega = 0.0;
  std::optional<std::pair<int, int>> target;   // (upper, lower), for dipole lookup
  std::optional<FormFactor> intensity;
  std::optional<Complex> rabi_override;        // Omega_j, bypasses quadrature
  Window window{};
};

struct Drive {
  Complex c{0.0, 0.0};       // field coefficient c_omega
  Window window{};
};

/// Bath data aligned with a TransitionSet: gamma_omega per mode and the
/// drive (c_omega, window) for the laser-driven modes.
struct BathCoefficients {
  std::vector<double> frequencies;
  std::vector<Complex> gamma;
  std::vector<std::optional<Drive>> drives;

  int size() const { return static_cast<int>(frequencies.size()); }
  bool time_independent() const;

  /// No lasers; all gammas given directly, aligned with ts.modes().
  static BathCoefficients direct(const TransitionSet& ts, std::vector<Complex> gamma);
};

/// Full coefficient assembly: gamma_omega for every Bohr frequency by
/// quadrature and c_omega for each laser. Each laser must resonate with
/// exactly one distinct Bohr frequency.
BathCoefficients rabi_frequencies(const Atom& atom, const std::vector<LaserSpec>& lasers,
                                  const FormFactor& g, const QuadratureSettings& quad = {},
                                  double merge_tol = kDefaultMergeTol);

/// Map lasers onto transition modes and fill coeffs.drives. g may be null
/// when every laser carries a direct Rabi override.
void assign_drives(const TransitionSet& ts, BathCoefficients& coeffs,
                   const std::vector<LaserSpec>& lasers, const FormFactor* g,
                   double merge_tol = kDefaultMergeTol);

}  // namespace slme
