#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "slme/atom.hpp"
#include "slme/bath.hpp"
#include "slme/types.hpp"

namespace slme {

/// Column-stacking vectorization and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int dim);

/// Master-equation generator
///   L_t(rho) = sum_w Re(gamma_w) (2 D_w rho D_w+ - rho D_w+ D_w - D_w+ D_w rho)
///              - i [H_eff(t), rho],
///   H_eff(t) = sum_w Im(gamma_w) D_w+ D_w
///              + sum_driven chi_w(t) (conj(c_w) D_w + c_w D_w+).
/// Time dependence is piecewise constant in the window indicators; the
/// vectorized d^2 x d^2 matrix is cached per active-window configuration.
/// Immutable after construction, safe for concurrent reads.
class Liouvillian {
 public:
  Liouvillian(TransitionSet transitions, BathCoefficients coefficients);

  // copies and moves share the data but not the matrix cache
  Liouvillian(const Liouvillian& other);
  Liouvillian& operator=(const Liouvillian& other);
  Liouvillian(Liouvillian&& other) noexcept;
  Liouvillian& operator=(Liouvillian&& other) noexcept;

  int dim() const { return transitions_.dim(); }
  const TransitionSet& transitions() const { return transitions_; }
  const BathCoefficients& coefficients() const { return coeffs_; }

  Matrix dissipator(const Matrix& rho) const;

  Matrix effective_hamiltonian(double t) const;
  /// Long-pulse limit: every window treated as on.
  Matrix effective_hamiltonian() const;

  /// L_t(rho); traceless, Hermiticity-preserving.
  Matrix apply(const Matrix& rho, double t) const;
  Matrix apply(const Matrix& rho) const;

  /// Heisenberg-picture dual, fixed by Tr(heisenberg(X) rho) = Tr(X apply(rho)).
  Matrix heisenberg(const Matrix& X, double t) const;
  Matrix heisenberg(const Matrix& X) const;

  /// Vectorized generator M with M vec(rho) = vec(apply(rho, t)).
  Matrix matrix(double t) const;
  Matrix matrix() const;

  bool time_independent() const { return coeffs_.time_independent(); }

  /// Copy with all drive windows replaced by always-on.
  Liouvillian stationary() const;

  /// Window edges falling strictly inside (t0, t1), sorted.
  std::vector<double> breakpoints(double t0, double t1) const;

  /// Bitmask of drives whose window contains t.
  std::uint64_t active_mask(double t) const;
  std::uint64_t all_on_mask() const;

  /// Largest coefficient magnitude max(|gamma_w|, |c_w d_j|, 1); sets the
  /// default integrator step.
  double coefficient_scale() const;

 private:
  Matrix hamiltonian_for_mask(std::uint64_t mask) const;
  Matrix apply_mask(const Matrix& rho, std::uint64_t mask) const;
  Matrix heisenberg_mask(const Matrix& X, std::uint64_t mask) const;
  const Matrix& matrix_for_mask(std::uint64_t mask) const;

  TransitionSet transitions_;
  BathCoefficients coeffs_;
  std::vector<Matrix> dag_d_;     // D_w+ D_w per mode
  Matrix lamb_shift_;             // sum Im(gamma_w) D_w+ D_w

  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint64_t, std::unique_ptr<const Matrix>> matrix_cache_;
};

}  // namespace slme
