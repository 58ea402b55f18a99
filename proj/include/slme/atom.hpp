#pragma once

#include <utility>
#include <vector>

#include "slme/types.hpp"

namespace slme {

/// One dipole-coupled level pair (upper, lower) with amplitude d and
/// transition frequency omega = e_upper - e_lower.
struct Transition {
  int upper = 0;
  int lower = 0;
  Complex amplitude{0.0, 0.0};
  double omega = 0.0;
};

inline constexpr double kDefaultMergeTol = 1e-9;

/// Discrete-level atom: energies e_0 <= e_1 <= ... and dipole amplitudes
/// for the coupled level pairs. Index 0 is the ground state; indices
/// ascend with energy. Immutable after construction.
class Atom {
 public:
  struct DipoleEntry {
    int upper = 0;
    int lower = 0;
    Complex amplitude{0.0, 0.0};
  };

  Atom(std::vector<double> energies, const std::vector<DipoleEntry>& dipoles);

  int dim() const { return static_cast<int>(energies_.size()); }
  const std::vector<double>& energies() const { return energies_; }
  const std::vector<Transition>& dipoles() const { return dipoles_; }

  /// 0 when the pair carries no dipole entry.
  Complex dipole(int upper, int lower) const;

  /// H_A = sum_n e_n |n><n|.
  Matrix hamiltonian() const;

  /// Full lowering operator D = sum conj(d) |lower><upper|.
  Matrix lowering() const;

 private:
  std::vector<double> energies_;
  std::vector<Transition> dipoles_;
};

/// All level pairs sharing one Bohr frequency, merged into a single
/// lowering operator D_omega.
struct TransitionMode {
  double omega = 0.0;
  Matrix op;                         // D_omega, strictly lower triangular
  std::vector<Transition> pairs;     // contributing nonzero-amplitude pairs
};

/// The positive Bohr frequencies of the dipole-coupled transitions and
/// their operators, sorted by frequency. Zero-amplitude dipoles are
/// dropped, so a forbidden transition is structurally absent.
class TransitionSet {
 public:
  TransitionSet(int dim, std::vector<TransitionMode> modes);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(modes_.size()); }
  const std::vector<TransitionMode>& modes() const { return modes_; }
  const TransitionMode& mode(int i) const { return modes_.at(i); }
  std::vector<double> frequencies() const;

  /// Index of the mode matching omega within tol, -1 when none.
  int index_of(double omega, double tol = kDefaultMergeTol) const;

  /// sum_omega D_omega; equals Atom::lowering() of the source atom.
  Matrix total_lowering() const;

 private:
  int dim_ = 0;
  std::vector<TransitionMode> modes_;
};

/// Distinct positive Bohr frequencies over dipole-coupled pairs, sorted
/// ascending. Frequencies closer than merge_tol are merged.
std::vector<double> bohr_frequencies(const Atom& atom, double merge_tol = kDefaultMergeTol);

/// D_omega = sum over pairs with e_n - e_m = omega of conj(d) |m><n|.
TransitionSet transition_operators(const Atom& atom, double merge_tol = kDefaultMergeTol);

}  // namespace slme
