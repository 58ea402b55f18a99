#include "slme/atom.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace slme {

Atom::Atom(std::vector<double> energies, const std::vector<DipoleEntry>& dipoles)
    : energies_(std::move(energies)) {
  const int d = static_cast<int>(energies_.size());
  if (d < 2) throw std::invalid_argument("atom requires at least 2 levels");
  for (int n = 0; n + 1 < d; ++n) {
    if (energies_[n] > energies_[n + 1])
      throw std::invalid_argument("energies must be sorted ascending");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& e : dipoles) {
    if (e.upper < 0 || e.upper >= d || e.lower < 0 || e.lower >= d)
      throw std::invalid_argument("dipole level index out of range");
    if (!(energies_[e.upper] > energies_[e.lower]))
      throw std::invalid_argument("dipole pair requires strictly higher first energy");
    if (!seen.insert({e.upper, e.lower}).second)
      throw std::invalid_argument("duplicate dipole key");
    dipoles_.push_back(Transition{e.upper, e.lower, e.amplitude,
                                  energies_[e.upper] - energies_[e.lower]});
  }
}

Complex Atom::dipole(int upper, int lower) const {
  for (const auto& t : dipoles_)
    if (t.upper == upper && t.lower == lower) return t.amplitude;
  return Complex{0.0, 0.0};
}

Matrix Atom::hamiltonian() const {
  Matrix h = Matrix::Zero(dim(), dim());
  for (int n = 0; n < dim(); ++n) h(n, n) = energies_[n];
  return h;
}

Matrix Atom::lowering() const {
  Matrix D = Matrix::Zero(dim(), dim());
  for (const auto& t : dipoles_) D(t.lower, t.upper) += std::conj(t.amplitude);
  return D;
}

TransitionSet::TransitionSet(int dim, std::vector<TransitionMode> modes)
    : dim_(dim), modes_(std::move(modes)) {}

std::vector<double> TransitionSet::frequencies() const {
  std::vector<double> out;
  out.reserve(modes_.size());
  for (const auto& m : modes_) out.push_back(m.omega);
  return out;
}

int TransitionSet::index_of(double omega, double tol) const {
  int found = -1;
  for (int i = 0; i < size(); ++i) {
    if (std::abs(modes_[i].omega - omega) <= tol) {
      if (found >= 0) return -1;  // ambiguous
      found = i;
    }
  }
  return found;
}

Matrix TransitionSet::total_lowering() const {
  Matrix D = Matrix::Zero(dim_, dim_);
  for (const auto& m : modes_) D += m.op;
  return D;
}

namespace {

std::vector<TransitionMode> merged_modes(const Atom& atom, double merge_tol) {
  std::vector<Transition> active;
  for (const auto& t : atom.dipoles())
    if (t.amplitude != Complex{0.0, 0.0}) active.push_back(t);
  std::sort(active.begin(), active.end(),
            [](const Transition& a, const Transition& b) { return a.omega < b.omega; });

  std::vector<TransitionMode> modes;
  const int d = atom.dim();
  for (const auto& t : active) {
    if (modes.empty() || t.omega - modes.back().pairs.front().omega > merge_tol) {
      TransitionMode m;
      m.op = Matrix::Zero(d, d);
      modes.push_back(std::move(m));
    }
    TransitionMode& m = modes.back();
    m.pairs.push_back(t);
    m.op(t.lower, t.upper) += std::conj(t.amplitude);
  }
  for (auto& m : modes) {
    double sum = 0.0;
    for (const auto& p : m.pairs) sum += p.omega;
    m.omega = sum / static_cast<double>(m.pairs.size());
  }
  return modes;
}

}  // namespace

std::vector<double> bohr_frequencies(const Atom& atom, double merge_tol) {
  std::vector<double> freqs;
  for (const auto& m : merged_modes(atom, merge_tol)) freqs.push_back(m.omega);
  return freqs;
}

TransitionSet transition_operators(const Atom& atom, double merge_tol) {
  return TransitionSet(atom.dim(), merged_modes(atom, merge_tol));
}

}  // namespace slme
