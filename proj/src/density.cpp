#include "slme/density.hpp"

#include <cmath>
#include <sstream>

namespace slme {

DensityDiagnostics density_diagnostics(const Matrix& rho) {
  DensityDiagnostics d;
  d.trace_error = std::abs(rho.trace() - Complex{1.0, 0.0});
  d.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

void require_density(const Matrix& rho, double trace_tol, double herm_tol, double psd_tol) {
  if (rho.rows() != rho.cols() || rho.rows() < 1)
    throw std::invalid_argument("density matrix must be square");
  const DensityDiagnostics d = density_diagnostics(rho);
  if (d.hermiticity_error > herm_tol || d.trace_error > trace_tol ||
      d.min_eigenvalue < -psd_tol) {
    std::ostringstream msg;
    msg << "invalid density matrix: trace error " << d.trace_error << ", hermiticity error "
        << d.hermiticity_error << ", min eigenvalue " << d.min_eigenvalue;
    throw std::invalid_argument(msg.str());
  }
}

Matrix level_projector(int dim, int level) {
  if (level < 0 || level >= dim) throw std::invalid_argument("level index out of range");
  Matrix p = Matrix::Zero(dim, dim);
  p(level, level) = 1.0;
  return p;
}

Matrix maximally_mixed(int dim) {
  return Matrix::Identity(dim, dim) / static_cast<double>(dim);
}

Matrix pure_density(const Vector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw std::invalid_argument("zero state vector");
  const Vector u = psi / n;
  return u * u.adjoint();
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  const Matrix diff = 0.5 * ((rho - sigma) + (rho - sigma).adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace slme
