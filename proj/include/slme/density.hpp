#pragma once

#include "slme/types.hpp"

namespace slme {

struct DensityDiagnostics {
  double trace_error = 0.0;        // |Tr rho - 1|
  double hermiticity_error = 0.0;  // max |rho - rho^dagger|
  double min_eigenvalue = 0.0;     // of the Hermitized matrix
};

DensityDiagnostics density_diagnostics(const Matrix& rho);

/// Throws when rho is not Hermitian / unit trace / PSD within tolerance.
void require_density(const Matrix& rho, double trace_tol = 1e-12, double herm_tol = 1e-12,
                     double psd_tol = 1e-10);

Matrix level_projector(int dim, int level);
Matrix maximally_mixed(int dim);
Matrix pure_density(const Vector& psi);

/// (1/2) ||rho - sigma||_1, the trace distance.
double trace_distance(const Matrix& rho, const Matrix& sigma);

}  // namespace slme
