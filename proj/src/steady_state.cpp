#include "slme/steady_state.hpp"

#include <algorithm>
#include <cmath>

namespace slme {

namespace {

struct SpectrumSplit {
  std::vector<Complex> all;
  double gap = 0.0;           // min |Re| over the decaying sector
  bool imaginary_modes = false;  // undamped oscillations present
  int null_count = 0;
};

SpectrumSplit analyze_spectrum(const Matrix& M, double threshold_rel) {
  Eigen::ComplexEigenSolver<Matrix> es(M, false);
  if (es.info() != Eigen::Success) throw NumericalError("Liouvillian eigendecomposition failed");
  SpectrumSplit out;
  out.all.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.all.begin(), out.all.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  double scale = 0.0;
  for (const Complex& z : out.all) scale = std::max(scale, std::abs(z));
  const double thr = std::max(1e-14, threshold_rel * scale);
  double gap = 0.0;
  for (const Complex& z : out.all) {
    if (z.real() < -thr) {
      const double decay = -z.real();
      gap = gap == 0.0 ? decay : std::min(gap, decay);
    } else if (std::abs(z.imag()) > thr) {
      out.imaginary_modes = true;
    } else {
      ++out.null_count;
    }
  }
  out.gap = gap;
  return out;
}

}  // namespace

SteadyState steady_state(const Liouvillian& L, double kernel_tol_rel) {
  if (!L.time_independent())
    throw std::invalid_argument("steady_state requires a time-independent generator; "
                                "use Liouvillian::stationary()");
  const int d = L.dim();
  const Matrix M = L.matrix();

  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double tol = kernel_tol_rel * smax;

  SteadyState out;
  for (int i = static_cast<int>(sv.size()) - 1; i >= 0; --i) {
    if (sv(i) > tol) break;
    const Matrix raw = unvec(svd.matrixV().col(i), d);
    // the kernel of a Hermiticity-preserving generator is closed under the
    // adjoint, so both split parts are kernel members; keep the larger one
    // (the Hermitian part can vanish for an anti-Hermitian kernel vector)
    Matrix herm = 0.5 * (raw + raw.adjoint());
    Matrix anti = Complex{0.0, 1.0} * 0.5 * (raw - raw.adjoint());
    Matrix rho = herm.norm() >= anti.norm() ? herm : anti;
    const Complex tr = rho.trace();
    if (std::abs(tr) > 1e-8 * rho.norm())
      rho /= tr;
    else
      rho /= rho.norm();  // traceless kernel direction, keep unit Frobenius norm
    out.states.push_back(std::move(rho));
  }
  out.kernel_dimension = static_cast<int>(out.states.size());
  if (out.kernel_dimension == 0)
    throw NumericalError("Liouvillian kernel numerically empty (smallest singular value " +
                         std::to_string(sv(sv.size() - 1)) + ")");
  out.degenerate = out.kernel_dimension > 1;
  out.residual = (M * vec(out.states.front())).norm();

  const SpectrumSplit spec = analyze_spectrum(M, kernel_tol_rel);
  out.gap = spec.gap;
  out.spectrum = spec.all;
  return out;
}

double relaxation_rate(const Liouvillian& L, double threshold_rel) {
  if (!L.time_independent())
    throw std::invalid_argument("relaxation_rate requires a time-independent generator");
  const SpectrumSplit spec = analyze_spectrum(L.matrix(), threshold_rel);
  if (spec.null_count > 1 && spec.imaginary_modes) return 0.0;
  return spec.gap;
}

Matrix two_level_steady_state(Complex gamma, Complex Omega) {
  if (!(gamma.real() > 0.0))
    throw std::invalid_argument("two-level stationary state requires Re gamma > 0");
  const Complex alpha = Complex{0.0, -1.0} * Omega / gamma;
  const double a2 = std::norm(alpha);
  const double n = 1.0 + 2.0 * a2;
  Matrix rho(2, 2);
  rho(0, 0) = (1.0 + a2) / n;
  rho(1, 1) = a2 / n;
  rho(1, 0) = alpha / n;
  rho(0, 1) = std::conj(alpha) / n;
  return rho;
}

Matrix three_level_single_laser_steady_state(Complex gamma1, Complex gamma2, Complex gamma3,
                                             Complex Omega) {
  const double a1 = gamma1.real();
  if (!(a1 > 0.0))
    throw std::invalid_argument("generic three-level form requires a1 > 0; "
                                "the lambda configuration has its own stationary state");
  const Complex gsum = gamma2 + gamma3;
  if (!(gsum.real() > 0.0))
    throw std::invalid_argument("three-level stationary state requires Re(gamma2+gamma3) > 0");
  const double r = gamma2.real() / a1;
  const Complex alpha = Complex{0.0, -1.0} * Omega / gsum;
  const double a2 = std::norm(alpha);
  const double n = 1.0 + (2.0 + r) * a2;
  Matrix rho = Matrix::Zero(3, 3);
  rho(0, 0) = (1.0 + a2) / n;
  rho(1, 1) = r * a2 / n;
  rho(2, 2) = a2 / n;
  rho(2, 0) = alpha / n;
  rho(0, 2) = std::conj(alpha) / n;
  return rho;
}

Vector lambda_dark_state(Complex Omega2, Complex Omega3) {
  const double n2 = std::norm(Omega2) + std::norm(Omega3);
  if (!(n2 > 0.0)) throw std::invalid_argument("dark state undefined for Omega2 = Omega3 = 0");
  Vector psi = Vector::Zero(3);
  psi(0) = -Omega2;
  psi(1) = Omega3;
  psi /= std::sqrt(n2);
  return psi;
}

Vector lambda_dark_state_conjugate_variant(Complex Omega2, Complex Omega3) {
  const double n2 = std::norm(Omega2) + std::norm(Omega3);
  if (!(n2 > 0.0)) throw std::invalid_argument("dark state undefined for Omega2 = Omega3 = 0");
  Vector psi = Vector::Zero(3);
  psi(0) = -std::conj(Omega3);
  psi(1) = std::conj(Omega2);
  psi /= std::sqrt(n2);
  return psi;
}

}  // namespace slme
