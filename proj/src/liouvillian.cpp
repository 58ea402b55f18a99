#include "slme/liouvillian.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace slme {

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw std::invalid_argument("vector length does not match dimension");
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Liouvillian::Liouvillian(TransitionSet transitions, BathCoefficients coefficients)
    : transitions_(std::move(transitions)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != transitions_.size() ||
      static_cast<int>(coeffs_.drives.size()) != transitions_.size())
    throw std::invalid_argument("coefficient list size must match the transition set");
  for (int i = 0; i < transitions_.size(); ++i) {
    const double w = transitions_.mode(i).omega;
    if (std::abs(coeffs_.frequencies[i] - w) > 1e-9 * std::max(1.0, w))
      throw std::invalid_argument("coefficient frequencies do not match the transition set");
    if (coeffs_.gamma[i].real() < 0.0)
      throw std::invalid_argument("Re gamma must be nonnegative (decay rate)");
  }
  if (transitions_.size() > 63)
    throw std::invalid_argument("too many transition modes");

  const int d = dim();
  lamb_shift_ = Matrix::Zero(d, d);
  dag_d_.reserve(transitions_.size());
  for (int i = 0; i < transitions_.size(); ++i) {
    const Matrix& D = transitions_.mode(i).op;
    dag_d_.push_back(D.adjoint() * D);
    lamb_shift_ += coeffs_.gamma[i].imag() * dag_d_.back();
  }
}

Liouvillian::Liouvillian(const Liouvillian& other)
    : transitions_(other.transitions_),
      coeffs_(other.coeffs_),
      dag_d_(other.dag_d_),
      lamb_shift_(other.lamb_shift_) {}

Liouvillian& Liouvillian::operator=(const Liouvillian& other) {
  if (this != &other) {
    transitions_ = other.transitions_;
    coeffs_ = other.coeffs_;
    dag_d_ = other.dag_d_;
    lamb_shift_ = other.lamb_shift_;
    std::lock_guard<std::mutex> lock(cache_mutex_);
    matrix_cache_.clear();
  }
  return *this;
}

Liouvillian::Liouvillian(Liouvillian&& other) noexcept
    : transitions_(std::move(other.transitions_)),
      coeffs_(std::move(other.coeffs_)),
      dag_d_(std::move(other.dag_d_)),
      lamb_shift_(std::move(other.lamb_shift_)) {}

Liouvillian& Liouvillian::operator=(Liouvillian&& other) noexcept {
  if (this != &other) {
    transitions_ = std::move(other.transitions_);
    coeffs_ = std::move(other.coeffs_);
    dag_d_ = std::move(other.dag_d_);
    lamb_shift_ = std::move(other.lamb_shift_);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    matrix_cache_.clear();
  }
  return *this;
}

std::uint64_t Liouvillian::active_mask(double t) const {
  std::uint64_t mask = 0;
  for (int i = 0; i < coeffs_.size(); ++i)
    if (coeffs_.drives[i] && coeffs_.drives[i]->window.contains(t)) mask |= (1ull << i);
  return mask;
}

std::uint64_t Liouvillian::all_on_mask() const {
  std::uint64_t mask = 0;
  for (int i = 0; i < coeffs_.size(); ++i)
    if (coeffs_.drives[i]) mask |= (1ull << i);
  return mask;
}

Matrix Liouvillian::hamiltonian_for_mask(std::uint64_t mask) const {
  Matrix h = lamb_shift_;
  for (int i = 0; i < coeffs_.size(); ++i) {
    if (!(mask & (1ull << i))) continue;
    const Complex c = coeffs_.drives[i]->c;
    const Matrix& D = transitions_.mode(i).op;
    h += std::conj(c) * D + c * D.adjoint();
  }
  return h;
}

Matrix Liouvillian::dissipator(const Matrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim())
    throw std::invalid_argument("dimension mismatch");
  Matrix out = Matrix::Zero(dim(), dim());
  for (int i = 0; i < transitions_.size(); ++i) {
    const double a = coeffs_.gamma[i].real();
    if (a == 0.0) continue;
    const Matrix& D = transitions_.mode(i).op;
    out += a * (2.0 * D * rho * D.adjoint() - rho * dag_d_[i] - dag_d_[i] * rho);
  }
  return out;
}

Matrix Liouvillian::effective_hamiltonian(double t) const {
  return hamiltonian_for_mask(active_mask(t));
}

Matrix Liouvillian::effective_hamiltonian() const {
  return hamiltonian_for_mask(all_on_mask());
}

Matrix Liouvillian::apply_mask(const Matrix& rho, std::uint64_t mask) const {
  const Matrix h = hamiltonian_for_mask(mask);
  const Complex i_unit{0.0, 1.0};
  return dissipator(rho) - i_unit * (h * rho - rho * h);
}

Matrix Liouvillian::apply(const Matrix& rho, double t) const {
  return apply_mask(rho, active_mask(t));
}

Matrix Liouvillian::apply(const Matrix& rho) const {
  return apply_mask(rho, all_on_mask());
}

Matrix Liouvillian::heisenberg_mask(const Matrix& X, std::uint64_t mask) const {
  if (X.rows() != dim() || X.cols() != dim())
    throw std::invalid_argument("dimension mismatch");
  const Matrix h = hamiltonian_for_mask(mask);
  const Complex i_unit{0.0, 1.0};
  Matrix out = i_unit * (h * X - X * h);
  for (int i = 0; i < transitions_.size(); ++i) {
    const double a = coeffs_.gamma[i].real();
    if (a == 0.0) continue;
    const Matrix& D = transitions_.mode(i).op;
    out += a * (2.0 * D.adjoint() * X * D - X * dag_d_[i] - dag_d_[i] * X);
  }
  return out;
}

Matrix Liouvillian::heisenberg(const Matrix& X, double t) const {
  return heisenberg_mask(X, active_mask(t));
}

Matrix Liouvillian::heisenberg(const Matrix& X) const {
  return heisenberg_mask(X, all_on_mask());
}

const Matrix& Liouvillian::matrix_for_mask(std::uint64_t mask) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = matrix_cache_.find(mask);
  if (it != matrix_cache_.end()) return *it->second;

  const int d = dim();
  const Matrix id = Matrix::Identity(d, d);
  Matrix m = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < transitions_.size(); ++i) {
    const double a = coeffs_.gamma[i].real();
    if (a == 0.0) continue;
    const Matrix& D = transitions_.mode(i).op;
    m += a * (2.0 * Eigen::kroneckerProduct(D.conjugate(), D).eval() -
              Eigen::kroneckerProduct(dag_d_[i].transpose(), id).eval() -
              Eigen::kroneckerProduct(id, dag_d_[i]).eval());
  }
  const Matrix h = hamiltonian_for_mask(mask);
  const Complex i_unit{0.0, 1.0};
  m -= i_unit * (Eigen::kroneckerProduct(id, h).eval() -
                 Eigen::kroneckerProduct(h.transpose(), id).eval());

  auto stored = std::make_unique<const Matrix>(std::move(m));
  const Matrix& ref = *stored;
  matrix_cache_.emplace(mask, std::move(stored));
  return ref;
}

Matrix Liouvillian::matrix(double t) const { return matrix_for_mask(active_mask(t)); }

Matrix Liouvillian::matrix() const { return matrix_for_mask(all_on_mask()); }

Liouvillian Liouvillian::stationary() const {
  BathCoefficients c = coeffs_;
  for (auto& d : c.drives)
    if (d) d->window = Window::always();
  return Liouvillian(transitions_, std::move(c));
}

std::vector<double> Liouvillian::breakpoints(double t0, double t1) const {
  std::vector<double> pts;
  for (const auto& d : coeffs_.drives) {
    if (!d || d->window.always_on) continue;
    if (d->window.start > t0 && d->window.start < t1) pts.push_back(d->window.start);
    if (d->window.end > t0 && d->window.end < t1) pts.push_back(d->window.end);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double Liouvillian::coefficient_scale() const {
  double s = 1.0;
  for (int i = 0; i < coeffs_.size(); ++i) {
    s = std::max(s, std::abs(coeffs_.gamma[i]));
    if (coeffs_.drives[i]) {
      for (const auto& p : transitions_.mode(i).pairs)
        s = std::max(s, std::abs(coeffs_.drives[i]->c * p.amplitude));
    }
  }
  return s;
}

}  // namespace slme
