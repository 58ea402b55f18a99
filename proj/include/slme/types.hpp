#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace slme {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Rectangular pulse window [start, end], or an always-on drive.
struct Window {
  double start = 0.0;
  double end = 0.0;
  bool always_on = true;

  static Window always() { return Window{}; }
  static Window interval(double s, double t) {
    if (!(s < t)) throw std::invalid_argument("window requires start < end");
    return Window{s, t, false};
  }

  bool contains(double t) const {
    return always_on || (start <= t && t <= end);
  }
};

/// Configuration-level failure: malformed document, unknown key, broken
/// cross reference. The message names the offending key path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: non-convergent quadrature, step-size underflow,
/// empty Liouvillian kernel, trace drift past the hard limit.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// The stationary subspace is more than one-dimensional where a unique
/// state was required.
class DegenerateKernelError : public NumericalError {
 public:
  explicit DegenerateKernelError(const std::string& what) : NumericalError(what) {}
};

}  // namespace slme
