#pragma once

#include <string>
#include <vector>

#include "slme/types.hpp"

namespace slme {

/// Radial coupling profile k -> g(k), k >= 0, with dispersion w(k) = |k|.
/// Treated as zero beyond the cutoff K_max. Gaussian and Lorentzian models
/// take a complex amplitude; tables hold real samples with linear
/// interpolation (zero outside the sampled range).
class FormFactor {
 public:
  enum class Model { Gaussian, Lorentzian, Table };

  static FormFactor gaussian(Complex amplitude, double width, double cutoff);
  static FormFactor lorentzian(Complex amplitude, double width, double cutoff);

  /// Sample points must be >= 2 with strictly ascending k >= 0.
  /// cutoff defaults to the last sample abscissa.
  static FormFactor table(std::vector<double> k, std::vector<double> value,
                          double cutoff = 0.0);

  /// Two-column numeric text (k, value); '#' starts a comment.
  static FormFactor table_from_text(const std::string& text, double cutoff = 0.0);

  Complex operator()(double k) const;
  double cutoff() const { return cutoff_; }
  Model model() const { return model_; }

  /// Same profile multiplied by a complex scalar.
  FormFactor scaled(Complex s) const;

 private:
  FormFactor() = default;

  Model model_ = Model::Gaussian;
  Complex amplitude_{1.0, 0.0};
  double width_ = 1.0;
  double cutoff_ = 0.0;
  std::vector<double> ks_;
  std::vector<double> values_;
};

}  // namespace slme
