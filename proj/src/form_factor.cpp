#include "slme/form_factor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace slme {

FormFactor FormFactor::gaussian(Complex amplitude, double width, double cutoff) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian width must be positive");
  if (!(cutoff > 0.0)) throw std::invalid_argument("form factor cutoff must be positive");
  FormFactor g;
  g.model_ = Model::Gaussian;
  g.amplitude_ = amplitude;
  g.width_ = width;
  g.cutoff_ = cutoff;
  return g;
}

FormFactor FormFactor::lorentzian(Complex amplitude, double width, double cutoff) {
  if (!(width > 0.0)) throw std::invalid_argument("lorentzian width must be positive");
  if (!(cutoff > 0.0)) throw std::invalid_argument("form factor cutoff must be positive");
  FormFactor g;
  g.model_ = Model::Lorentzian;
  g.amplitude_ = amplitude;
  g.width_ = width;
  g.cutoff_ = cutoff;
  return g;
}

FormFactor FormFactor::table(std::vector<double> k, std::vector<double> value, double cutoff) {
  if (k.size() < 2 || k.size() != value.size())
    throw std::invalid_argument("table profile needs >= 2 (k, value) samples");
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0.0) throw std::invalid_argument("table abscissae must be nonnegative");
    if (i > 0 && !(k[i] > k[i - 1]))
      throw std::invalid_argument("table abscissae must be strictly ascending");
  }
  FormFactor g;
  g.model_ = Model::Table;
  g.cutoff_ = cutoff > 0.0 ? cutoff : k.back();
  if (!(g.cutoff_ > 0.0)) throw std::invalid_argument("form factor cutoff must be positive");
  g.ks_ = std::move(k);
  g.values_ = std::move(value);
  return g;
}

FormFactor FormFactor::table_from_text(const std::string& text, double cutoff) {
  std::vector<double> ks, vs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double k = 0.0, v = 0.0;
    if (row >> k >> v) {
      ks.push_back(k);
      vs.push_back(v);
    }
  }
  return table(std::move(ks), std::move(vs), cutoff);
}

Complex FormFactor::operator()(double k) const {
  if (k < 0.0 || k > cutoff_) return {0.0, 0.0};
  switch (model_) {
    case Model::Gaussian:
      return amplitude_ * std::exp(-k * k / (2.0 * width_ * width_));
    case Model::Lorentzian:
      return amplitude_ * width_ * width_ / (k * k + width_ * width_);
    case Model::Table: {
      if (k < ks_.front() || k > ks_.back()) return {0.0, 0.0};
      const auto it = std::upper_bound(ks_.begin(), ks_.end(), k);
      if (it == ks_.begin()) return amplitude_ * values_.front();
      const size_t i = static_cast<size_t>(it - ks_.begin());
      if (i >= ks_.size()) return amplitude_ * values_.back();
      const double t = (k - ks_[i - 1]) / (ks_[i] - ks_[i - 1]);
      return amplitude_ * ((1.0 - t) * values_[i - 1] + t * values_[i]);
    }
  }
  return {0.0, 0.0};
}

FormFactor FormFactor::scaled(Complex s) const {
  FormFactor g = *this;
  g.amplitude_ *= s;
  return g;
}

}  // namespace slme
