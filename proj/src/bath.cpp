#include "slme/bath.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace slme {

namespace {

constexpr double kPi = std::numbers::pi;

// Radial shell density h(k) = 4 pi k^2 |g(k)|^2.
double shell_density(const FormFactor& g, double k) {
  const double ab = std::abs(g(k));
  return 4.0 * kPi * k * k * ab * ab;
}

template <class F>
double composite_simpson(const F& f, double a, double b, long cells) {
  const double h = (b - a) / static_cast<double>(cells);
  double sum = f(a) + f(b);
  double odd = 0.0, even = 0.0;
  for (long i = 1; i < 2 * cells; ++i) {
    const double x = a + 0.5 * h * static_cast<double>(i);
    if (i % 2 == 1)
      odd += f(x);   // cell midpoints, weight 4
    else
      even += f(x);  // interior cell edges, weight 2
  }
  return (h / 6.0) * (sum + 4.0 * odd + 2.0 * even);
}

// Doubling composite Simpson until successive refinements agree.
template <class F>
double refine_to_tolerance(const F& f, double a, double b, const QuadratureSettings& quad,
                           double* last_change) {
  if (!(b > a)) {
    if (last_change) *last_change = 0.0;
    return 0.0;
  }
  long cells = std::max(2, quad.initial_cells);
  double prev = composite_simpson(f, a, b, cells);
  // coarse integrand magnitude, used to anchor the relative test near zero
  double mag = 0.0;
  {
    const double h = (b - a) / 32.0;
    for (int i = 0; i <= 32; ++i) mag += std::abs(f(a + h * i));
    mag *= h;
  }
  for (int pass = 0; pass < quad.max_doublings; ++pass) {
    cells *= 2;
    const double next = composite_simpson(f, a, b, cells);
    const double change = std::abs(next - prev);
    const double scale = std::max(std::abs(next), mag);
    if (change <= std::max(quad.abs_tol, quad.rel_tol * scale)) {
      if (last_change) *last_change = change;
      return next;
    }
    prev = next;
  }
  std::ostringstream msg;
  msg << "quadrature did not reach tolerance " << quad.rel_tol << " on [" << a << ", " << b
      << "] after " << quad.max_doublings << " refinements";
  throw NumericalError(msg.str());
}

}  // namespace

Susceptibility susceptibility(const FormFactor& g, double omega, const QuadratureSettings& quad) {
  if (!(omega > 0.0)) throw std::invalid_argument("susceptibility requires omega > 0");
  const double kmax = g.cutoff();

  Susceptibility out;
  out.shell_outside = omega >= kmax;

  double re = 0.0;
  if (!out.shell_outside) {
    const double ab = std::abs(g(omega));
    re = kPi * 4.0 * kPi * omega * omega * ab * ab;
  }

  double im_integral = 0.0;
  double err1 = 0.0, err2 = 0.0;
  if (!out.shell_outside) {
    const double h_omega = shell_density(g, omega);
    const double fd = std::min(std::max(1e-7, 1e-7 * omega), 0.5 * omega);
    // one-sided slopes: the profile may have a corner exactly at the shell
    const double slope_left = (h_omega - shell_density(g, omega - fd)) / fd;
    const double slope_right = (shell_density(g, omega + fd) - h_omega) / fd;
    auto subtracted = [&](double k, double slope) {
      const double dk = k - omega;
      if (std::abs(dk) < fd) return slope;
      return (shell_density(g, k) - h_omega) / dk;
    };
    auto left = [&](double k) { return subtracted(k, slope_left); };
    auto right = [&](double k) { return subtracted(k, slope_right); };
    im_integral = refine_to_tolerance(left, 0.0, omega, quad, &err1) +
                  refine_to_tolerance(right, omega, kmax, quad, &err2) +
                  h_omega * std::log((kmax - omega) / omega);
  } else {
    // pole outside the support; clip if it sits on the boundary
    double upper = kmax;
    if (omega <= kmax * (1.0 + 1e-12)) upper = kmax * (1.0 - 1e-10);
    auto plain = [&](double k) { return shell_density(g, k) / (k - omega); };
    im_integral = refine_to_tolerance(plain, 0.0, upper, quad, &err1);
  }

  out.gamma = Complex{re, -im_integral};
  out.im_error = err1 + err2;
  return out;
}

Complex rabi_coefficient(const FormFactor& g, const FormFactor& f, double omega_l) {
  if (!(omega_l > 0.0)) throw std::invalid_argument("rabi_coefficient requires omega_l > 0");
  return 2.0 * kPi * 4.0 * kPi * omega_l * omega_l * std::conj(g(omega_l)) * f(omega_l);
}

bool BathCoefficients::time_independent() const {
  for (const auto& d : drives)
    if (d && !d->window.always_on) return false;
  return true;
}

BathCoefficients BathCoefficients::direct(const TransitionSet& ts, std::vector<Complex> gamma) {
  if (static_cast<int>(gamma.size()) != ts.size())
    throw std::invalid_argument("gamma list size must match the transition set");
  BathCoefficients out;
  out.frequencies = ts.frequencies();
  out.gamma = std::move(gamma);
  out.drives.resize(out.frequencies.size());
  return out;
}

BathCoefficients rabi_frequencies(const Atom& atom, const std::vector<LaserSpec>& lasers,
                                  const FormFactor& g, const QuadratureSettings& quad,
                                  double merge_tol) {
  const TransitionSet ts = transition_operators(atom, merge_tol);
  BathCoefficients out;
  out.frequencies = ts.frequencies();
  out.gamma.reserve(ts.size());
  for (const auto& m : ts.modes()) out.gamma.push_back(susceptibility(g, m.omega, quad).gamma);
  out.drives.resize(ts.size());
  assign_drives(ts, out, lasers, &g, merge_tol);
  return out;
}

void assign_drives(const TransitionSet& ts, BathCoefficients& coeffs,
                   const std::vector<LaserSpec>& lasers, const FormFactor* g,
                   double merge_tol) {
  coeffs.drives.resize(ts.size());
  for (size_t l = 0; l < lasers.size(); ++l) {
    const LaserSpec& laser = lasers[l];
    const int i = ts.index_of(laser.omega, merge_tol);
    if (i < 0) {
      std::ostringstream msg;
      msg << "laser " << l << " at frequency " << laser.omega
          << " is resonant with no (unique) Bohr frequency";
      throw std::invalid_argument(msg.str());
    }
    if (coeffs.drives[i]) {
      std::ostringstream msg;
      msg << "two lasers mapped to the same Bohr frequency " << ts.mode(i).omega;
      throw std::invalid_argument(msg.str());
    }
    const TransitionMode& m = ts.mode(i);
    Complex c;
    if (laser.rabi_override) {
      Complex d{0.0, 0.0};
      if (laser.target) {
        for (const auto& p : m.pairs)
          if (p.upper == laser.target->first && p.lower == laser.target->second) d = p.amplitude;
        if (d == Complex{0.0, 0.0})
          throw std::invalid_argument("laser target pair does not drive its resonant frequency");
      } else if (m.pairs.size() == 1) {
        d = m.pairs.front().amplitude;
      } else {
        throw std::invalid_argument(
            "rabi override on a merged frequency requires an explicit target pair");
      }
      c = *laser.rabi_override / d;
    } else if (laser.intensity) {
      if (!g)
        throw std::invalid_argument("laser intensity profile requires a bath form factor");
      c = rabi_coefficient(*g, *laser.intensity, m.omega);
    } else {
      throw std::invalid_argument("laser needs either a rabi override or an intensity profile");
    }
    coeffs.drives[i] = Drive{c, laser.window};
  }
}

}  // namespace slme
