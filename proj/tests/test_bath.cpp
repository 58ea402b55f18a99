#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "slme/bath.hpp"

using namespace slme;
using oracles::kPi;

TEST_CASE("decay rate of the unit gaussian matches the shell formula") {
  // |g(k)|^2 = exp(-k^2): Re gamma(1) = 4 pi^2 / e
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 1.0, 12.0);
  const double expected = 4.0 * kPi * kPi * std::exp(-1.0);
  const Susceptibility s = susceptibility(g, 1.0);
  CHECK(s.gamma.real() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(!s.shell_outside);

  // independent fine-grid shell quadrature
  CHECK(oracles::shell_decay_rate(g, 1.0) == doctest::Approx(expected).epsilon(1e-6));
  // independent 3-dimensional narrow-shell quadrature
  CHECK(oracles::shell_decay_rate_3d(g, 1.0) == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("shell outside the profile support") {
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 1.0, 0.5);
  const Susceptibility s = susceptibility(g, 1.0);
  CHECK(s.shell_outside);
  CHECK(s.gamma.real() == 0.0);

  // profile identically zero near k = omega: table supported on [2, 3]
  FormFactor t = FormFactor::table({2.0, 2.5, 3.0}, {1.0, 1.0, 1.0}, 3.0);
  const Susceptibility st = susceptibility(t, 1.0);
  CHECK(st.gamma.real() == 0.0);
}

TEST_CASE("even shell density about omega gives vanishing shift") {
  // choose g so that h(k) = 4 pi k^2 |g|^2 is even about omega = 1 on a
  // symmetric window: |g(k)|^2 = exp(-4 (k-1)^2) / k^2
  const double omega = 1.0, half = 0.5;
  const int n = 4001;
  std::vector<double> ks(n), vs(n);
  for (int i = 0; i < n; ++i) {
    const double k = omega - half + 2.0 * half * i / (n - 1);
    ks[i] = k;
    vs[i] = std::exp(-2.0 * (k - omega) * (k - omega)) / k;
  }
  FormFactor g = FormFactor::table(ks, vs, omega + half);
  const Susceptibility s = susceptibility(g, omega);
  CHECK(std::abs(s.gamma.imag()) < 1e-5);
  CHECK(s.gamma.real() == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-6));
}

TEST_CASE("shift part agrees with an independent principal-value route") {
  const FormFactor profiles[] = {
      FormFactor::gaussian(Complex{1.0, 0.0}, 1.0, 12.0),
      FormFactor::lorentzian(Complex{0.8, 0.0}, 1.5, 20.0),
  };
  for (const auto& g : profiles) {
    for (double w : {0.7, 1.0, 2.2}) {
      auto h = [&](double k) {
        const double a = std::abs(g(k));
        return 4.0 * oracles::kPi * k * k * a * a;
      };
      const double pv = oracles::pv_symmetric_pairs(h, w, g.cutoff());
      const double im = susceptibility(g, w).gamma.imag();
      CHECK(im == doctest::Approx(-pv).epsilon(1e-7));
    }
  }
}

TEST_CASE("shift part is stable under grid refinement") {
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 1.0, 12.0);
  QuadratureSettings quad;
  quad.rel_tol = 1e-10;
  quad.initial_cells = 64;
  const double im1 = susceptibility(g, 1.0, quad).gamma.imag();
  quad.initial_cells = 128;
  const double im2 = susceptibility(g, 1.0, quad).gamma.imag();
  CHECK(std::abs(im1 - im2) <= 1e-8 * std::abs(im1));
  CHECK(im1 != 0.0);
}

TEST_CASE("quadrature failure is reported") {
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 1.0, 12.0);
  QuadratureSettings quad;
  quad.initial_cells = 2;
  quad.max_doublings = 0;
  quad.rel_tol = 1e-14;
  quad.abs_tol = 0.0;
  CHECK_THROWS_AS(susceptibility(g, 1.0, quad), NumericalError);
}

TEST_CASE("susceptibility scales quadratically in the profile amplitude") {
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 1.2, 15.0);
  const Complex s{0.7, -1.1};
  const Complex base = susceptibility(g, 1.3).gamma;
  const Complex scaled = susceptibility(g.scaled(s), 1.3).gamma;
  CHECK(std::abs(scaled - std::norm(s) * base) <= 1e-8 * std::abs(base) * std::norm(s));
}

TEST_CASE("field coefficient: matched profiles give twice the decay rate") {
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 1.0, 12.0);
  const Complex c = rabi_coefficient(g, g, 1.0);
  const double re_gamma = susceptibility(g, 1.0).gamma.real();
  CHECK(std::abs(c - Complex{2.0 * re_gamma, 0.0}) <= 1e-10 * std::abs(c));
}

TEST_CASE("field coefficient phase and shell value") {
  // g real with g(1) = 1, f = i g: c = 8 pi^2 i
  FormFactor g = FormFactor::gaussian(Complex{std::exp(0.5), 0.0}, 1.0, 12.0);
  CHECK(std::abs(g(1.0) - Complex{1.0, 0.0}) < 1e-14);
  FormFactor f = g.scaled(Complex{0.0, 1.0});
  const Complex c = rabi_coefficient(g, f, 1.0);
  const Complex expected{0.0, 8.0 * kPi * kPi};
  CHECK(std::abs(c - expected) <= 1e-12 * std::abs(expected));

  // cross-check against the 3-dimensional delta-shell quadrature
  const Complex c3d = oracles::field_coefficient_3d(g, f, 1.0);
  CHECK(std::abs(c3d - c) <= 1e-6 * std::abs(c));

  // conjugate-linear in g, linear in f
  const Complex s{0.4, 2.0};
  CHECK(std::abs(rabi_coefficient(g.scaled(s), f, 1.0) - std::conj(s) * c) <=
        1e-12 * std::abs(c) * std::abs(s));
  CHECK(std::abs(rabi_coefficient(g, f.scaled(s), 1.0) - s * c) <=
        1e-12 * std::abs(c) * std::abs(s));

  // vanishing resonant amplitude
  FormFactor zero_near_shell = FormFactor::table({2.0, 3.0}, {1.0, 1.0}, 3.0);
  CHECK(rabi_coefficient(g, zero_near_shell, 1.0) == Complex{0.0, 0.0});
}

TEST_CASE("decay rate is nonnegative across profiles and frequencies") {
  const FormFactor profiles[] = {
      FormFactor::gaussian(Complex{0.0, -2.0}, 0.7, 10.0),
      FormFactor::lorentzian(Complex{1.5, 0.5}, 2.0, 25.0),
      FormFactor::table({0.0, 1.0, 2.0, 4.0}, {0.3, -0.8, 0.5, 0.0}, 4.0),
  };
  for (const auto& g : profiles)
    for (double w : {0.3, 1.0, 2.7}) CHECK(susceptibility(g, w).gamma.real() >= 0.0);
}

TEST_CASE("coefficient assembly for a driven two-level atom") {
  Atom atom({0.0, 1.0}, {{1, 0, Complex{1.0, 0.0}}});
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 1.0, 10.0);
  LaserSpec laser;
  laser.omega = 1.0;
  laser.rabi_override = Complex{0.0, 1.0};
  BathCoefficients coeffs = rabi_frequencies(atom, {laser}, g);
  REQUIRE(coeffs.size() == 1);
  CHECK(coeffs.gamma[0].real() == doctest::Approx(4.0 * kPi * kPi * std::exp(-1.0)));
  REQUIRE(coeffs.drives[0].has_value());
  CHECK(coeffs.drives[0]->c == Complex{0.0, 1.0});  // d = 1 so c = Omega
  CHECK(coeffs.time_independent());
}

TEST_CASE("coefficient assembly for the lambda atom") {
  Atom atom({0.0, 1.0, 3.0},
            {{2, 1, Complex{2.0, 0.0}}, {2, 0, Complex{1.0, 0.0}}});
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 2.0, 30.0);
  LaserSpec l2, l3;
  l2.omega = 2.0;
  l2.rabi_override = Complex{1.0, 0.0};
  l3.omega = 3.0;
  l3.rabi_override = Complex{0.0, 2.0};
  BathCoefficients coeffs = rabi_frequencies(atom, {l2, l3}, g);
  REQUIRE(coeffs.size() == 2);
  // Omega = c d recovers the overrides
  CHECK(coeffs.drives[0]->c * Complex{2.0, 0.0} == Complex{1.0, 0.0});
  CHECK(coeffs.drives[1]->c * Complex{1.0, 0.0} == Complex{0.0, 2.0});

  // vacuum case: no lasers means no drives anywhere
  BathCoefficients vac = rabi_frequencies(atom, {}, g);
  for (const auto& d : vac.drives) CHECK(!d.has_value());
}

TEST_CASE("laser assignment errors") {
  Atom atom({0.0, 1.0, 3.0},
            {{2, 1, Complex{1.0, 0.0}}, {2, 0, Complex{1.0, 0.0}}});
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 2.0, 30.0);
  LaserSpec a, b;
  a.omega = 2.0;
  a.rabi_override = Complex{1.0, 0.0};
  b = a;
  CHECK_THROWS_AS(rabi_frequencies(atom, {a, b}, g), std::invalid_argument);
  LaserSpec off;
  off.omega = 1.0;  // the (1,0) transition is not coupled
  off.rabi_override = Complex{1.0, 0.0};
  CHECK_THROWS_AS(rabi_frequencies(atom, {off}, g), std::invalid_argument);
  LaserSpec bare;
  bare.omega = 2.0;  // neither override nor intensity
  CHECK_THROWS_AS(rabi_frequencies(atom, {bare}, g), std::invalid_argument);
}

TEST_CASE("intensity-profile lasers go through the shell formula") {
  Atom atom({0.0, 1.0}, {{1, 0, Complex{1.0, 0.0}}});
  FormFactor g = FormFactor::gaussian(Complex{1.0, 0.0}, 1.0, 10.0);
  LaserSpec laser;
  laser.omega = 1.0;
  laser.intensity = FormFactor::gaussian(Complex{0.5, 0.0}, 2.0, 10.0);
  laser.window = Window::interval(0.0, 5.0);
  BathCoefficients coeffs = rabi_frequencies(atom, {laser}, g);
  CHECK(coeffs.drives[0]->c == rabi_coefficient(g, *laser.intensity, 1.0));
  CHECK(!coeffs.time_independent());
}
