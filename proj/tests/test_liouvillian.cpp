#include <doctest.h>

#include "oracles.hpp"
#include "slme/liouvillian.hpp"
#include "slme/density.hpp"

using namespace slme;

namespace {

Liouvillian two_level(Complex gamma, Complex Omega, Window w = Window::always()) {
  Atom atom({0.0, 1.0}, {{1, 0, Complex{1.0, 0.0}}});
  TransitionSet ts = transition_operators(atom);
  BathCoefficients coeffs = BathCoefficients::direct(ts, {gamma});
  if (Omega != Complex{0.0, 0.0}) coeffs.drives[0] = Drive{Omega, w};
  return Liouvillian(ts, std::move(coeffs));
}

// generic three-level atom with complex dipoles and all three channels open
struct ThreeLevel {
  Atom atom;
  TransitionSet ts;
  Liouvillian L;
  std::array<Complex, 3> d;
  std::array<Complex, 3> gamma_w;  // per-frequency susceptibilities

  static ThreeLevel make(std::array<Complex, 3> d, std::array<Complex, 3> gamma_w,
                         Complex c3 = Complex{0.0, 0.0}) {
    Atom atom({0.0, 1.0, 3.0}, {{1, 0, d[0]}, {2, 1, d[1]}, {2, 0, d[2]}});
    TransitionSet ts = transition_operators(atom);
    BathCoefficients coeffs =
        BathCoefficients::direct(ts, {gamma_w[0], gamma_w[1], gamma_w[2]});
    if (c3 != Complex{0.0, 0.0}) coeffs.drives[2] = Drive{c3, Window::always()};
    Liouvillian L(ts, std::move(coeffs));
    return ThreeLevel{std::move(atom), std::move(ts), std::move(L), d, gamma_w};
  }
};

}  // namespace

TEST_CASE("two-level dissipator on the excited projector") {
  Liouvillian L = two_level(Complex{0.7, 0.0}, Complex{0.0, 0.0});
  Matrix rho = level_projector(2, 1);
  Matrix out = L.dissipator(rho);
  Matrix expected(2, 2);
  expected << Complex{2.0 * 0.7, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
      Complex{-2.0 * 0.7, 0.0};
  CHECK((out - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("dissipator is traceless") {
  std::mt19937 rng(42);
  Liouvillian L = two_level(Complex{1.0, 0.3}, Complex{0.5, -0.2});
  for (int i = 0; i < 20; ++i) {
    Matrix rho = oracles::random_density(2, rng);
    CHECK(std::abs(L.dissipator(rho).trace()) < 1e-14);
  }
}

TEST_CASE("three-level dissipator matches the expanded generic form") {
  std::mt19937 rng(7);
  auto sys = ThreeLevel::make({Complex{0.4, 0.9}, Complex{-1.1, 0.2}, Complex{0.8, -0.3}},
                              {Complex{0.9, 0.4}, Complex{1.2, -0.1}, Complex{0.6, 0.8}});
  // weighted rates a_j = Re(gamma_wj) |d_j|^2
  const double a1 = sys.gamma_w[0].real() * std::norm(sys.d[0]);
  const double a2 = sys.gamma_w[1].real() * std::norm(sys.d[1]);
  const double a3 = sys.gamma_w[2].real() * std::norm(sys.d[2]);
  for (int i = 0; i < 10; ++i) {
    Matrix rho = oracles::random_density(3, rng);
    Matrix expected = Matrix::Zero(3, 3);
    expected += 2.0 * (a1 * rho(1, 1).real() + a3 * rho(2, 2).real()) * level_projector(3, 0);
    expected += 2.0 * a2 * rho(2, 2).real() * level_projector(3, 1);
    expected -= a1 * (rho * level_projector(3, 1) + level_projector(3, 1) * rho);
    expected -= (a2 + a3) * (rho * level_projector(3, 2) + level_projector(3, 2) * rho);
    // the diagonal population terms above use Hermiticity of rho
    CHECK((sys.L.dissipator(rho) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("effective hamiltonian of the driven two-level atom") {
  const Complex gamma{0.8, 0.25};  // decay 0.8, shift 0.25
  const Complex Omega{0.3, -0.6};
  Liouvillian L = two_level(gamma, Omega);
  Matrix h = L.effective_hamiltonian();
  Matrix expected(2, 2);
  expected << Complex{0.0, 0.0}, std::conj(Omega), Omega, Complex{0.25, 0.0};
  CHECK((h - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("effective hamiltonian outside the pulse keeps only the shift terms") {
  const Complex gamma{1.0, 0.4};
  Liouvillian L = two_level(gamma, Complex{2.0, 0.0}, Window::interval(1.0, 2.0));
  Matrix off = L.effective_hamiltonian(0.5);
  CHECK(off(0, 1) == Complex{0.0, 0.0});
  CHECK(off(1, 1) == Complex{0.4, 0.0});
  Matrix on = L.effective_hamiltonian(1.5);
  CHECK(on(0, 1) == Complex{2.0, 0.0});
  CHECK(!L.time_independent());
  CHECK(L.stationary().time_independent());
  auto edges = L.breakpoints(0.0, 5.0);
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == 1.0);
  CHECK(edges[1] == 2.0);
}

TEST_CASE("lambda-atom effective hamiltonian matches the display form") {
  const Complex O2{0.7, 0.1}, O3{-0.2, 1.1};
  const Complex g2{1.0, 0.3}, g3{0.5, -0.2};
  Atom atom({0.0, 1.0, 3.0}, {{2, 1, Complex{1.0, 0.0}}, {2, 0, Complex{1.0, 0.0}}});
  TransitionSet ts = transition_operators(atom);
  BathCoefficients coeffs = BathCoefficients::direct(ts, {g2, g3});
  coeffs.drives[0] = Drive{O2, Window::always()};
  coeffs.drives[1] = Drive{O3, Window::always()};
  Liouvillian L(ts, std::move(coeffs));

  Matrix expected = Matrix::Zero(3, 3);
  expected(2, 2) = Complex{g2.imag() + g3.imag(), 0.0};  // b2 + b3
  expected(2, 1) = O2;
  expected(1, 2) = std::conj(O2);
  expected(2, 0) = O3;
  expected(0, 2) = std::conj(O3);
  CHECK((L.effective_hamiltonian() - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("driven effective hamiltonian does not commute with the free hamiltonian") {
  Atom atom({0.0, 1.0}, {{1, 0, Complex{1.0, 0.0}}});
  Liouvillian driven = two_level(Complex{1.0, 0.2}, Complex{0.5, 0.0});
  Matrix ha = atom.hamiltonian();
  Matrix h = driven.effective_hamiltonian();
  CHECK((h * ha - ha * h).cwiseAbs().maxCoeff() > 0.1);

  Liouvillian undriven = two_level(Complex{1.0, 0.2}, Complex{0.0, 0.0});
  Matrix h0 = undriven.effective_hamiltonian();
  CHECK((h0 * ha - ha * h0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("generator annihilates the two-level stationary state") {
  const Complex gamma{1.0, 0.0};
  const Complex Omega{0.0, 1.0};
  Liouvillian L = two_level(gamma, Omega);
  // alpha = -i Omega / gamma = 1
  Matrix rho(2, 2);
  rho << Complex{2.0 / 3.0, 0.0}, Complex{1.0 / 3.0, 0.0}, Complex{1.0 / 3.0, 0.0},
      Complex{1.0 / 3.0, 0.0};
  CHECK(L.apply(rho).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("generator on the maximally mixed two-level state") {
  const double gamma = 0.9;
  Liouvillian L = two_level(Complex{gamma, 0.0}, Complex{0.0, 0.0});
  Matrix out = L.apply(maximally_mixed(2));
  Matrix expected(2, 2);
  expected << Complex{gamma, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{-gamma, 0.0};
  CHECK((out - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("generator preserves trace, Hermiticity, and linearity") {
  std::mt19937 rng(99);
  auto sys = ThreeLevel::make({Complex{0.4, 0.9}, Complex{-1.1, 0.2}, Complex{0.8, -0.3}},
                              {Complex{0.9, 0.4}, Complex{1.2, -0.1}, Complex{0.6, 0.8}},
                              Complex{0.5, 0.7});
  for (int i = 0; i < 25; ++i) {
    Matrix rho = oracles::random_hermitian(3, rng);
    Matrix out = sys.L.apply(rho, 0.0);
    CHECK(std::abs(out.trace()) < 1e-12);
    CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
  // Hermiticity preservation in the general form L(rho)^+ = L(rho^+)
  Matrix a(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = oracles::random_complex(rng);
  CHECK((sys.L.apply(a.adjoint().eval(), 0.0) - sys.L.apply(a, 0.0).adjoint())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  // linearity
  Matrix b = oracles::random_hermitian(3, rng);
  Matrix c = oracles::random_hermitian(3, rng);
  const Complex s{0.3, -1.2};
  CHECK((sys.L.apply((s * b + c).eval(), 0.0) - (s * sys.L.apply(b, 0.0) + sys.L.apply(c, 0.0)))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("heisenberg generator is unital and dual to the master equation") {
  std::mt19937 rng(1234);
  auto sys = ThreeLevel::make({Complex{0.4, 0.9}, Complex{-1.1, 0.2}, Complex{0.8, -0.3}},
                              {Complex{0.9, 0.4}, Complex{1.2, -0.1}, Complex{0.6, 0.8}},
                              Complex{0.5, 0.7});
  CHECK(sys.L.heisenberg(Matrix::Identity(3, 3), 0.0).cwiseAbs().maxCoeff() < 1e-14);
  for (int i = 0; i < 25; ++i) {
    Matrix X = oracles::random_hermitian(3, rng);
    Matrix rho = oracles::random_density(3, rng);
    const Complex lhs = (sys.L.heisenberg(X, 0.0) * rho).trace();
    const Complex rhs = (X * sys.L.apply(rho, 0.0)).trace();
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("undriven heisenberg generator on the excited projector") {
  const double gamma = 1.3;
  Liouvillian L = two_level(Complex{gamma, 0.0}, Complex{0.0, 0.0});
  Matrix out = L.heisenberg(level_projector(2, 1), 0.0);
  CHECK((out + 2.0 * gamma * level_projector(2, 1)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("vectorized generator is consistent with direct application") {
  std::mt19937 rng(5);
  auto sys = ThreeLevel::make({Complex{0.4, 0.9}, Complex{-1.1, 0.2}, Complex{0.8, -0.3}},
                              {Complex{0.9, 0.4}, Complex{1.2, -0.1}, Complex{0.6, 0.8}},
                              Complex{0.5, 0.7});
  Matrix M = sys.L.matrix();
  REQUIRE(M.rows() == 9);
  REQUIRE(M.cols() == 9);
  for (int i = 0; i < 10; ++i) {
    Matrix rho = oracles::random_density(3, rng);
    Matrix via_matrix = unvec(M * vec(rho), 3);
    CHECK((via_matrix - sys.L.apply(rho, 0.0)).cwiseAbs().maxCoeff() < 1e-12);
  }
  // trace preservation appears as a left null vector vec(I)^T
  Vector id = vec(Matrix::Identity(3, 3));
  CHECK((id.adjoint() * M).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("windowed generator switches its vectorized matrix") {
  Liouvillian L = two_level(Complex{1.0, 0.0}, Complex{0.7, 0.0}, Window::interval(0.0, 1.0));
  Matrix inside = L.matrix(0.5);
  Matrix outside = L.matrix(2.0);
  CHECK((inside - outside).cwiseAbs().maxCoeff() > 0.1);
  // repeated queries hit the cache and agree
  CHECK((L.matrix(0.25) - inside).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("negative decay rates are rejected") {
  Atom atom({0.0, 1.0}, {{1, 0, Complex{1.0, 0.0}}});
  TransitionSet ts = transition_operators(atom);
  CHECK_THROWS_AS(Liouvillian(ts, BathCoefficients::direct(ts, {Complex{-0.1, 0.0}})),
                  std::invalid_argument);
}

TEST_CASE("dimension mismatches are rejected") {
  Liouvillian L = two_level(Complex{1.0, 0.0}, Complex{0.0, 0.0});
  Matrix wrong = Matrix::Zero(3, 3);
  CHECK_THROWS_AS(L.dissipator(wrong), std::invalid_argument);
  CHECK_THROWS_AS(L.heisenberg(wrong, 0.0), std::invalid_argument);
}
