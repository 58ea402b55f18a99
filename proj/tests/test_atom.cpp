#include <doctest.h>

#include "slme/atom.hpp"

using namespace slme;

namespace {
const Complex kZero{0.0, 0.0};
}

TEST_CASE("two-level atom builds sigma minus") {
  Atom atom({0.0, 1.0}, {{1, 0, Complex{1.0, 0.0}}});
  CHECK(atom.dim() == 2);
  Matrix D = atom.lowering();
  CHECK(D(0, 1) == Complex{1.0, 0.0});
  CHECK(D(1, 0) == kZero);
  CHECK(D(0, 0) == kZero);
  CHECK(D(1, 1) == kZero);
  CHECK(atom.hamiltonian()(1, 1) == Complex{1.0, 0.0});
}

TEST_CASE("three-level atom with complex dipoles") {
  const Complex d1{0.3, -0.4}, d2{1.0, 2.0}, d3{-0.5, 0.1};
  Atom atom({0.0, 1.0, 3.0}, {{1, 0, d1}, {2, 1, d2}, {2, 0, d3}});
  CHECK(atom.dipole(2, 1) == d2);
  CHECK(atom.dipole(0, 1) == kZero);

  auto freqs = bohr_frequencies(atom);
  REQUIRE(freqs.size() == 3);
  CHECK(freqs[0] == doctest::Approx(1.0));
  CHECK(freqs[1] == doctest::Approx(2.0));
  CHECK(freqs[2] == doctest::Approx(3.0));

  TransitionSet ts = transition_operators(atom);
  REQUIRE(ts.size() == 3);
  CHECK(ts.mode(0).op(0, 1) == std::conj(d1));
  CHECK(ts.mode(1).op(1, 2) == std::conj(d2));
  CHECK(ts.mode(2).op(0, 2) == std::conj(d3));
  CHECK((ts.total_lowering() - atom.lowering()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Atom({0.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Atom({1.0, 0.0}, {}), std::invalid_argument);  // unsorted
  CHECK_THROWS_AS(Atom({0.0, 1.0}, {{0, 1, Complex{1.0, 0.0}}}), std::invalid_argument);
  CHECK_THROWS_AS(Atom({0.0, 0.0}, {{1, 0, Complex{1.0, 0.0}}}), std::invalid_argument);
  CHECK_THROWS_AS(
      Atom({0.0, 1.0}, {{1, 0, Complex{1.0, 0.0}}, {1, 0, Complex{2.0, 0.0}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(Atom({0.0, 1.0}, {{2, 0, Complex{1.0, 0.0}}}), std::invalid_argument);
}

TEST_CASE("degenerate Bohr frequencies merge into one operator") {
  Atom atom({0.0, 1.0, 2.0}, {{1, 0, Complex{1.0, 0.0}}, {2, 1, Complex{1.0, 0.0}},
                              {2, 0, Complex{1.0, 0.0}}});
  auto freqs = bohr_frequencies(atom);
  REQUIRE(freqs.size() == 2);
  CHECK(freqs[0] == doctest::Approx(1.0));
  CHECK(freqs[1] == doctest::Approx(2.0));

  TransitionSet ts = transition_operators(atom);
  const Matrix& D1 = ts.mode(0).op;
  CHECK(D1(0, 1) == Complex{1.0, 0.0});
  CHECK(D1(1, 2) == Complex{1.0, 0.0});
  CHECK(ts.mode(0).pairs.size() == 2);
}

TEST_CASE("merge tolerance is configurable") {
  Atom atom({0.0, 1.0, 2.0 + 1e-12}, {{1, 0, Complex{1.0, 0.0}}, {2, 1, Complex{1.0, 0.0}}});
  CHECK(bohr_frequencies(atom).size() == 1);          // default 1e-9 merges
  CHECK(bohr_frequencies(atom, 1e-15).size() == 2);   // tight tolerance separates
}

TEST_CASE("lambda configuration drops the forbidden transition structurally") {
  Atom atom({0.0, 1.0, 3.0}, {{1, 0, kZero}, {2, 1, Complex{1.0, 0.0}}, {2, 0, Complex{1.0, 0.0}}});
  auto freqs = bohr_frequencies(atom);
  REQUIRE(freqs.size() == 2);
  CHECK(freqs[0] == doctest::Approx(2.0));
  CHECK(freqs[1] == doctest::Approx(3.0));
}

TEST_CASE("transition operators are lowering and projector-consistent") {
  Atom atom({0.0, 0.7, 1.9}, {{1, 0, Complex{0.2, 0.9}}, {2, 1, Complex{-1.0, 0.3}},
                              {2, 0, Complex{0.4, 0.0}}});
  TransitionSet ts = transition_operators(atom);
  for (const auto& mode : ts.modes()) {
    // strictly lower triangular in the energy basis
    for (int m = 0; m < ts.dim(); ++m)
      for (int n = 0; n <= m; ++n) CHECK(mode.op(m, n) == kZero);
    // P_m D_w P_n vanishes unless e_n - e_m = w
    for (int m = 0; m < ts.dim(); ++m) {
      for (int n = 0; n < ts.dim(); ++n) {
        const double gap = atom.energies()[n] - atom.energies()[m];
        if (std::abs(gap - mode.omega) > 1e-9) CHECK(std::abs(mode.op(m, n)) == 0.0);
      }
    }
    CHECK(mode.omega > 0.0);
  }
  CHECK((ts.total_lowering() - atom.lowering()).cwiseAbs().maxCoeff() == 0.0);

  auto freqs = bohr_frequencies(atom);
  for (size_t i = 1; i < freqs.size(); ++i) CHECK(freqs[i] > freqs[i - 1]);
}
