"""Smoke tests for the python bindings: each main operation runs end to end
and matches the closed forms."""

import math

import numpy as np
import pytest

import slme


def two_level_liouvillian(gamma, omega_rabi):
    atom = slme.Atom([0.0, 1.0], [(1, 0, 1.0)])
    ts = slme.transition_operators(atom)
    coeffs = slme.BathCoefficients.direct(ts, [gamma])
    if omega_rabi != 0:
        coeffs.set_drive(0, omega_rabi)
    return slme.Liouvillian(ts, coeffs)


def test_atom_and_transitions():
    atom = slme.Atom([0.0, 1.0, 3.0], [(1, 0, 0.5), (2, 1, 1.0), (2, 0, 1.0)])
    assert atom.dim == 3
    assert slme.bohr_frequencies(atom) == pytest.approx([1.0, 2.0, 3.0])
    ts = slme.transition_operators(atom)
    D = ts.total_lowering()
    assert D.shape == (3, 3)
    assert D[0, 1] == pytest.approx(0.5)


def test_susceptibility_shell_value():
    g = slme.FormFactor.gaussian(1.0, 1.0, 12.0)
    s = slme.susceptibility(g, 1.0)
    assert s.gamma.real == pytest.approx(4.0 * math.pi**2 * math.exp(-1.0), rel=1e-12)
    c = slme.rabi_coefficient(g, g, 1.0)
    assert c == pytest.approx(2.0 * s.gamma.real, rel=1e-12)


def test_steady_state_matches_closed_form():
    L = two_level_liouvillian(1.0, 1j)
    ss = slme.steady_state(L)
    assert ss.kernel_dimension == 1
    assert not ss.degenerate
    closed = slme.two_level_steady_state(1.0, 1j)
    assert np.allclose(ss.states[0], closed, atol=1e-10)
    assert ss.states[0][0, 0].real == pytest.approx(2.0 / 3.0)
    assert ss.gap > 0


def test_evolve_matches_analytic_decay():
    L = two_level_liouvillian(1.0, 0.0)
    rho0 = slme.level_projector(2, 1)
    traj = slme.evolve(rho0, L, 0.0, 2.0)
    for t, rho in zip(traj.times, traj.states):
        assert abs(rho[1, 1].real - math.exp(-2.0 * t)) < 1e-8
    assert max(traj.trace_error) < 1e-10


def test_dark_state_design_round_trip():
    target = slme.ControlTarget.normalized(-1.0, 2j, kappa=2.0)
    omega2, omega3 = slme.design_rabi(target)
    v = slme.verify_design(target, omega2, omega3)
    assert v.fidelity >= 1.0 - 1e-8
    assert v.gap > 0

    psi = slme.lambda_dark_state(omega2, omega3)
    ss = slme.steady_state(slme.lambda_liouvillian(omega2, omega3))
    assert np.allclose(ss.states[0], slme.pure_density(psi), atol=1e-9)


def test_degenerate_kernel_is_reported():
    ss = slme.steady_state(slme.lambda_liouvillian(0.0, 0.0))
    assert ss.degenerate
    assert ss.kernel_dimension >= 2
    with pytest.raises(slme.DegenerateKernelError):
        slme.verify_design(slme.ControlTarget(0.0, 1.0), 0.0, 0.0)


def test_heisenberg_duality():
    L = two_level_liouvillian(0.8 + 0.3j, 0.5 - 0.2j)
    rng = np.random.default_rng(11)
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    x = 0.5 * (a + a.conj().T)
    rho = slme.maximally_mixed(2)
    lhs = np.trace(L.heisenberg(x) @ rho)
    rhs = np.trace(x @ L.apply(rho))
    assert abs(lhs - rhs) < 1e-12
