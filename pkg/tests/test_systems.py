"""Tests for app.dynamics.systems: vector fields, Jacobians and the system registry."""

import numpy as np
import pytest

from app.dynamics.systems import (
    ComplexTriadSystem,
    CoupledSystem,
    RealTriadSystem,
    get_system,
    rhs_complex,
    rhs_coupled,
    rhs_real,
)
from app.dynamics.integrator import integrate
from commons.errors import DomainError
from entity.states import ComplexTriadState, CoupledState, RealTriadState

COUPLED_LAMBDAS = (1.0, -1.0, 2.0, -2.0, 3.0)


def finite_difference_jacobian(system, y, h=1e-6):
    J = np.empty((y.size, y.size))
    for i in range(y.size):
        e = np.zeros(y.size)
        e[i] = h
        J[:, i] = (system.rhs(y + e) - system.rhs(y - e)) / (2 * h)
    return J


class TestRightHandSides:
    def test_real(self):
        assert rhs_real(RealTriadState(1, 1, 1, 2, 1, -1)) == (-2.0, 3.0, -1.0)

    def test_coupled(self):
        assert rhs_coupled(CoupledState((1.0,) * 5, COUPLED_LAMBDAS)) == (-3.0, 1.0, 7.0, -1.0, -4.0)

    def test_complex(self):
        d_uk, d_um, d_un = rhs_complex(ComplexTriadState((1, 1, 1), (2.0, 1.0, -1.0)))
        assert (d_uk, d_um, d_un) == (2j, -3j, -1j)

    def test_complex_coupling_scales_field(self):
        s1 = ComplexTriadState((0.3 + 0.1j, 1 - 0.2j, 0.5j), (2.0, 1.0, -1.0), C=1.0)
        s2 = ComplexTriadState(s1.U, s1.lambdas, C=2.5)
        assert np.allclose(np.array(rhs_complex(s2)), 2.5 * np.array(rhs_complex(s1)))

    def test_system_matches_state_function(self):
        state = RealTriadState(0.3, -1.2, 0.7, 2.0, 1.0, -1.0)
        system, y = RealTriadSystem.from_state(state)
        assert np.allclose(system.rhs(y), rhs_real(state))

    def test_complex_system_matches_state_function(self):
        state = ComplexTriadState((0.3 + 0.1j, 1 - 0.2j, 0.5j), (2.0, 1.0, -1.0))
        system, y = ComplexTriadSystem.from_state(state)
        assert np.allclose(ComplexTriadSystem.unpack(system.rhs(y)), np.array(rhs_complex(state)))

    @pytest.mark.parametrize(
        "system,y",
        [
            (RealTriadSystem((2.0, 1.0, -1.0)), np.array([0.3, -1.2, 0.7])),
            (ComplexTriadSystem((2.0, 1.0, -1.0)), np.array([0.3, 0.1, 1.0, -0.2, 0.0, 0.5])),
            (CoupledSystem(COUPLED_LAMBDAS), np.array([1.0, 0.4, -0.3, 0.5, 0.2])),
        ],
    )
    def test_quadratic_fields_are_even(self, system, y):
        assert np.array_equal(system.rhs(-y), system.rhs(y))


class TestJacobians:
    def test_real(self):
        system = RealTriadSystem((2.0, 1.0, -1.0))
        y = np.array([0.3, -1.2, 0.7])
        assert np.allclose(system.jacobian(y), finite_difference_jacobian(system, y), atol=1e-8)

    def test_coupled(self):
        system = CoupledSystem(COUPLED_LAMBDAS, gamma=0.7, gamma_tilde=1.3)
        y = np.array([1.0, 0.4, -0.3, 0.5, 0.2])
        assert np.allclose(system.jacobian(y), finite_difference_jacobian(system, y), atol=1e-8)

    def test_complex(self):
        system = ComplexTriadSystem((2.0, 1.0, -1.0), C=1.7)
        y = np.array([0.3, 0.1, 1.0, -0.2, 0.0, 0.5])
        assert np.allclose(system.jacobian(y), finite_difference_jacobian(system, y), atol=1e-8)

    @pytest.mark.parametrize(
        "system,y",
        [
            (RealTriadSystem((2.0, 1.0, -1.0)), np.array([0.3, -1.2, 0.7])),
            (ComplexTriadSystem((2.0, 1.0, -1.0), C=1.7), np.array([0.3, 0.1, 1.0, -0.2, -0.4, 0.5])),
            (CoupledSystem(COUPLED_LAMBDAS, gamma=0.7, gamma_tilde=1.3), np.array([1.0, 0.4, -0.3, 0.5, 0.2])),
        ],
    )
    def test_exact_for_quadratic_fields(self, system, y):
        # f(y + e) - f(y - e) = 2 J(y) e and J(y) y = 2 f(y) hold exactly for homogeneous quadratics
        e = np.linspace(0.5, -0.5, y.size)
        assert np.allclose(system.rhs(y + e) - system.rhs(y - e), 2 * system.jacobian(y) @ e, atol=1e-13)
        assert np.allclose(system.jacobian(y) @ y, 2 * system.rhs(y), atol=1e-13)


class TestComplexPacking:
    def test_layout(self):
        y = ComplexTriadSystem.pack((1 + 2j, 3 + 4j, 5 + 6j))
        assert list(y) == [1, 2, 3, 4, 5, 6]
        assert list(ComplexTriadSystem.unpack(y)) == [1 + 2j, 3 + 4j, 5 + 6j]

    def test_to_state(self):
        system, y = ComplexTriadSystem.from_state(ComplexTriadState((1j, 2, -1), (2.0, 1.0, -1.0), C=3.0))
        state = system.to_state(y)
        assert state.U == (1j, 2 + 0j, -1 + 0j)
        assert state.C == 3.0


class TestInvariantColumns:
    def test_real_columns(self):
        system = RealTriadSystem((2.0, 1.0, -1.0), s_list=(2.0, 3.0))
        inv = system.invariants(np.array([[1.0, 1.0, 0.0]]))
        assert list(inv) == ["E", "H", "Xi", "W_2", "W_3"]
        assert inv["E"][0] == 2.0 and inv["H"][0] == 3.0 and inv["Xi"][0] == 5.0
        assert inv["W_3"][0] == 65.0

    def test_complex_columns_include_manley_rowe(self):
        inv = ComplexTriadSystem((2.0, 1.0, -1.0)).invariants(np.zeros((1, 6)))
        assert {"MR_phase", "MR_E1", "MR_E2"} <= set(inv)

    def test_coupled_columns(self):
        inv = CoupledSystem(COUPLED_LAMBDAS).invariants(np.array([[1.0, 1.0, 3 ** 0.5 / 2, 0.5, 0.3]]))
        assert {"E1", "E2", "E3"} <= set(inv)
        assert inv["E2"][0] == pytest.approx(0.0, abs=1e-15)


class TestRegistry:
    def test_known_systems(self):
        assert get_system("real") is RealTriadSystem
        assert get_system("complex") is ComplexTriadSystem
        assert get_system("coupled") is CoupledSystem

    def test_unknown_system(self):
        with pytest.raises(DomainError, match="unknown system"):
            get_system("quartic")

    def test_from_params_round_trip(self):
        system = CoupledSystem(COUPLED_LAMBDAS, gamma=0.5, gamma_tilde=2.0)
        again = CoupledSystem.from_params(system.params)
        y = np.array([1.0, 0.4, -0.3, 0.5, 0.2])
        assert np.array_equal(again.rhs(y), system.rhs(y))

    def test_repeated_eigenvalues_rejected(self):
        with pytest.raises(DomainError, match="distinct"):
            RealTriadSystem((1.0, 1.0, -1.0))


class TestComplexTriadStructure:
    LAMBDAS = (2.0, 1.0, -1.0)

    @pytest.mark.parametrize("chi2,chi3", [(0.3, -1.1), (2.0, 0.5), (-0.7, 3.0)])
    def test_phase_equivariance(self, chi2, chi3):
        U = (0.3 + 0.1j, 1 - 0.2j, -0.4 + 0.5j)
        phases = np.exp(1j * np.array([chi2, chi3, chi2 + chi3]))
        base = np.array(rhs_complex(ComplexTriadState(U, self.LAMBDAS, C=1.3)))
        rotated = np.array(rhs_complex(ComplexTriadState(tuple(phases * np.array(U)), self.LAMBDAS, C=1.3)))
        assert np.allclose(rotated, phases * base, atol=1e-14)

    @pytest.mark.parametrize("C", [1.0, 2.5])
    def test_manifold_field_is_real_triad(self, C):
        p, q, r = 0.3, -1.2, 0.7
        d_uk, d_um, d_un = rhs_complex(ComplexTriadState((-1j * p, q, r), self.LAMBDAS, C=C))
        # U_k in iR, U_m and U_n in R is preserved
        assert max(abs(d_uk.real), abs(d_um.imag), abs(d_un.imag)) <= 1e-15
        expected = C * np.array(rhs_real(RealTriadState(p, q, r, *self.LAMBDAS)))
        assert np.allclose([(1j * d_uk).real, d_um.real, d_un.real], expected, atol=1e-14)

    def test_manifold_flow_is_time_rescaled_real_flow(self):
        C = 2.0
        p, q, r = 0.2, 1.0, 0.1
        cplx = integrate("complex", ComplexTriadState((-1j * p, q, r), self.LAMBDAS, C=C), 1.5, rtol=1e-12, atol=1e-14)
        real = integrate("real", RealTriadState(p, q, r, *self.LAMBDAS), C * 1.5, rtol=1e-12, atol=1e-14)
        U = ComplexTriadSystem.unpack(cplx.states[-1])
        assert np.abs(U.real[0]) <= 1e-12 and np.abs(U.imag[1:]).max() <= 1e-12
        assert np.allclose([(1j * U[0]).real, U[1].real, U[2].real], real.states[-1], atol=1e-8)


class TestCoupledDecoupling:
    def test_zero_gamma_tilde_freezes_second_body(self):
        a = (1.0, 0.4, -0.3, 0.5, 0.2)
        d = rhs_coupled(CoupledState(a, COUPLED_LAMBDAS, gamma=0.7, gamma_tilde=0.0))
        assert d[3] == 0.0 and d[4] == 0.0
        lk, lm, ln, _, _ = COUPLED_LAMBDAS
        ak, am, an = a[:3]
        assert d[:3] == pytest.approx(((lm - ln) * 0.7 * am * an, (ln - lk) * 0.7 * an * ak, (lk - lm) * 0.7 * ak * am))

    def test_zero_gamma_tilde_first_body_ignores_second(self):
        first = rhs_coupled(CoupledState((1.0, 0.4, -0.3, 0.5, 0.2), COUPLED_LAMBDAS, gamma_tilde=0.0))
        other = rhs_coupled(CoupledState((1.0, 0.4, -0.3, -3.0, 7.0), COUPLED_LAMBDAS, gamma_tilde=0.0))
        assert first[:3] == other[:3]

    def test_first_body_is_a_real_triad(self):
        # (a_k, a_m, a_n) with gamma = -1 follows the real triad with (lambda, mu, nu) = (l_k, l_m, l_n)
        a = (1.0, 0.4, -0.3, 0.5, 0.2)
        d = rhs_coupled(CoupledState(a, COUPLED_LAMBDAS, gamma=-1.0, gamma_tilde=0.0))
        lk, lm, ln, _, _ = COUPLED_LAMBDAS
        assert d[:3] == pytest.approx(rhs_real(RealTriadState(*a[:3], lk, lm, ln)))

    def test_zero_gamma_freezes_outer_modes(self):
        d = rhs_coupled(CoupledState((1.0, 0.4, -0.3, 0.5, 0.2), COUPLED_LAMBDAS, gamma=0.0, gamma_tilde=1.3))
        assert d[0] == 0.0 and d[1] == 0.0
