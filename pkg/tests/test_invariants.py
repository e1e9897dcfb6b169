"""Tests for app.invariants.report: quadratic invariants, Manley-Rowe, Vandermonde inversion."""

import math

import numpy as np
import pytest

from app.dynamics.integrator import integrate
from app.dynamics.systems import rhs_real
from app.invariants.report import (
    coupled_alphas,
    invariant_report,
    manley_rowe,
    quadratic_invariants,
    vandermonde_forward,
    vandermonde_recover,
    xi_rate,
)
from commons.errors import DomainError
from entity.states import ComplexTriadState, CoupledState, RealTriadState

LAMBDAS = (2.0, 1.0, -1.0)


class TestInvariantReport:
    def test_real_values(self):
        report = invariant_report(RealTriadState(1.0, 1.0, 0.0, *LAMBDAS))
        assert (report.E, report.H, report.Xi) == (2.0, 3.0, 5.0)
        assert report.W_s == {1.0: 5.0, 2.0: 17.0, 3.0: 65.0}
        assert report.manley_rowe is None

    def test_complex_uses_moduli(self):
        report = invariant_report(ComplexTriadState((1j, 1.0, 0.0), LAMBDAS))
        assert (report.E, report.H, report.Xi) == (2.0, 3.0, 5.0)
        assert report.manley_rowe is not None

    def test_coupled_carries_alphas(self):
        state = CoupledState((1.0, 1.0, math.sqrt(3.0) / 2.0, 0.5, 0.3), (1.0, -1.0, 2.0, -2.0, 3.0))
        report = invariant_report(state)
        assert (report.alpha, report.alphaTilde) == (-2.0, -4.0)
        assert report.E2 == pytest.approx(0.0, abs=1e-14)
        assert "E1" in report.to_dict()

    def test_unsupported_state(self):
        with pytest.raises(DomainError, match="unsupported"):
            invariant_report((1.0, 2.0, 3.0))

    def test_s_below_one_rejected(self):
        with pytest.raises(DomainError, match="s >= 1"):
            quadratic_invariants(np.ones(3), LAMBDAS, (0.5,))

    def test_sign_of_lambda_only_enters_helicity(self):
        a = quadratic_invariants(np.array([1.0, 2.0, 3.0]), (2.0, 1.0, -1.0), (3.0,))
        b = quadratic_invariants(np.array([1.0, 2.0, 3.0]), (-2.0, 1.0, -1.0), (3.0,))
        assert a["W_3"] == b["W_3"]
        assert a["H"] != b["H"]


class TestManleyRowe:
    def test_hand_values(self):
        mr = manley_rowe(ComplexTriadState((1.0, 1.0, 1j), LAMBDAS))
        assert mr.phase_invariant == pytest.approx(0.0, abs=1e-15)
        assert mr.phase_sine == pytest.approx(1.0)
        assert (mr.E1, mr.E2) == (1.0, -5.0)
        assert not mr.zero_modulus

    def test_zero_modulus_flagged(self):
        assert manley_rowe(ComplexTriadState((0.0, 1.0, 1.0), LAMBDAS)).zero_modulus

    def test_conserved_along_flow(self, complex_run):
        drift = complex_run.drift()
        for name in ("MR_phase", "MR_E1", "MR_E2"):
            assert drift[name]["max_abs"] <= 1e-9


class TestConservation:
    def test_real(self, period_run):
        drift = period_run.drift()
        for name in ("E", "H", "Xi"):
            assert drift[name]["max_rel"] <= 1e-9

    def test_complex(self, complex_run):
        drift = complex_run.drift()
        for name in ("E", "H"):
            assert drift[name]["max_rel"] <= 1e-9

    def test_coupled(self, coupled_run):
        drift = coupled_run.drift()
        for name in ("E", "E1", "E3"):
            assert drift[name]["max_abs"] <= 1e-9
        assert abs(drift["E2"]["initial"]) <= 1e-14
        assert drift["E2"]["max_abs"] <= 1e-9


class TestCoupledAlphas:
    def test_values(self):
        assert coupled_alphas((1.0, -1.0, 2.0, -2.0, 3.0)) == (-2.0, -4.0)

    def test_undefined(self):
        with pytest.raises(DomainError, match="alpha undefined"):
            coupled_alphas((1.0, -1.0, 1.0, -2.0, 3.0))


class TestVandermonde:
    def test_round_trip(self):
        E, H, Xi = vandermonde_forward(0.3, 0.5, 0.2, *LAMBDAS)
        rec = vandermonde_recover(E, H, Xi, *LAMBDAS)
        assert rec.as_tuple() == pytest.approx((0.3, 0.5, 0.2), abs=1e-14)
        assert rec.feasible

    def test_infeasible_returns_negative_square(self):
        rec = vandermonde_recover(1.0, 0.0, 10.0, *LAMBDAS)
        assert rec.p2 == pytest.approx(3.0)
        assert rec.q2 == pytest.approx(-4.0)
        assert not rec.feasible

    def test_repeated_eigenvalues(self):
        with pytest.raises(DomainError, match="distinct"):
            vandermonde_recover(1.0, 1.0, 1.0, 1.0, 1.0, 0.0)


class TestXiRate:
    def test_hand_value(self):
        assert xi_rate(1.0, 1.0, 1.0, *LAMBDAS) == -12.0

    def test_matches_chain_rule(self):
        state = RealTriadState(0.3, -1.2, 0.7, *LAMBDAS)
        dp, dq, dr = rhs_real(state)
        lam, mu, nu = LAMBDAS
        chain = 2 * (lam ** 2 * state.p * dp + mu ** 2 * state.q * dq + nu ** 2 * state.r * dr)
        assert xi_rate(state.p, state.q, state.r, *LAMBDAS) == pytest.approx(chain, rel=1e-12)


@pytest.mark.slow
class TestConservationLongRun:
    """Worked lambda sets integrated to t = 100 at rtol 1e-12."""

    @staticmethod
    def _run(system_id, state):
        return integrate(system_id, state, 100.0, rtol=1e-12, atol=1e-14).drift()

    @staticmethod
    def _assert_held(entry, tol=1e-9):
        assert entry["max_abs"] <= tol * max(1.0, abs(entry["initial"]))

    def test_real(self):
        drift = self._run("real", RealTriadState(0.1, 1.0, 0.0, *LAMBDAS))
        for name in ("E", "H"):
            assert drift[name]["max_rel"] <= 1e-9

    def test_complex_with_manley_rowe(self):
        drift = self._run("complex", ComplexTriadState((0.3 + 0.1j, 1.0 + 0.2j, 0.1 - 0.4j), LAMBDAS))
        for name in ("E", "H"):
            assert drift[name]["max_rel"] <= 1e-9
        for name in ("MR_phase", "MR_E1", "MR_E2"):
            self._assert_held(drift[name])

    def test_coupled(self):
        state = CoupledState((1.0, 1.0, math.sqrt(3.0) / 2.0, 0.5, 0.3), (1.0, -1.0, 2.0, -2.0, 3.0))
        drift = self._run("coupled", state)
        for name in ("E", "E1", "E3"):
            self._assert_held(drift[name])
        assert drift["E2"]["max_abs"] <= 1e-9
