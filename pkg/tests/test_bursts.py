"""Tests for app.closed_form.bursts: bounds and their measurement on integrated runs."""

import math

import pytest
from scipy.special import ellipk

from app.closed_form import (
    ENSTROPHY,
    H3,
    burst_bounds_enstrophy,
    burst_bounds_h3,
    cubic_data_from_invariants,
    half_period,
    measure_burst,
    measure_period,
)
from app.dynamics.integrator import integrate
from commons.errors import DomainError, PreconditionError
from entity.states import RealTriadState

BURST_LAMBDAS = (50.0, 1.0, -49.0)


class TestBounds:
    def test_h3_values(self):
        b = burst_bounds_h3(100.0, 1.0, -100.0, 1.0)
        assert b.kind == H3
        assert b.ratio_bound == pytest.approx(2.5e11)
        assert b.t_star_bound == pytest.approx(0.27631, rel=1e-4)
        assert b.regime_valid

    def test_enstrophy_values(self):
        b = burst_bounds_enstrophy(100.0, 1.0, -100.0, 1.0)
        assert b.kind == ENSTROPHY
        assert b.ratio_bound == pytest.approx(1e4)
        assert b.t_star_bound == pytest.approx(0.032565, rel=1e-4)

    def test_t_star_scales_with_initial_norm(self):
        a = burst_bounds_h3(*BURST_LAMBDAS, 1.0)
        b = burst_bounds_h3(*BURST_LAMBDAS, 4.0)
        assert b.t_star_bound == pytest.approx(a.t_star_bound / 2)
        assert b.ratio_bound == a.ratio_bound

    def test_regime_flags(self):
        flags = burst_bounds_h3(2.0, 1.0, -1.0, 1.0).regime_ok
        assert flags["ordered"] and flags["opposite_signs"]
        assert not flags["mu_small"]
        assert not flags["lambda_nu_comparable"]
        assert not burst_bounds_h3(2.0, 1.0, -1.0, 1.0).regime_valid

    def test_same_sign_lambda_nu_flagged(self):
        assert not burst_bounds_enstrophy(50.0, 1.0, 49.0, 1.0).regime_ok["opposite_signs"]

    def test_zero_mu(self):
        with pytest.raises(DomainError, match="mu"):
            burst_bounds_h3(50.0, 0.0, -49.0, 1.0)

    def test_nonpositive_lambda(self):
        with pytest.raises(DomainError, match="lambda"):
            burst_bounds_enstrophy(-50.0, 1.0, -49.0, 1.0)

    def test_nonpositive_initial_norm(self):
        with pytest.raises(DomainError, match="W0"):
            burst_bounds_h3(*BURST_LAMBDAS, 0.0)
        with pytest.raises(DomainError, match="Xi0"):
            burst_bounds_enstrophy(*BURST_LAMBDAS, -1.0)

    def test_to_dict(self):
        d = burst_bounds_h3(*BURST_LAMBDAS, 1.0).to_dict()
        assert set(d) == {"kind", "ratio_bound", "t_star_bound", "regime_flags"}


class TestMeasureBurst:
    def test_h3_burst(self, h3_burst_run):
        W0 = float(h3_burst_run.invariants["W_3"][0])
        assert W0 == pytest.approx(1.0)
        bounds = burst_bounds_h3(*BURST_LAMBDAS, W0)
        report = measure_burst(h3_burst_run, bounds)
        assert report.level_reached
        assert report.measured_ratio >= 0.25 * 50.0 ** 6
        assert report.t_star_within_bound
        assert report.passed

    def test_enstrophy_burst(self, enstrophy_burst_run):
        traj = enstrophy_burst_run
        Xi0 = float(traj.invariants["Xi"][0])
        assert Xi0 == pytest.approx(1.0)
        cubic = cubic_data_from_invariants(float(traj.invariants["E"][0]), float(traj.invariants["H"][0]), *BURST_LAMBDAS)
        report = measure_burst(traj, burst_bounds_enstrophy(*BURST_LAMBDAS, Xi0), cubic)
        assert report.checks["x_plus_rel_err"] <= 1e-6
        assert report.checks["ratio_ok"]
        assert report.passed
        # the enstrophy time estimate is reported, not enforced
        assert not report.t_star_within_bound

    def test_monitored_functional_required(self):
        traj = integrate("real", RealTriadState(0.01, 0.7, 0.0, *BURST_LAMBDAS), 0.01, s_list=(2.0,))
        with pytest.raises(DomainError, match="does not monitor W_3"):
            measure_burst(traj, burst_bounds_h3(*BURST_LAMBDAS, 1.0))

    def test_real_triad_only(self, complex_run):
        with pytest.raises(DomainError, match="real-triad"):
            measure_burst(complex_run, burst_bounds_h3(*BURST_LAMBDAS, 1.0))


class TestMeasurePeriod:
    def test_matches_quadrature(self, period_run):
        report = measure_period(period_run)
        assert report.measured_half_period == pytest.approx(report.quadrature_half_period, rel=1e-6)
        assert report.xi_min == pytest.approx(5.0)
        assert report.xi_max == pytest.approx(7.0, rel=1e-9)
        assert report.asymptotic_half_period is not None

    def test_quadrature_is_elliptic(self, period_run):
        assert measure_period(period_run).quadrature_half_period == pytest.approx(ellipk(0.4) / math.sqrt(5.0), rel=1e-10)

    def test_trajectory_too_short(self):
        traj = integrate("real", RealTriadState(1.0, 1.0, 0.0, 2.0, 1.0, -1.0), 0.5)
        with pytest.raises(PreconditionError, match="increase t_end") as exc:
            measure_period(traj)
        assert exc.value.to_dict()["error"] == "precondition_failed"

    def test_real_triad_only(self, coupled_run):
        with pytest.raises(DomainError, match="real-triad"):
            measure_period(coupled_run)

    def test_half_period_consistent_with_cubic(self, period_run):
        report = measure_period(period_run)
        assert report.quadrature_half_period == pytest.approx(half_period(report.cubic))

    def test_orbit_around_nu_axis(self):
        traj = integrate("real", RealTriadState(0.1, 0.0, 1.0, 2.0, 1.0, -1.0), 3.0, rtol=1e-12, atol=1e-14)
        report = measure_period(traj)
        assert report.axis == "nu"
        assert report.cubic.is_ordered()
        assert report.xi_min == pytest.approx(1.01, rel=1e-9)
        assert report.xi_max == pytest.approx(1.04, rel=1e-9)
        assert report.measured_half_period == pytest.approx(report.quadrature_half_period, rel=1e-6)
        assert report.to_dict()["axis"] == "nu"

    def test_period_run_circulates_lambda_axis(self, period_run):
        assert measure_period(period_run).axis == "lambda"

    def test_separatrix_has_no_period(self):
        # (lambda - mu) p^2 = (mu - nu) r^2 puts H = mu E exactly
        traj = integrate("real", RealTriadState(1.0, 0.5, 1.0, 3.0, 1.0, -1.0), 0.1)
        with pytest.raises(PreconditionError, match="separatrix"):
            measure_period(traj)
