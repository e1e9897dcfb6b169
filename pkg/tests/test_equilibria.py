"""Tests for app.dynamics.equilibria."""

import math

import pytest

from app.dynamics.equilibria import classify_coupled_equilibrium, classify_equilibria
from commons.errors import DomainError

COUPLED_LAMBDAS = (1.0, -1.0, 2.0, -2.0, 3.0)


class TestClassifyEquilibria:
    def test_middle_axis_is_saddle(self):
        eqs = classify_equilibria((2.0, 1.0, -1.0), 4.0)
        assert len(eqs) == 6
        assert [e.label for e in eqs] == ["center", "center", "saddle", "saddle", "center", "center"]

    def test_points_on_sphere(self):
        for e in classify_equilibria((2.0, 1.0, -1.0), 4.0):
            assert sum(x * x for x in e.point) == pytest.approx(4.0)

    def test_saddle_rates(self):
        saddle = classify_equilibria((2.0, 1.0, -1.0), 1.0)[2]
        real_parts = sorted(ev.real for ev in saddle.eigenvalues)
        assert real_parts[0] == pytest.approx(-math.sqrt(2.0))
        assert real_parts[-1] == pytest.approx(math.sqrt(2.0))

    def test_center_frequency(self):
        center = classify_equilibria((2.0, 1.0, -1.0), 1.0)[0]
        assert max(ev.imag for ev in center.eigenvalues) == pytest.approx(math.sqrt(3.0))

    def test_unordered_lambdas(self):
        with pytest.raises(DomainError, match="ordered"):
            classify_equilibria((1.0, 2.0, -1.0), 1.0)

    def test_repeated_lambdas(self):
        with pytest.raises(DomainError, match="distinct"):
            classify_equilibria((1.0, 1.0, -1.0), 1.0)

    def test_nonpositive_energy(self):
        with pytest.raises(DomainError, match="energy"):
            classify_equilibria((2.0, 1.0, -1.0), 0.0)


class TestClassifyCoupledEquilibrium:
    def test_saddle(self):
        eq = classify_coupled_equilibrium(COUPLED_LAMBDAS, 1.0, 1.0, 1.0, 0.0)
        assert eq.label == "saddle"
        assert max(ev.real for ev in eq.eigenvalues) == pytest.approx(math.sqrt(2.0))

    def test_center(self):
        eq = classify_coupled_equilibrium(COUPLED_LAMBDAS, 1.0, 1.0, 0.0, 1.0)
        assert eq.label == "center"

    def test_point(self):
        eq = classify_coupled_equilibrium(COUPLED_LAMBDAS, 1.0, 1.0, 0.5, 0.2)
        assert eq.point == (0.5, 0.0, 0.0, 0.0, 0.2)
        assert len(eq.eigenvalues) == 5
