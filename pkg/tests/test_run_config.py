"""Tests for entity.run_config and the initial-condition recipes."""

import json
import math

import pytest

from app.cli.initial_conditions import build_initial_state
from app.invariants.report import invariant_report
from commons.errors import ConfigError
from entity.run_config import RunConfig
from entity.states import ComplexTriadState, CoupledState, RealTriadState


def real_config(**extra):
    data = {
        "system": "real",
        "lambdas": [2.0, 1.0, -1.0],
        "initial_condition": {"values": [1.0, 1.0, 0.0]},
        "t_end": 3.0,
    }
    data.update(extra)
    return data


class TestRunConfig:
    def test_defaults_from_yaml(self):
        cfg = RunConfig.from_dict(real_config())
        assert cfg.rtol == 1e-10
        assert cfg.atol == 1e-12
        assert cfg.s_list == [3.0]
        assert cfg.output.stem == "run"
        assert cfg.schema_version == "v1"

    def test_overrides_beat_file_values(self):
        cfg = RunConfig.from_dict(real_config(rtol=1e-8), {"t_end": 5.0, "rtol": None, "out_dir": "x", "csv_dt": 0.1})
        assert cfg.t_end == 5.0
        assert cfg.rtol == 1e-8
        assert cfg.output.out_dir == "x"
        assert cfg.output.csv_dt == 0.1

    def test_lambda_count(self):
        with pytest.raises(ConfigError, match="needs 3 lambdas"):
            RunConfig.from_dict(real_config(lambdas=[1.0, 2.0]))

    def test_recipe_needs_its_input(self):
        with pytest.raises(ConfigError, match="requires 'W0'"):
            RunConfig.from_dict(real_config(initial_condition={"recipe": "h3-split"}))

    def test_recipes_only_for_real_system(self):
        data = {
            "system": "complex",
            "lambdas": [2.0, 1.0, -1.0],
            "initial_condition": {"recipe": "near-saddle", "E0": 1.0},
            "t_end": 1.0,
        }
        with pytest.raises(ConfigError, match="real system only"):
            RunConfig.from_dict(data)

    def test_state_size(self):
        with pytest.raises(ConfigError, match="needs 3 initial values"):
            RunConfig.from_dict(real_config(initial_condition={"values": [1.0, 1.0]}))

    def test_unknown_key(self):
        with pytest.raises(ConfigError):
            RunConfig.from_dict(real_config(integrator="rk4"))

    def test_norm_exponents(self):
        with pytest.raises(ConfigError, match=">= 1"):
            RunConfig.from_dict(real_config(s_list=[0.5]))

    def test_tolerance_range(self):
        with pytest.raises(ConfigError):
            RunConfig.from_dict(real_config(rtol=0.5))

    def test_error_exit_code(self):
        with pytest.raises(ConfigError) as info:
            RunConfig.from_dict(real_config(t_end=-1.0))
        assert info.value.exit_code == 2


class TestFromFile:
    def test_stem_defaults_to_file_name(self, tmp_path):
        f = tmp_path / "period.json"
        f.write_text(json.dumps(real_config()), encoding="utf-8")
        assert RunConfig.from_file(f).output.stem == "period"

    def test_stem_in_file_kept(self, tmp_path):
        f = tmp_path / "period.json"
        f.write_text(json.dumps(real_config(output={"stem": "named"})), encoding="utf-8")
        assert RunConfig.from_file(f).output.stem == "named"

    def test_stem_override_wins(self, tmp_path):
        f = tmp_path / "period.json"
        f.write_text(json.dumps(real_config(output={"stem": "named"})), encoding="utf-8")
        assert RunConfig.from_file(f, {"stem": "flag"}).output.stem == "flag"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            RunConfig.from_file(tmp_path / "nope.json")


class TestInitialConditions:
    def test_explicit_real(self):
        state = build_initial_state(RunConfig.from_dict(real_config()))
        assert isinstance(state, RealTriadState)
        assert state.amplitudes == (1.0, 1.0, 0.0)

    def test_h3_split(self):
        cfg = RunConfig.from_dict(
            real_config(lambdas=[50.0, 1.0, -49.0], initial_condition={"recipe": "h3-split", "W0": 1.0})
        )
        state = build_initial_state(cfg)
        assert state.p == pytest.approx(math.sqrt(0.5) / 50.0 ** 3)
        assert state.q == pytest.approx(math.sqrt(0.5))
        assert state.r == 0.0
        assert invariant_report(state, (3.0,)).W_s[3.0] == pytest.approx(1.0)

    def test_enstrophy_split(self):
        cfg = RunConfig.from_dict(
            real_config(lambdas=[50.0, 1.0, -49.0], initial_condition={"recipe": "enstrophy-split", "Xi0": 2.0})
        )
        state = build_initial_state(cfg)
        assert state.p == pytest.approx(1.0 / 50.0)
        assert invariant_report(state).Xi == pytest.approx(2.0)

    def test_near_saddle_default_epsilon(self):
        cfg = RunConfig.from_dict(real_config(initial_condition={"recipe": "near-saddle", "E0": 4.0}))
        state = build_initial_state(cfg)
        assert state.amplitudes == pytest.approx((0.0, 2.0 * (1 - 1e-4), 2e-4))

    def test_near_saddle_explicit_epsilon(self):
        cfg = RunConfig.from_dict(real_config(initial_condition={"recipe": "near-saddle", "E0": 1.0, "epsilon": 0.01}))
        assert build_initial_state(cfg).r == pytest.approx(0.01)

    def test_complex_values_are_re_im_pairs(self):
        cfg = RunConfig.from_dict(
            {
                "system": "complex",
                "lambdas": [2.0, 1.0, -1.0],
                "couplings": {"C": 2.0},
                "initial_condition": {"values": [0.3, 0.1, 1.0, 0.2, 0.1, -0.4]},
                "t_end": 1.0,
            }
        )
        state = build_initial_state(cfg)
        assert isinstance(state, ComplexTriadState)
        assert state.U == (0.3 + 0.1j, 1.0 + 0.2j, 0.1 - 0.4j)
        assert state.C == 2.0

    def test_coupled(self):
        cfg = RunConfig.from_dict(
            {
                "system": "coupled",
                "lambdas": [1.0, -1.0, 2.0, -2.0, 3.0],
                "couplings": {"gamma": 0.5, "gamma_tilde": 2.0},
                "initial_condition": {"values": [1.0, 1.0, 0.5, 0.5, 0.3]},
                "t_end": 1.0,
            }
        )
        state = build_initial_state(cfg)
        assert isinstance(state, CoupledState)
        assert (state.gamma, state.gamma_tilde) == (0.5, 2.0)
