"""Run configuration for `simulate` and `sweep`.

Precedence: config.yaml defaults < run config JSON < command-line flags.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from commons.config import config, section
from commons.config.loader import JsonConfigProvider
from commons.constants import Constants as Co
from commons.errors import ConfigError

_STATE_SIZE = {Co.REAL: 3, Co.COMPLEX: 6, Co.COUPLED: 5}
_LAMBDA_COUNT = {Co.REAL: 3, Co.COMPLEX: 3, Co.COUPLED: 5}
_RECIPE_INPUT = {Co.EXPLICIT: "values", Co.H3_SPLIT: "W0", Co.ENSTROPHY_SPLIT: "Xi0", Co.NEAR_SADDLE: "E0"}


def _integrator_default(key: str, fallback: float):
    return lambda: section(config, Co.INTEGRATOR).get(key, fallback)


class Couplings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    C: float = 1.0
    gamma: float = 1.0
    gamma_tilde: float = 1.0


class InitialCondition(BaseModel):
    """explicit values | h3-split (W0) | enstrophy-split (Xi0) | near-saddle (E0, epsilon)."""

    model_config = ConfigDict(extra="forbid")

    recipe: Literal["explicit", "h3-split", "enstrophy-split", "near-saddle"] = "explicit"
    values: Optional[List[float]] = None
    W0: Optional[float] = Field(default=None, gt=0)
    Xi0: Optional[float] = Field(default=None, gt=0)
    E0: Optional[float] = Field(default=None, gt=0)
    epsilon: Optional[float] = Field(default=None, gt=0, lt=1)

    @model_validator(mode="after")
    def recipe_inputs(self) -> "InitialCondition":
        required = _RECIPE_INPUT[self.recipe]
        if getattr(self, required) is None:
            raise ValueError(f"recipe {self.recipe!r} requires {required!r}")
        return self


class OutputSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    out_dir: Optional[str] = None
    stem: str = "run"
    csv_dt: Optional[float] = Field(default=None, gt=0)


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    schema_version: Literal["v1"] = Field(default="v1", alias="schema")
    system: Literal["real", "complex", "coupled"]
    lambdas: List[float]
    couplings: Couplings = Field(default_factory=Couplings)
    initial_condition: InitialCondition
    t_end: float = Field(gt=0)
    rtol: float = Field(default_factory=_integrator_default("rtol", 1e-10), gt=0, le=1e-3)
    atol: float = Field(default_factory=_integrator_default("atol", 1e-12), gt=0, le=1e-3)
    sample_dt: Optional[float] = Field(default=None, gt=0)
    renormalize: bool = False
    s_list: List[float] = Field(default_factory=lambda: [3.0])
    output: OutputSpec = Field(default_factory=OutputSpec)

    @field_validator("s_list")
    @classmethod
    def norms_at_least_one(cls, v: List[float]) -> List[float]:
        if not v or any(s < 1 for s in v):
            raise ValueError(f"s_list entries must be >= 1, got {v}")
        return v

    @model_validator(mode="after")
    def consistent_shapes(self) -> "RunConfig":
        expected = _LAMBDA_COUNT[self.system]
        if len(self.lambdas) != expected:
            raise ValueError(f"system {self.system!r} needs {expected} lambdas, got {len(self.lambdas)}")
        ic = self.initial_condition
        if ic.recipe != Co.EXPLICIT and self.system != Co.REAL:
            raise ValueError(f"recipe {ic.recipe!r} applies to the real system only")
        if ic.values is not None and len(ic.values) != _STATE_SIZE[self.system]:
            raise ValueError(
                f"system {self.system!r} needs {_STATE_SIZE[self.system]} initial values, got {len(ic.values)}"
            )
        return self

    @classmethod
    def from_dict(cls, data: Dict[str, Any], overrides: Optional[Dict[str, Any]] = None) -> "RunConfig":
        merged = dict(data)
        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if key in ("out_dir", "stem", "csv_dt"):
                merged[Co.OUTPUT] = {**(merged.get(Co.OUTPUT) or {}), key: value}
            else:
                merged[key] = value
        try:
            return cls.model_validate(merged)
        except ValidationError as e:
            raise ConfigError(f"invalid run config: {e.errors()[0]['msg']}", errors=e.errors(include_url=False)) from e

    @classmethod
    def from_file(cls, path: Path | str, overrides: Optional[Dict[str, Any]] = None) -> "RunConfig":
        data = JsonConfigProvider(path).load()
        cfg = cls.from_dict(data, overrides)
        if cfg.output.stem == "run" and "stem" not in (data.get("output") or {}) and not (overrides or {}).get("stem"):
            cfg.output.stem = Path(path).stem
        return cfg
