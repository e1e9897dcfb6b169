"""Triad catalog and its versioned JSON schema."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from entity.lattice import LatticeParams, Triad, WaveVector


class ParamsRecord(BaseModel):
    theta1: float = Field(gt=0)
    theta2: float = Field(gt=0)
    theta3: float = Field(gt=0)


class TriadRecord(BaseModel):
    k: List[int]
    m: List[int]
    n: List[int]
    signs: List[int]
    lambdas: List[float]
    residual: float

    @field_validator("k", "m", "n", "signs", "lambdas")
    @classmethod
    def three_components(cls, v: list) -> list:
        if len(v) != 3:
            raise ValueError(f"expected 3 components, got {len(v)}")
        return v

    @field_validator("signs")
    @classmethod
    def unit_signs(cls, v: List[int]) -> List[int]:
        if any(s not in (1, -1) for s in v):
            raise ValueError(f"signs must be +1/-1, got {v}")
        return v


class CatalogDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    schema_version: Literal["v1"] = Field(default="v1", alias="schema")
    params: ParamsRecord
    box: int = Field(ge=1)
    tol: float = Field(gt=0)
    triads: List[TriadRecord]


@dataclass
class TriadCatalog:
    """Symmetry-reduced search result; entries are canonical and sorted."""

    params: LatticeParams
    box: int
    tolerance: float
    entries: List[Triad] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def keys(self) -> List[tuple]:
        return [t.key() for t in self.entries]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": "v1",
            "params": self.params.to_dict(),
            "box": self.box,
            "tol": self.tolerance,
            "triads": [t.to_dict() for t in self.entries],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TriadCatalog":
        doc = CatalogDocument.model_validate(data)
        params = LatticeParams(doc.params.theta1, doc.params.theta2, doc.params.theta3)
        entries = [
            Triad(
                k=WaveVector.of(r.k),
                m=WaveVector.of(r.m),
                n=WaveVector.of(r.n),
                signs=tuple(r.signs),
                lambdas=tuple(r.lambdas),
                residual=r.residual,
                params=params,
            )
            for r in doc.triads
        ]
        return cls(params=params, box=doc.box, tolerance=doc.tol, entries=entries)
