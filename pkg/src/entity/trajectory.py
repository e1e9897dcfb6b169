"""Immutable numerical trajectory with its invariant drift log."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np

from commons.errors import DomainError


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Trajectory:
    """
    Accepted steps of one integration run.

    states[i] is the state at times[i]; derivatives[i] the vector field there.
    sample_mask marks steps that landed on the fixed-stride sampling grid.
    invariants holds each monitored functional at every step.
    """

    system_id: str
    labels: Tuple[str, ...]
    params: Dict[str, Any]
    times: np.ndarray
    states: np.ndarray
    derivatives: np.ndarray
    sample_mask: np.ndarray = None
    invariants: Dict[str, np.ndarray] = field(default_factory=dict)
    stats: Dict[str, Any] = field(default_factory=dict)
    partial: bool = False

    def __post_init__(self):
        times = _frozen(self.times)
        states = _frozen(self.states)
        derivatives = _frozen(self.derivatives)
        if states.ndim != 2 or states.shape[0] != times.shape[0]:
            raise DomainError(f"states shape {states.shape} does not match {times.shape[0]} times")
        if derivatives.shape != states.shape:
            raise DomainError("derivatives must match states")
        if states.shape[1] != len(self.labels):
            raise DomainError(f"{states.shape[1]} state columns but {len(self.labels)} labels")
        if times.size > 1 and not np.all(np.diff(times) > 0):
            raise DomainError("trajectory times must be strictly increasing")
        mask = np.zeros(times.shape, dtype=bool) if self.sample_mask is None else np.array(self.sample_mask, dtype=bool)
        mask.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "derivatives", derivatives)
        object.__setattr__(self, "sample_mask", mask)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "invariants", {k: _frozen(v) for k, v in self.invariants.items()})

    def __len__(self) -> int:
        return int(self.times.shape[0])

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    def column(self, label: str) -> np.ndarray:
        return self.states[:, self.labels.index(label)]

    def sampled(self) -> Tuple[np.ndarray, np.ndarray]:
        """Times and states on the fixed-stride grid (exact integrator landings)."""
        return self.times[self.sample_mask], self.states[self.sample_mask]

    def drift(self) -> Dict[str, Dict[str, float]]:
        """Max absolute and relative deviation of every monitored invariant from its initial value."""
        out: Dict[str, Dict[str, float]] = {}
        for name, values in self.invariants.items():
            if values.size == 0:
                continue
            dev = np.abs(values - values[0])
            ref = abs(float(values[0]))
            max_abs = float(dev.max())
            out[name] = {
                "initial": float(values[0]),
                "max_abs": max_abs,
                "max_rel": max_abs / ref if ref > 0 else max_abs,
            }
        return out
