"""Protocol for resonant systems. Implement and register to integrate a new system."""

from typing import Any, Dict, Protocol, Sequence, Tuple

import numpy as np


class ResonantSystem(Protocol):
    """Autonomous quadratic vector field on a real state vector."""

    system_id: str
    labels: Tuple[str, ...]

    @classmethod
    def from_state(cls, state: Any, s_list: Sequence[float] = (3.0,)) -> Tuple["ResonantSystem", np.ndarray]:
        """Bind parameters from a state object; return the system and its initial vector."""
        ...

    @classmethod
    def from_params(cls, params: Dict[str, Any], s_list: Sequence[float] = (3.0,)) -> "ResonantSystem":
        ...

    @property
    def params(self) -> Dict[str, Any]:
        ...

    def rhs(self, y: np.ndarray) -> np.ndarray:
        ...

    def jacobian(self, y: np.ndarray) -> np.ndarray:
        ...

    def invariants(self, Y: np.ndarray) -> Dict[str, np.ndarray]:
        """Monitored functionals for states stacked on axis 0."""
        ...

    def saddle_distance(self, y: np.ndarray) -> float:
        ...
