"""Metric and tetrad fields as point evaluators.

A tetrad is stored as the co-frame matrix E with E[a, mu] = e^a_mu(x); its
inverse holds the frame vectors, inverse[mu, a] = e^mu_a(x). Evaluators must
be free of side effects so fields can be sampled concurrently.
"""

from typing import Callable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from nsbell.sim.simulation_error import DimensionMismatchError, DomainError

Evaluator = Callable[[np.ndarray], np.ndarray]

# Condition numbers above this mark a tetrad as singular.
_SINGULAR_CONDITION = 1e12


def _point(point: Sequence[float], operation: str) -> np.ndarray:
    array = np.asarray(point, dtype=float).reshape(-1)
    if array.shape != (4,):
        raise DimensionMismatchError(
            f"spacetime points have four coordinates, got {array.shape[0]}",
            operation=operation,
        )
    return array


class MetricField(BaseModel):
    """g_{mu nu}(x) with signature (-, +, +, +)."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    coordinates: str
    evaluator: Evaluator

    def at(self, point: Sequence[float]) -> np.ndarray:
        """
        Metric components at a point.

        Raises:
            DimensionMismatchError: If the point or the evaluated matrix has the wrong shape
            DomainError: If the point lies outside the field's domain
        """
        matrix = np.asarray(self.evaluator(_point(point, "metric")), dtype=float)
        if matrix.shape != (4, 4):
            raise DimensionMismatchError(f"metric {self.name} returned shape {matrix.shape}", operation="metric")
        if not np.array_equal(matrix, matrix.T):
            raise DomainError(f"metric {self.name} is not symmetric", operation="metric")
        return matrix


class TetradField(BaseModel):
    """Vierbein e^a_mu(x); rows are the Lorentz index a."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    evaluator: Evaluator

    def at(self, point: Sequence[float]) -> np.ndarray:
        matrix = np.asarray(self.evaluator(_point(point, "tetrad")), dtype=float)
        if matrix.shape != (4, 4):
            raise DimensionMismatchError(f"tetrad {self.name} returned shape {matrix.shape}", operation="tetrad")
        return matrix

    def inverse_at(self, point: Sequence[float]) -> np.ndarray:
        """
        Frame vectors e^mu_a at a point.

        Raises:
            DomainError: If the tetrad is singular there
        """
        matrix = self.at(point)
        condition = np.linalg.cond(matrix)
        if not np.isfinite(condition) or condition > _SINGULAR_CONDITION:
            raise DomainError(
                f"tetrad {self.name} is singular",
                operation="tetrad_inverse",
                details={"point": list(map(float, point)), "condition": float(condition)},
            )
        return np.linalg.inv(matrix)

    def transformed(self, transform: np.ndarray) -> "TetradField":
        """Tetrad rotated by a fixed local Lorentz matrix: e'^a_mu = L^a_b e^b_mu."""
        transform = np.array(transform, dtype=float)
        base = self.evaluator
        return TetradField(name=f"{self.name}/transformed", evaluator=lambda x: transform @ base(x))

    def scaled(self, factor: float) -> "TetradField":
        """Tetrad whose frame vectors e^mu_a are multiplied by `factor`."""
        base = self.evaluator
        return TetradField(name=f"{self.name}/scaled({factor})", evaluator=lambda x: base(x) / factor)
