from functools import lru_cache
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from nsbell.nsbell_config import settings
from nsbell.sim.features.su2rep.ops.schur import logical_code_vectors

STATE_NAMES = ("0'", "0''", "1'", "1''")


class LogicalBasis(BaseModel):
    """The four spin-1/2 states of three photons, rows ordered 0', 0'', 1', 1''.

    Row 2*logical + gauge holds the state with that logical and gauge index.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vectors: np.ndarray

    @field_validator("vectors", mode="before")
    @classmethod
    def coerce_vectors(cls, value: Any) -> np.ndarray:
        array = np.array(value, dtype=complex)
        array.setflags(write=False)
        return array

    @field_validator("vectors")
    @classmethod
    def validate_orthonormal(cls, value: np.ndarray) -> np.ndarray:
        if value.shape != (4, 8):
            raise ValueError(f"logical basis needs four 8-dim vectors, got shape {value.shape}")
        deviation = float(np.max(np.abs(value.conj() @ value.T - np.eye(4))))
        if deviation > settings.norm_tol:
            raise ValueError(f"logical basis is not orthonormal (max Gram deviation {deviation:.3e})")
        return value

    @classmethod
    def standard(cls) -> "LogicalBasis":
        return _standard_basis()

    def state(self, logical: int, gauge: int) -> np.ndarray:
        return self.vectors[2 * logical + gauge]

    def named(self, name: str) -> np.ndarray:
        """Vector by name, one of 0', 0'', 1', 1''."""
        return self.vectors[STATE_NAMES.index(name)]

    def embed(self, code_matrix: np.ndarray) -> np.ndarray:
        """Lift a 4x4 operator in code coordinates to the 8-dim register, zero on spin-3/2."""
        return self.vectors.T @ code_matrix @ self.vectors.conj()

    def restrict(self, matrix: np.ndarray) -> np.ndarray:
        """Compress an 8x8 operator to code coordinates."""
        return self.vectors.conj() @ matrix @ self.vectors.T


@lru_cache(maxsize=1)
def _standard_basis() -> LogicalBasis:
    return LogicalBasis(vectors=logical_code_vectors())
