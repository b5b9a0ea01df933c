from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from nsbell.nsbell_config import settings

SUPPORTED_SPINS = (0.5, 1.0, 1.5)


def spin_dimension(j: float) -> int:
    return int(round(2 * j)) + 1


class WignerMatrix(BaseModel):
    """(2j+1)-dimensional irreducible representation matrix of an SU(2) or U(2) element.

    Rows and columns run over m = j, j-1, ..., -j.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    j: float
    matrix: np.ndarray

    @field_validator("j")
    @classmethod
    def validate_spin(cls, value: float) -> float:
        if value not in SUPPORTED_SPINS:
            raise ValueError(f"j must be one of {SUPPORTED_SPINS}, got {value}")
        return value

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, value: Any) -> np.ndarray:
        array = np.array(value, dtype=complex)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def validate_representation(self) -> "WignerMatrix":
        """Check shape, unitarity and unit-modulus determinant"""
        dim = spin_dimension(self.j)
        if self.matrix.shape != (dim, dim):
            raise ValueError(f"j={self.j} needs a {dim}x{dim} matrix, got {self.matrix.shape}")
        deviation = float(np.max(np.abs(self.matrix @ self.matrix.conj().T - np.eye(dim))))
        if deviation > settings.unitary_tol:
            raise ValueError(f"matrix is not unitary (max deviation {deviation:.3e})")
        modulus = abs(np.linalg.det(self.matrix))
        if abs(modulus - 1.0) > settings.unitary_tol:
            raise ValueError(f"determinant modulus must be 1, got {modulus:.15f}")
        return self

    @property
    def dim(self) -> int:
        return spin_dimension(self.j)

    def element(self, m: float, n: float) -> complex:
        """Matrix element D^j_{mn}."""
        return complex(self.matrix[int(round(self.j - m)), int(round(self.j - n))])
