from typing import Any, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from nsbell.nsbell_config import settings


class IrrepSector(BaseModel):
    """One spin-j sector of a Schur basis.

    `rows[m_index][k]` is the transform row holding |j, m; copy k>, with
    m_index = j - m (the spin/gauge index) and k the multiplicity (logical) index.
    """
    model_config = ConfigDict(frozen=True)

    j: float
    rows: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def validate_layout(self) -> "IrrepSector":
        if len(self.rows) != int(round(2 * self.j)) + 1:
            raise ValueError(f"spin {self.j} sector needs {int(round(2 * self.j)) + 1} m rows")
        if len({len(r) for r in self.rows}) != 1 or not self.rows[0]:
            raise ValueError("every m row must list the same non-zero number of copies")
        return self

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def multiplicity(self) -> int:
        return len(self.rows[0])

    def row_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=int)


class SchurBasis(BaseModel):
    """Unitary change of basis splitting n qubits into SU(2) irrep sectors.

    Row r of `transform` is the bra <v_r| in computational coordinates, so
    `transform @ ket` gives Schur coordinates. Sectors are listed by
    descending spin.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_qubits: int
    transform: np.ndarray
    sectors: Tuple[IrrepSector, ...]

    @field_validator("transform", mode="before")
    @classmethod
    def coerce_transform(cls, value: Any) -> np.ndarray:
        array = np.array(value, dtype=complex)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def validate_basis(self) -> "SchurBasis":
        """Check unitarity and that the sectors tile every row exactly once"""
        dim = 2**self.n_qubits
        if self.transform.shape != (dim, dim):
            raise ValueError(f"transform must be {dim}x{dim}, got {self.transform.shape}")
        deviation = float(np.max(np.abs(self.transform @ self.transform.conj().T - np.eye(dim))))
        if deviation > settings.unitary_tol:
            raise ValueError(f"transform is not unitary (max deviation {deviation:.3e})")
        covered = sorted(r for sector in self.sectors for row in sector.rows for r in row)
        if covered != list(range(dim)):
            raise ValueError("sectors must cover every transform row exactly once")
        return self

    def sector(self, j: float) -> IrrepSector:
        for sector in self.sectors:
            if sector.j == j:
                return sector
        raise KeyError(f"no spin-{j} sector in a {self.n_qubits}-qubit Schur basis")

    def sector_projector(self, j: float) -> np.ndarray:
        """Projector onto the spin-j sector in computational coordinates."""
        rows = self.sector(j).row_array().reshape(-1)
        vectors = self.transform[rows]
        return vectors.conj().T @ vectors
