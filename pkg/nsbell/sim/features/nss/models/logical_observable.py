from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from nsbell.nsbell_config import settings
from nsbell.sim.features.nss.models.logical_basis import LogicalBasis
from nsbell.sim.features.qmat.models.quantum_state import Observable


class LogicalObservable(BaseModel):
    """Hermitian logical measurement on one three-photon block.

    `code_matrix` acts in the (0', 0'', 1', 1'') basis; `full_matrix` is its
    extension to the 8-dim register, zero on the spin-3/2 sector.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    code_matrix: np.ndarray
    full_matrix: np.ndarray

    @field_validator("code_matrix", "full_matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, value: Any) -> np.ndarray:
        array = np.array(value, dtype=complex)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def validate_extension(self) -> "LogicalObservable":
        if self.code_matrix.shape != (4, 4) or self.full_matrix.shape != (8, 8):
            raise ValueError("logical observables need a 4x4 code matrix and an 8x8 full matrix")
        if np.max(np.abs(self.code_matrix - self.code_matrix.conj().T)) > settings.hermitian_tol:
            raise ValueError("code matrix is not Hermitian")
        expected = LogicalBasis.standard().embed(self.code_matrix)
        if np.max(np.abs(self.full_matrix - expected)) > settings.hermitian_tol:
            raise ValueError("full matrix is not the code matrix embedded on the spin-1/2 sector")
        return self

    @classmethod
    def from_code(cls, code_matrix: np.ndarray, basis: Optional[LogicalBasis] = None) -> "LogicalObservable":
        basis = basis or LogicalBasis.standard()
        code = np.array(code_matrix, dtype=complex)
        return cls(code_matrix=code, full_matrix=basis.embed(code))

    @property
    def is_dichotomic(self) -> bool:
        """True when the code matrix has spectrum in {+1, -1}."""
        eigenvalues = np.linalg.eigvalsh(self.code_matrix)
        return bool(np.all(np.abs(np.abs(eigenvalues) - 1.0) < 1e-10))

    def observable(self) -> Observable:
        return Observable(matrix=self.full_matrix)
