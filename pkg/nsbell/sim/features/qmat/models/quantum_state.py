from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from nsbell.nsbell_config import settings

MAX_QUBITS = 6


def register_qubits(dim: int) -> int:
    """Qubit count of a register of dimension `dim` (a power of two, at most 2^6)."""
    n = int(dim).bit_length() - 1
    if dim < 2 or 2**n != dim or n > MAX_QUBITS:
        raise ValueError(f"dimension {dim} is not 2^n for a register of 1..{MAX_QUBITS} qubits")
    return n


def _frozen_complex(value: Any) -> np.ndarray:
    array = np.array(value, dtype=complex)
    array.setflags(write=False)
    return array


def _check_square(matrix: np.ndarray) -> None:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")


def _check_hermitian(matrix: np.ndarray) -> None:
    deviation = float(np.max(np.abs(matrix - matrix.conj().T)))
    if deviation > settings.hermitian_tol:
        raise ValueError(f"matrix is not Hermitian (max deviation {deviation:.3e})")


class PureState(BaseModel):
    """Normalized ket of an n-qubit register, big-endian (qubit 1 is the slowest index).

    |0> is horizontal polarization / spin up, |1> is vertical / spin down.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    @classmethod
    def coerce_amplitudes(cls, value: Any) -> np.ndarray:
        return _frozen_complex(value)

    @field_validator("amplitudes")
    @classmethod
    def validate_amplitudes(cls, value: np.ndarray) -> np.ndarray:
        """Validate the register size and the unit norm"""
        if value.ndim != 1:
            raise ValueError(f"amplitudes must be a vector, got shape {value.shape}")
        register_qubits(value.shape[0])
        norm_sq = float(np.vdot(value, value).real)
        if abs(norm_sq - 1.0) > settings.norm_tol:
            raise ValueError(f"state is not normalized (squared norm {norm_sq:.15f})")
        return value

    @property
    def n_qubits(self) -> int:
        return register_qubits(self.amplitudes.shape[0])

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def density(self) -> "DensityOperator":
        """Projector |psi><psi| as a density operator."""
        return DensityOperator(matrix=np.outer(self.amplitudes, self.amplitudes.conj()))


class DensityOperator(BaseModel):
    """Trace-one positive Hermitian matrix over a qubit register.

    The PSD check uses an eigenvalue floor rather than exact positivity, since
    averaged conjugations leave tiny negative eigenvalues behind.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, value: Any) -> np.ndarray:
        return _frozen_complex(value)

    @field_validator("matrix")
    @classmethod
    def validate_matrix(cls, value: np.ndarray) -> np.ndarray:
        """Validate Hermiticity, unit trace and positivity"""
        _check_square(value)
        register_qubits(value.shape[0])
        _check_hermitian(value)
        trace = complex(np.trace(value))
        if abs(trace - 1.0) > settings.trace_tol:
            raise ValueError(f"trace must be 1, got {trace.real:.15f}{trace.imag:+.3e}j")
        smallest = float(np.linalg.eigvalsh(value)[0])
        if smallest < settings.psd_floor:
            raise ValueError(f"matrix is not positive semidefinite (eigenvalue {smallest:.3e})")
        return value

    @property
    def n_qubits(self) -> int:
        return register_qubits(self.matrix.shape[0])

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


class Observable(BaseModel):
    """Hermitian operator on a qubit register.

    CHSH observables have spectrum in {+1, -1, 0}; 0 marks the reject support.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, value: Any) -> np.ndarray:
        return _frozen_complex(value)

    @field_validator("matrix")
    @classmethod
    def validate_matrix(cls, value: np.ndarray) -> np.ndarray:
        _check_square(value)
        register_qubits(value.shape[0])
        _check_hermitian(value)
        return value

    @property
    def n_qubits(self) -> int:
        return register_qubits(self.matrix.shape[0])

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]
