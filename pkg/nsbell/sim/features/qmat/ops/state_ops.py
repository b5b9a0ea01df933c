from typing import Sequence, TypeVar, Union

import numpy as np
from pydantic import ValidationError

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.qmat.models.quantum_state import DensityOperator, Observable, PureState
from nsbell.sim.features.qmat.ops.dense import hermitian_part, partial_trace_array
from nsbell.sim.simulation_error import DimensionMismatchError, SimulationError

Operand = TypeVar("Operand", PureState, DensityOperator, Observable, np.ndarray)


def tensor(a: Operand, b: Operand) -> Operand:
    """
    Kronecker product with the left operand as the slow index.

    Both operands must be of the same kind; the result keeps that kind.

    Raises:
        SimulationError: If the operands are of different kinds
    """
    if type(a) is not type(b):
        raise SimulationError(
            "tensor operands must be of the same kind",
            operation="tensor",
            details={"left": type(a).__name__, "right": type(b).__name__},
        )
    if isinstance(a, PureState):
        return PureState(amplitudes=np.kron(a.amplitudes, b.amplitudes))
    if isinstance(a, DensityOperator):
        return DensityOperator(matrix=np.kron(a.matrix, b.matrix))
    if isinstance(a, Observable):
        return Observable(matrix=np.kron(a.matrix, b.matrix))
    return np.kron(a, b)


def as_density(state: Union[PureState, DensityOperator]) -> DensityOperator:
    return state.density() if isinstance(state, PureState) else state


def partial_trace(rho: DensityOperator, dims: Sequence[int], keep: Sequence[int]) -> DensityOperator:
    """
    Reduce `rho` onto the subsystems listed in `keep`.

    Args:
        rho: State on a register split into subsystems of the given dimensions
        dims: Dimension of every subsystem, slowest first
        keep: Indices of the subsystems to keep

    Returns:
        Reduced density operator on the kept subsystems

    Raises:
        DimensionMismatchError: If the dims do not multiply to the matrix dimension
            or `keep` is empty, repeated or out of range
    """
    try:
        reduced = partial_trace_array(rho.matrix, dims, keep)
    except ValueError as e:
        raise DimensionMismatchError(
            str(e), operation="partial_trace", details={"dims": list(dims), "keep": list(keep)}
        ) from e
    logger.debug(f"partial_trace: dims={list(dims)} keep={sorted(keep)} -> {reduced.shape[0]}")
    return DensityOperator(matrix=hermitian_part(reduced))


def expectation(rho: DensityOperator, obs: Observable) -> float:
    """Born-rule mean Tr(rho * obs)."""
    if rho.dim != obs.dim:
        raise DimensionMismatchError(
            "state and observable dimensions differ",
            operation="expectation",
            details={"state": rho.dim, "observable": obs.dim},
        )
    value = complex(np.trace(rho.matrix @ obs.matrix))
    if abs(value.imag) > settings.imag_tol:
        raise SimulationError(
            "expectation value has a non-negligible imaginary part",
            operation="expectation",
            details={"imag": value.imag},
        )
    return value.real


def trace_distance(rho: DensityOperator, sigma: DensityOperator) -> float:
    """Half the trace norm of rho - sigma; lies in [0, 1]."""
    if rho.dim != sigma.dim:
        raise DimensionMismatchError(
            "states have different dimensions",
            operation="trace_distance",
            details={"left": rho.dim, "right": sigma.dim},
        )
    eigenvalues = np.linalg.eigvalsh(hermitian_part(rho.matrix - sigma.matrix))
    return float(min(1.0, 0.5 * np.sum(np.abs(eigenvalues))))


def density_from_array(matrix: np.ndarray, operation: str) -> DensityOperator:
    """
    Wrap a computed matrix as a density operator, renormalizing its trace.

    Raises:
        SimulationError: If the matrix breaks the density-operator invariants
    """
    matrix = hermitian_part(matrix)
    matrix = matrix / np.trace(matrix).real
    try:
        return DensityOperator(matrix=matrix)
    except ValidationError as e:
        raise SimulationError(f"result is not a valid density operator: {e}", operation=operation) from e
