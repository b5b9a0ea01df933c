"""Fixed (non-averaged) collective rotations.

A collective rotation applies the same U(2) matrix to every qubit of a block.
The U(1) phase e^{-i alpha} of the element contributes a global phase
e^{-i n alpha} per block and cancels in every conjugation.
"""

from typing import Optional, Sequence, TypeVar

import numpy as np

from nsbell.sim.features.qmat.models.quantum_state import DensityOperator, PureState
from nsbell.sim.features.qmat.ops.dense import kron_all
from nsbell.sim.features.qmat.ops.state_ops import density_from_array
from nsbell.sim.features.su2rep.models.group_element import GroupElementU2
from nsbell.sim.features.su2rep.ops.wigner import tensor_power
from nsbell.sim.simulation_error import DimensionMismatchError

State = TypeVar("State", PureState, DensityOperator)


def collective_unitary(g: GroupElementU2, n_qubits: int) -> np.ndarray:
    """U^{(x)n} for the fundamental U(2) matrix of `g`."""
    return tensor_power(g.u2_matrix(), n_qubits)


def _conjugate(state: State, unitary: np.ndarray, operation: str) -> State:
    if isinstance(state, PureState):
        return PureState(amplitudes=unitary @ state.amplitudes)
    return density_from_array(unitary @ state.matrix @ unitary.conj().T, operation)


def fixed_rotation(rho: State, g: GroupElementU2, n_qubits: int) -> State:
    """
    Rotate every qubit of a block by the same group element.

    Args:
        rho: Pure state or density operator on exactly `n_qubits` qubits
        g: The group element
        n_qubits: Block size

    Returns:
        The rotated state, of the same kind as the input

    Raises:
        DimensionMismatchError: If the state does not have `n_qubits` qubits
    """
    if rho.n_qubits != n_qubits:
        raise DimensionMismatchError(
            f"state has {rho.n_qubits} qubits, rotation block has {n_qubits}",
            operation="fixed_rotation",
        )
    return _conjugate(rho, collective_unitary(g, n_qubits), "fixed_rotation")


def fixed_rotation_blocks(
    rho: State,
    elements: Sequence[Optional[GroupElementU2]],
    n_qubits: int,
) -> State:
    """
    Rotate consecutive blocks of `n_qubits` by their own elements.

    `elements[k]` acts on qubits k*n .. (k+1)*n - 1; None leaves that block alone.

    Raises:
        DimensionMismatchError: If the state does not hold len(elements) blocks
    """
    if rho.n_qubits != n_qubits * len(elements):
        raise DimensionMismatchError(
            f"state has {rho.n_qubits} qubits, expected {len(elements)} blocks of {n_qubits}",
            operation="fixed_rotation_blocks",
        )
    factors = [
        np.eye(2**n_qubits, dtype=complex) if g is None else collective_unitary(g, n_qubits)
        for g in elements
    ]
    return _conjugate(rho, kron_all(*factors), "fixed_rotation_blocks")

