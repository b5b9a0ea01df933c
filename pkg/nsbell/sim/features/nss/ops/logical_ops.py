from enum import Enum
from typing import List, Tuple

import numpy as np

from nsbell.sim.features.nss.models.logical_observable import LogicalObservable
from nsbell.sim.features.qmat.models.quantum_state import PureState
from nsbell.sim.features.qmat.ops.dense import IDENTITY_2, SIGMA_X, SIGMA_Z, permute_qubits, spectral_projectors
from nsbell.sim.simulation_error import DomainError


class PauliAxis(str, Enum):
    Z = "z"
    X = "x"
    GENERAL = "general"


# Logical Paulis act on the slow (logical) index and leave the gauge index alone.
LOGICAL_Z = np.kron(SIGMA_Z, IDENTITY_2)
LOGICAL_X = np.kron(SIGMA_X, IDENTITY_2)


def logical_pauli(which: PauliAxis, c_z: float = 0.0, c_x: float = 0.0) -> LogicalObservable:
    """
    Logical sigma_z, sigma_x or the combination c_z*sigma_z + c_x*sigma_x.

    The coefficients are only read for PauliAxis.GENERAL. A general combination
    has eigenvalues +-sqrt(c_z^2 + c_x^2), so it is dichotomic only on the unit circle.
    """
    which = PauliAxis(which)
    if which == PauliAxis.Z:
        code = LOGICAL_Z
    elif which == PauliAxis.X:
        code = LOGICAL_X
    else:
        code = float(c_z) * LOGICAL_Z + float(c_x) * LOGICAL_X
    return LogicalObservable.from_code(code)


def outcome_projectors(observable: LogicalObservable) -> List[Tuple[float, np.ndarray]]:
    """
    Three-outcome measurement of a logical observable on the 8-dim register.

    Returns (value, projector) pairs, positive outcomes first; the reject
    outcome comes last with value 0.0 and projects onto the spin-3/2 sector.
    """
    return spectral_projectors(observable.full_matrix)


def swap_qubits(state: PureState, i: int, j: int) -> PureState:
    """
    Exchange qubits i and j (1-based) of a pure state.

    Raises:
        DomainError: If i == j or either index is outside 1..n
    """
    n = state.n_qubits
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(
            f"swap needs two distinct qubit indices in 1..{n}",
            operation="swap_qubits",
            details={"i": i, "j": j},
        )
    order = list(range(n))
    order[i - 1], order[j - 1] = order[j - 1], order[i - 1]
    return PureState(amplitudes=permute_qubits(state.amplitudes, order))
