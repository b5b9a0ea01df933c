"""Wigner D-matrices from symmetrized tensor powers of the fundamental matrix.

D^j(g) = V_j^dagger U^{(x)2j} V_j, where the columns of V_j are the Dicke states
|j, m> (normalized sums over bit strings with j - m ones). One code path for every
j, no Euler-angle conventions.
"""

from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from nsbell.sim.features.su2rep.models.group_element import GroupElementU2
from nsbell.sim.features.su2rep.models.wigner_matrix import SUPPORTED_SPINS, WignerMatrix, spin_dimension
from nsbell.sim.simulation_error import DomainError


def _check_spin(j: float) -> None:
    if j not in SUPPORTED_SPINS:
        raise DomainError(f"unsupported spin j={j}", operation="wigner_d", details={"supported": SUPPORTED_SPINS})


def dicke_state(n_qubits: int, ones: int) -> np.ndarray:
    """Normalized symmetric state of n qubits with `ones` excitations."""
    vector = np.zeros(2**n_qubits, dtype=complex)
    for positions in combinations(range(n_qubits), ones):
        index = sum(1 << (n_qubits - 1 - p) for p in positions)
        vector[index] = 1.0
    return vector / np.sqrt(comb(n_qubits, ones))


@lru_cache(maxsize=None)
def dicke_isometry(j: float) -> np.ndarray:
    """Columns |j, j>, |j, j-1>, ..., |j, -j> inside the 2j-qubit register."""
    n = int(round(2 * j))
    columns = np.stack([dicke_state(n, k) for k in range(n + 1)], axis=1)
    columns.setflags(write=False)
    return columns


def tensor_power_batch(matrices: np.ndarray, n: int) -> np.ndarray:
    """Batch Kronecker power M^{(x)n}, shape (count, 2^n, 2^n)."""
    count = matrices.shape[0]
    result = matrices
    for _ in range(n - 1):
        dim = result.shape[1]
        result = np.einsum("tij,tkl->tikjl", result, matrices).reshape(count, dim * 2, dim * 2)
    return result


def tensor_power(matrix: np.ndarray, n: int) -> np.ndarray:
    return tensor_power_batch(matrix[None], n)[0]


def wigner_d_batch(j: float, fundamentals: np.ndarray) -> np.ndarray:
    """D^j for a batch of 2x2 matrices, shape (count, 2j+1, 2j+1)."""
    _check_spin(j)
    n = spin_dimension(j) - 1
    iso = dicke_isometry(j)
    powers = tensor_power_batch(fundamentals, n)
    return np.einsum("ai,tab,bk->tik", iso.conj(), powers, iso)


def wigner_d(j: float, g: GroupElementU2, include_phase: bool = False) -> WignerMatrix:
    """
    Irreducible representation matrix of a group element.

    Args:
        j: Spin, one of 1/2, 1, 3/2
        g: Group element
        include_phase: Multiply by the U(1) factor e^{-i 2j alpha}

    Returns:
        The (2j+1)x(2j+1) unitary D^j(g)

    Raises:
        DomainError: If j is not supported
    """
    _check_spin(j)
    fundamental = g.u2_matrix() if include_phase else g.su2_matrix()
    return WignerMatrix(j=j, matrix=wigner_d_batch(j, fundamental[None])[0])
