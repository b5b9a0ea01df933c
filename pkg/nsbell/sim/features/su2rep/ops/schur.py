"""Schur (Clebsch-Gordan) bases for collective rotations of n qubits.

Rows of a basis are grouped by spin sector; inside a sector the multiplicity
(logical) index is slow and the m (gauge) index fast. For three qubits the
spin-1/2 rows are the logical code states |0'>, |0''>, |1'>, |1''> and the
spin-3/2 rows are the Dicke states.
"""

from functools import lru_cache
from typing import List

import numpy as np
import scipy.linalg

from log_config import logger
from nsbell.sim.features.qmat.ops.dense import basis_ket
from nsbell.sim.features.su2rep.models.schur_basis import IrrepSector, SchurBasis
from nsbell.sim.features.su2rep.ops.wigner import dicke_state
from nsbell.sim.simulation_error import DomainError

MAX_SCHUR_QUBITS = 6


def logical_code_vectors() -> np.ndarray:
    """The four spin-1/2 states of three photons, rows ordered 0', 0'', 1', 1''."""
    s2, s6 = np.sqrt(2.0), np.sqrt(6.0)
    zero_p = (basis_ket("010") - basis_ket("100")) / s2
    zero_pp = (basis_ket("011") - basis_ket("101")) / s2
    one_p = (-2 * basis_ket("001") + basis_ket("010") + basis_ket("100")) / s6
    one_pp = (2 * basis_ket("110") - basis_ket("101") - basis_ket("011")) / s6
    return np.stack([zero_p, zero_pp, one_p, one_pp])


@lru_cache(maxsize=None)
def schur_basis_3qubit() -> SchurBasis:
    """
    Schur basis for three qubits: spin-3/2 Dicke rows 0-3, then the code rows 4-7.

    Rows 4-7 are the logical states |0'>, |0''>, |1'>, |1''> in that order, so
    row 4 + 2*logical + gauge holds the state with the given logical and gauge index.
    """
    dicke = np.stack([dicke_state(3, k) for k in range(4)])
    transform = np.vstack([dicke, logical_code_vectors()])
    return SchurBasis(
        n_qubits=3,
        transform=transform,
        sectors=(
            IrrepSector(j=1.5, rows=((0,), (1,), (2,), (3,))),
            IrrepSector(j=0.5, rows=((4, 6), (5, 7))),
        ),
    )


def _collective_operators(n_qubits: int):
    """Collective J_+ and J_- on n qubits with |0> as m=+1/2."""
    raise_single = np.array([[0, 1], [0, 0]], dtype=complex)
    dim = 2**n_qubits
    j_plus = np.zeros((dim, dim), dtype=complex)
    for site in range(n_qubits):
        factors = [np.eye(2)] * n_qubits
        factors[site] = raise_single
        term = factors[0]
        for factor in factors[1:]:
            term = np.kron(term, factor)
        j_plus += term
    return j_plus, j_plus.conj().T


def _weight_indices(n_qubits: int, ones: int) -> List[int]:
    return [index for index in range(2**n_qubits) if bin(index).count("1") == ones]


@lru_cache(maxsize=None)
def schur_basis(n_qubits: int) -> SchurBasis:
    """
    Schur basis for 1..6 qubits.

    Highest-weight vectors of spin j = n/2 - k are the null space of J_+ inside
    the subspace with k ones; each is lowered with J_- to fill its sector.

    Raises:
        DomainError: If n_qubits is outside 1..6
    """
    if not 1 <= n_qubits <= MAX_SCHUR_QUBITS:
        raise DomainError(
            f"Schur basis needs 1..{MAX_SCHUR_QUBITS} qubits, got {n_qubits}",
            operation="schur_basis",
        )
    if n_qubits == 3:
        return schur_basis_3qubit()

    dim = 2**n_qubits
    j_plus, j_minus = _collective_operators(n_qubits)
    rows: List[np.ndarray] = []
    sectors: List[IrrepSector] = []

    for ones in range(n_qubits // 2 + 1):
        spin = n_qubits / 2 - ones
        columns = _weight_indices(n_qubits, ones)
        if ones == 0:
            highest = np.ones((1, 1), dtype=complex)
        else:
            targets = _weight_indices(n_qubits, ones - 1)
            highest = scipy.linalg.null_space(j_plus[np.ix_(targets, columns)])
        multiplicity = highest.shape[1]
        if multiplicity == 0:
            continue

        size = int(round(2 * spin)) + 1
        offset = len(rows)
        copies = []
        for k in range(multiplicity):
            vector = np.zeros(dim, dtype=complex)
            vector[columns] = highest[:, k]
            ladder = [vector]
            m = spin
            for _ in range(size - 1):
                vector = j_minus @ vector / np.sqrt((spin + m) * (spin - m + 1))
                m -= 1
                ladder.append(vector)
            copies.append(ladder)
        for k in range(multiplicity):
            rows.extend(copies[k])
        sectors.append(
            IrrepSector(
                j=spin,
                rows=tuple(tuple(offset + k * size + m_index for k in range(multiplicity)) for m_index in range(size)),
            )
        )

    logger.debug(f"Built Schur basis for {n_qubits} qubits: " + ", ".join(
        f"j={s.j} x{s.multiplicity}" for s in sectors))
    return SchurBasis(n_qubits=n_qubits, transform=np.stack(rows).conj(), sectors=tuple(sectors))
