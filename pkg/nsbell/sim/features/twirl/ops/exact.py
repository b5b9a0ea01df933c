"""Closed-form collective twirl via the Schur basis.

Averaging U^{(x)n} X U^{(x)n dagger} over Haar measure kills every coherence
between different spin sectors and, inside a sector, replaces the spin (gauge)
factor by the maximally mixed state while leaving the multiplicity (logical)
factor alone.
"""

import numpy as np

from log_config import logger
from nsbell.sim.features.qmat.models.quantum_state import DensityOperator
from nsbell.sim.features.qmat.ops.state_ops import density_from_array
from nsbell.sim.features.su2rep.models.schur_basis import SchurBasis
from nsbell.sim.features.su2rep.ops.schur import schur_basis
from nsbell.sim.features.twirl.models.twirl_spec import TwirlSpec
from nsbell.sim.simulation_error import DimensionMismatchError


def _twirl_schur_coordinates(blocks: np.ndarray, basis: SchurBasis) -> np.ndarray:
    """Twirl a stack of operators given in Schur coordinates, shape (B, B, K)."""
    out = np.zeros_like(blocks)
    for sector in basis.sectors:
        rows = sector.row_array()
        sector_block = blocks[rows[:, :, None, None], rows[None, None, :, :], :]
        # trace over the spin index, keep the multiplicity indices
        multiplicity_part = np.einsum("acadk->cdk", sector_block) / sector.dim
        for m_rows in rows:
            out[m_rows[:, None], m_rows[None, :], :] = multiplicity_part
    return out


def twirl_block_array(matrix: np.ndarray, n_total: int, start: int, size: int) -> np.ndarray:
    """
    Exact twirl of the qubits start .. start+size-1 of an n_total-qubit operator.

    Works on any square operator, not only density matrices; the other qubits
    are left untouched.
    """
    basis = schur_basis(size)
    left, block, right = 2**start, 2**size, 2 ** (n_total - start - size)
    moved = matrix.reshape(left, block, right, left, block, right).transpose(1, 4, 0, 2, 3, 5)
    stacked = moved.reshape(block, block, -1)

    s = basis.transform
    schur = np.einsum("ai,ijk,bj->abk", s, stacked, s.conj())
    twirled = _twirl_schur_coordinates(schur, basis)
    back = np.einsum("ai,abk,bj->ijk", s.conj(), twirled, s)

    restored = back.reshape(block, block, left, right, left, right).transpose(2, 0, 3, 4, 1, 5)
    return restored.reshape(matrix.shape)


def twirl_exact(rho: DensityOperator, spec: TwirlSpec) -> DensityOperator:
    """
    Exact collective depolarization of a state.

    Independent blocks are twirled one after the other; their averages
    factorize because the blocks act on disjoint qubits.

    Args:
        rho: State on spec.total_qubits qubits
        spec: Channel parameters; the method field is ignored

    Returns:
        The twirled state

    Raises:
        DimensionMismatchError: If rho does not match `spec`
        DomainError: If a block size has no Schur basis
    """
    if rho.n_qubits != spec.total_qubits:
        raise DimensionMismatchError(
            f"state has {rho.n_qubits} qubits, twirl expects {spec.total_qubits}",
            operation="twirl_exact",
            details={"bipartite_mode": spec.bipartite_mode.value},
        )
    matrix = rho.matrix
    for start, size in spec.blocks():
        matrix = twirl_block_array(matrix, spec.total_qubits, start, size)
    logger.debug(f"twirl_exact: {spec.total_qubits} qubits in blocks {spec.blocks()}")
    return density_from_array(matrix, "twirl_exact")
