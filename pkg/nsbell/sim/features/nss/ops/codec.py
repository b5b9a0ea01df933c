"""Encoding into and decoding out of the three-photon noiseless subsystem."""

from typing import Sequence, Union

import numpy as np

from log_config import logger
from nsbell.nsbell_config import settings
from nsbell.sim.features.nss.models.decoded_logical import DecodedLogical
from nsbell.sim.features.nss.models.logical_basis import LogicalBasis
from nsbell.sim.features.qmat.models.quantum_state import DensityOperator, PureState
from nsbell.sim.features.qmat.ops.dense import partial_trace_array
from nsbell.sim.features.qmat.ops.state_ops import as_density, density_from_array
from nsbell.sim.features.su2rep.ops.schur import schur_basis_3qubit
from nsbell.sim.simulation_error import DimensionMismatchError, DomainError


def _unit_pair(values: Sequence[complex], label: str) -> np.ndarray:
    vector = np.asarray(values, dtype=complex).reshape(-1)
    if vector.shape != (2,):
        raise DomainError(f"{label} must have two components, got {vector.shape[0]}", operation="encode")
    norm_sq = float(np.vdot(vector, vector).real)
    if abs(norm_sq - 1.0) > settings.norm_tol:
        raise DomainError(
            f"{label} vector is not normalized",
            operation="encode",
            details={"squared_norm": norm_sq},
        )
    return vector


def encode(logical: Sequence[complex], gauge: Sequence[complex]) -> PureState:
    """
    Encode a logical qubit with a chosen gauge state into three photons.

    Returns a*(g0|0'> + g1|0''>) + b*(g0|1'> + g1|1''>) for logical (a, b)
    and gauge (g0, g1).

    Raises:
        DomainError: If either input is not a unit 2-vector
    """
    coefficients = np.kron(_unit_pair(logical, "logical"), _unit_pair(gauge, "gauge"))
    return PureState(amplitudes=coefficients @ LogicalBasis.standard().vectors)


def code_projector() -> np.ndarray:
    """Projector onto the spin-1/2 (code) sector of three photons."""
    return schur_basis_3qubit().sector_projector(0.5)


def reject_projector() -> np.ndarray:
    """Projector onto the spin-3/2 (reject) sector of three photons."""
    return schur_basis_3qubit().sector_projector(1.5)


def decode_logical(rho: Union[PureState, DensityOperator]) -> DecodedLogical:
    """
    Recover the logical qubit of a three-photon state.

    The spin-1/2 block is renormalized by the accept probability and its gauge
    index traced out.

    Args:
        rho: State of three photons

    Returns:
        Logical 2x2 state and the reject probability; the logical state is None
        when the reject probability is within settings.reject_tol of 1

    Raises:
        DimensionMismatchError: If the state is not on three qubits
    """
    rho = as_density(rho)
    if rho.n_qubits != 3:
        raise DimensionMismatchError(
            f"decoding needs a three-qubit state, got {rho.n_qubits} qubits",
            operation="decode_logical",
        )
    reject = float(np.trace(reject_projector() @ rho.matrix).real)
    reject = min(1.0, max(0.0, reject))
    if reject >= 1.0 - settings.reject_tol:
        logger.debug("decode_logical: state lies in the reject sector")
        return DecodedLogical(logical_state=None, reject_probability=reject)

    code_block = LogicalBasis.standard().restrict(rho.matrix)
    logical = partial_trace_array(code_block, [2, 2], [0])
    return DecodedLogical(
        logical_state=density_from_array(logical, "decode_logical"),
        reject_probability=reject,
    )
