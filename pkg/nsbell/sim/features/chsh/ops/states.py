import numpy as np

from nsbell.sim.features.nss.models.logical_basis import LogicalBasis
from nsbell.sim.features.qmat.models.quantum_state import PureState
from nsbell.sim.features.qmat.ops.dense import basis_ket


def singlet_physical() -> PureState:
    """(|01> - |10>)/sqrt(2) on two photons."""
    return PureState(amplitudes=(basis_ket("01") - basis_ket("10")) / np.sqrt(2))


def singlet_logical() -> PureState:
    """(|0'>|1'> - |1'>|0'>)/sqrt(2), photons 1-3 for Alice and 4-6 for Bob."""
    basis = LogicalBasis.standard()
    zero, one = basis.state(0, 0), basis.state(1, 0)
    return PureState(amplitudes=(np.kron(zero, one) - np.kron(one, zero)) / np.sqrt(2))
