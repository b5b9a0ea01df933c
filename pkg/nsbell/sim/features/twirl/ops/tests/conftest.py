import numpy as np
import pytest

from nsbell.sim.features.su2rep.ops.schur import logical_code_vectors


@pytest.fixture
def code_vectors():
    """Rows 0', 0'', 1', 1'' of the three-photon code"""
    return logical_code_vectors()


@pytest.fixture
def logical_singlet_matrix(code_vectors):
    zero, one = code_vectors[0], code_vectors[2]
    psi = (np.kron(zero, one) - np.kron(one, zero)) / np.sqrt(2)
    return np.outer(psi, psi.conj())
