import csv

import numpy as np
import pytest

from nsbell.sim.features.qmat.ops.dense import basis_ket


@pytest.fixture
def rng():
    """Seeded random stream so every test run draws the same numbers"""
    return np.random.default_rng(20240917)


@pytest.fixture
def singlet_vector():
    """(|01> - |10>)/sqrt(2) as a plain array"""
    return (basis_ket("01") - basis_ket("10")) / np.sqrt(2)


@pytest.fixture
def singlet_matrix(singlet_vector):
    return np.outer(singlet_vector, singlet_vector.conj())


@pytest.fixture
def read_result():
    """Split a result CSV into its `#` metadata lines, header and data rows"""
    def _read(path):
        lines = path.read_text(encoding="utf-8").splitlines()
        metadata = [line for line in lines if line.startswith("#")]
        table = list(csv.reader(line for line in lines if not line.startswith("#")))
        header = table[0]
        return metadata, header, [dict(zip(header, row)) for row in table[1:]]

    return _read
