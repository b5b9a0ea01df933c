import numpy as np
import pytest

from nsbell.sim.features.su2rep.ops.haar import haar_batch, u2_matrices
from nsbell.sim.features.su2rep.ops.schur import logical_code_vectors, schur_basis, schur_basis_3qubit
from nsbell.sim.features.su2rep.ops.wigner import tensor_power_batch
from nsbell.sim.simulation_error import DomainError


class TestThreeQubitBasis:
    def test_gram_is_identity(self):
        s = schur_basis_3qubit().transform
        assert np.max(np.abs(s @ s.conj().T - np.eye(8))) < 1e-12

    def test_code_rows(self):
        basis = schur_basis_3qubit()
        assert np.array_equal(basis.transform[4:], logical_code_vectors())
        assert basis.sector(0.5).rows == ((4, 6), (5, 7))
        assert basis.sector(1.5).multiplicity == 1

    def test_block_diagonal_under_collective_rotation(self, rng):
        basis = schur_basis_3qubit()
        s = basis.transform
        collective = tensor_power_batch(u2_matrices(*haar_batch(rng, 100)), 3)
        blocks = np.einsum("ai,tij,bj->tab", s, collective, s.conj())
        assert np.max(np.abs(blocks[:, :4, 4:])) < 1e-12
        assert np.max(np.abs(blocks[:, 4:, :4])) < 1e-12

    def test_logical_index_untouched(self, rng):
        # inside the spin-1/2 block the rotation acts as identity (x) det(U) U on (logical, gauge)
        s = schur_basis_3qubit().transform
        fundamentals = u2_matrices(*haar_batch(rng, 20))
        collective = tensor_power_batch(fundamentals, 3)
        blocks = np.einsum("ai,tij,bj->tab", s[4:], collective, s[4:].conj())
        for block, u in zip(blocks, fundamentals):
            assert np.allclose(block, np.kron(np.eye(2), np.linalg.det(u) * u), atol=1e-12)

    def test_spin_three_halves_projector(self):
        projector = schur_basis_3qubit().sector_projector(1.5)
        assert np.trace(projector).real == pytest.approx(4.0)
        assert np.allclose(projector @ projector, projector, atol=1e-12)


class TestGenericBasis:
    @pytest.mark.parametrize("n", [1, 2, 4, 5, 6])
    def test_unitary(self, n):
        s = schur_basis(n).transform
        assert np.max(np.abs(s @ s.conj().T - np.eye(2**n))) < 1e-10

    @pytest.mark.parametrize("n,expected", [
        (2, {1.0: 1, 0.0: 1}),
        (4, {2.0: 1, 1.0: 3, 0.0: 2}),
        (6, {3.0: 1, 2.0: 5, 1.0: 9, 0.0: 5}),
    ])
    def test_multiplicities(self, n, expected):
        assert {s.j: s.multiplicity for s in schur_basis(n).sectors} == expected

    @pytest.mark.parametrize("n", [2, 4])
    def test_block_diagonal(self, n, rng):
        basis = schur_basis(n)
        s = basis.transform
        collective = tensor_power_batch(u2_matrices(*haar_batch(rng, 10)), n)
        blocks = np.einsum("ai,tij,bj->tab", s, collective, s.conj())
        sector_of = np.empty(2**n, dtype=int)
        for index, sector in enumerate(basis.sectors):
            sector_of[sector.row_array().reshape(-1)] = index
        off = sector_of[:, None] != sector_of[None, :]
        assert np.max(np.abs(blocks[:, off])) < 1e-10

    def test_three_qubits_uses_code_states(self):
        assert schur_basis(3) is schur_basis_3qubit()

    @pytest.mark.parametrize("n", [0, 7])
    def test_out_of_range(self, n):
        with pytest.raises(DomainError):
            schur_basis(n)
