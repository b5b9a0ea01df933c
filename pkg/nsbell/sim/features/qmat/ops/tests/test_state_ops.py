import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from nsbell.sim.features.qmat.models.quantum_state import DensityOperator, Observable, PureState
from nsbell.sim.features.qmat.ops.dense import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Z,
    basis_ket,
    kron_all,
    random_density_matrix,
    spectral_projectors,
)
from nsbell.sim.features.qmat.ops.state_ops import expectation, partial_trace, tensor, trace_distance
from nsbell.sim.simulation_error import DimensionMismatchError, SimulationError

seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestTensor:
    def test_basis_kets(self):
        ket = tensor(PureState(amplitudes=[1, 0]), PureState(amplitudes=[0, 1]))
        assert np.array_equal(ket.amplitudes, basis_ket("01"))

    def test_identities(self):
        assert np.array_equal(tensor(IDENTITY_2, IDENTITY_2), np.eye(4))

    def test_zz_on_singlet(self, singlet_matrix):
        zz = tensor(Observable(matrix=SIGMA_Z), Observable(matrix=SIGMA_Z))
        assert expectation(DensityOperator(matrix=singlet_matrix), zz) == pytest.approx(-1.0, abs=1e-12)

    def test_mixed_kinds_rejected(self):
        with pytest.raises(SimulationError):
            tensor(PureState(amplitudes=[1, 0]), Observable(matrix=SIGMA_Z))

    @hyp_settings(max_examples=20, deadline=None)
    @given(seed=seeds)
    def test_associative(self, seed):
        rng = np.random.default_rng(seed)
        a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
        assert np.array_equal(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))


class TestPartialTrace:
    def test_singlet_marginal(self, singlet_matrix):
        reduced = partial_trace(DensityOperator(matrix=singlet_matrix), [2, 2], {0})
        assert np.allclose(reduced.matrix, np.eye(2) / 2, atol=1e-12)

    def test_keep_second_factor(self):
        rho = np.kron(np.diag([1.0, 0.0]), np.diag([0.25, 0.75]))
        reduced = partial_trace(DensityOperator(matrix=rho), [2, 2], {1})
        assert np.allclose(reduced.matrix, np.diag([0.25, 0.75]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            partial_trace(DensityOperator(matrix=np.eye(4) / 4), [2, 4], {0})

    @pytest.mark.parametrize("keep", [[], [0, 0], [2], [-1]])
    def test_bad_keep_rejected(self, singlet_matrix, keep):
        """Empty, repeated or out-of-range kept indices raise instead of returning a 1x1 state"""
        with pytest.raises(DimensionMismatchError):
            partial_trace(DensityOperator(matrix=singlet_matrix), [2, 2], keep)

    @hyp_settings(max_examples=25, deadline=None)
    @given(seed=seeds, n_left=st.integers(min_value=1, max_value=3), n_right=st.integers(min_value=1, max_value=3))
    def test_product_state_oracle(self, seed, n_left, n_right):
        rng = np.random.default_rng(seed)
        rho = random_density_matrix(n_left, rng)
        sigma = random_density_matrix(n_right, rng)
        product = DensityOperator(matrix=np.kron(rho, sigma))
        reduced = partial_trace(product, [2**n_left, 2**n_right], {0})
        assert np.max(np.abs(reduced.matrix - rho)) < 1e-12

    def test_multi_subsystem_order(self):
        a, b, c = np.diag([1.0, 0.0]), np.diag([0.0, 1.0]), np.eye(2) / 2
        rho = DensityOperator(matrix=kron_all(a, b, c))
        reduced = partial_trace(rho, [2, 2, 2], {0, 2})
        assert np.allclose(reduced.matrix, np.kron(a, c))


class TestExpectation:
    def test_maximally_mixed(self):
        assert expectation(DensityOperator(matrix=np.eye(2) / 2), Observable(matrix=SIGMA_Z)) == 0.0

    def test_eigenstate(self):
        assert expectation(DensityOperator(matrix=np.diag([1.0, 0.0])), Observable(matrix=SIGMA_Z)) == 1.0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            expectation(DensityOperator(matrix=np.eye(4) / 4), Observable(matrix=SIGMA_Z))


class TestTraceDistance:
    def test_identical(self, singlet_matrix):
        rho = DensityOperator(matrix=singlet_matrix)
        assert trace_distance(rho, rho) == pytest.approx(0.0, abs=1e-15)

    def test_orthogonal(self):
        assert trace_distance(
            DensityOperator(matrix=np.diag([1.0, 0.0])), DensityOperator(matrix=np.diag([0.0, 1.0]))
        ) == pytest.approx(1.0)

    def test_pure_versus_mixed(self):
        assert trace_distance(
            DensityOperator(matrix=np.diag([1.0, 0.0])), DensityOperator(matrix=np.eye(2) / 2)
        ) == pytest.approx(0.5)


class TestSpectralProjectors:
    def test_pauli_x(self):
        outcomes = spectral_projectors(SIGMA_X)
        assert [value for value, _ in outcomes] == pytest.approx([1.0, -1.0])
        assert np.allclose(sum(p for _, p in outcomes), np.eye(2))

    def test_kernel_is_reject(self):
        outcomes = spectral_projectors(np.diag([1.0, -1.0, 0.0, 0.0]))
        assert outcomes[-1][0] == 0.0
        assert np.allclose(outcomes[-1][1], np.diag([0, 0, 1, 1]))
