import numpy as np
import pytest

from nsbell.sim.features.shared.sharding import derive_seed
from nsbell.sim.features.su2rep.ops.orthogonality import check_orthogonality, expected_overlap
from nsbell.sim.features.su2rep import su2rep_command_registry  # noqa: F401  register the feature before its tools
from nsbell.sim.features.su2rep.tools.orthogonality_tool import INDEX_TUPLES
from nsbell.sim.simulation_error import DomainError

BASE_SEED = 11
REPETITIONS = 40


class TestOrthogonality:
    def test_expected_values(self):
        assert expected_overlap(0.5, 0.5, 0.5, 0.5, 0.5, 0.5) == 0.5
        assert expected_overlap(1.5, 1.5, -0.5, 0.5, -0.5, 0.5) == 0.25
        assert expected_overlap(0.5, 1.5, 0.5, 0.5, 0.5, 0.5) == 0.0

    @pytest.mark.parametrize("indices", INDEX_TUPLES)
    def test_within_four_sigma_across_repetitions(self, indices):
        """Each tuple lands within 4 standard errors in at least 95% of 40 seeded runs at 1e5 samples"""
        passes = 0
        for repetition in range(REPETITIONS):
            rng = np.random.default_rng(derive_seed(BASE_SEED, repetition))
            estimate = check_orthogonality(*indices, samples=10**5, rng=rng)
            assert estimate.std_error < 0.01
            passes += estimate.deviation_in_sigma <= 4.0
        assert passes >= 0.95 * REPETITIONS

    def test_invalid_projection(self):
        with pytest.raises(DomainError):
            check_orthogonality(0.5, 0.5, 1.0, 0.5, 0.5, 0.5, samples=10, rng=np.random.default_rng(0))

    def test_half_integer_mismatch(self):
        with pytest.raises(DomainError):
            check_orthogonality(1.0, 1.0, 0.5, 0.0, 0.0, 0.0, samples=10, rng=np.random.default_rng(0))

    def test_unsupported_spin(self):
        with pytest.raises(DomainError):
            check_orthogonality(2.0, 0.5, 0.0, 0.0, 0.5, 0.5, samples=10, rng=np.random.default_rng(0))
