import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from nsbell.sim.features.chsh.models.chsh_settings import ChshSettings, Flavor
from nsbell.sim.features.chsh.ops.exact import chsh_exact, chsh_formula, lhv_assignments, lhv_bound
from nsbell.sim.features.chsh.ops.states import singlet_logical, singlet_physical
from nsbell.sim.features.nss.models.logical_basis import LogicalBasis
from nsbell.sim.features.qmat.models.quantum_state import DensityOperator
from nsbell.sim.features.qmat.ops.dense import SIGMA_Z, basis_ket, haar_random_state, projector
from nsbell.sim.features.qmat.ops.state_ops import partial_trace
from nsbell.sim.features.twirl.models.twirl_spec import BipartiteMode, TwirlSpec
from nsbell.sim.features.twirl.ops.exact import twirl_exact
from nsbell.sim.simulation_error import DimensionMismatchError, UndefinedResultError

PHI_GRID = np.linspace(0.0, math.pi / 2, 200)
INDEPENDENT_LOGICAL = TwirlSpec(n_qubits=3, bipartite_mode=BipartiteMode.INDEPENDENT_BLOCKS)
INDEPENDENT_PHYSICAL = TwirlSpec(n_qubits=1, bipartite_mode=BipartiteMode.INDEPENDENT_BLOCKS)


@pytest.fixture(scope="module")
def twirled_logical():
    return twirl_exact(singlet_logical().density(), INDEPENDENT_LOGICAL)


class TestStates:
    def test_physical_singlet(self):
        psi = singlet_physical()
        assert np.vdot(psi.amplitudes, psi.amplitudes).real == pytest.approx(1.0)
        zz = np.kron(SIGMA_Z, SIGMA_Z)
        assert np.vdot(psi.amplitudes, zz @ psi.amplitudes).real == pytest.approx(-1.0)

    def test_logical_reduced_states(self):
        basis = LogicalBasis.standard()
        expected = 0.5 * (projector(basis.named("0'")) + projector(basis.named("1'")))
        rho = singlet_logical().density()
        for keep in (0, 1):
            assert np.max(np.abs(partial_trace(rho, [8, 8], {keep}).matrix - expected)) < 1e-12

    def test_logical_density_expansion(self):
        basis = LogicalBasis.standard()
        zero, one = basis.named("0'"), basis.named("1'")
        zo, oz = np.kron(zero, one), np.kron(one, zero)
        expected = 0.5 * (np.outer(zo, zo) - np.outer(zo, oz) - np.outer(oz, zo) + np.outer(oz, oz))
        assert np.max(np.abs(singlet_logical().density().matrix - expected)) < 1e-15


class TestFormula:
    @pytest.mark.parametrize("phi,expected", [(0.0, 2.0), (math.pi / 3, 2.5), (math.pi / 2, 2.0)])
    def test_values(self, phi, expected):
        assert chsh_formula(phi) == pytest.approx(expected, abs=1e-15)

    def test_maximum_at_pi_over_three(self):
        grid = np.linspace(0.0, math.pi / 2, 2001)
        best = grid[np.argmax([chsh_formula(p) for p in grid])]
        refined = minimize_scalar(lambda p: -chsh_formula(p), bracket=(best - 1e-3, best, best + 1e-3), tol=1e-12)
        assert refined.x == pytest.approx(math.pi / 3, abs=1e-6)
        assert -refined.fun == pytest.approx(2.5, abs=1e-9)


class TestChshExact:
    def test_physical_curve(self):
        rho = singlet_physical().density()
        for phi in PHI_GRID:
            result = chsh_exact(rho, ChshSettings.for_angle(phi, Flavor.PHYSICAL))
            assert abs(result.s_value - chsh_formula(phi)) < 1e-12
            assert result.s_signed == pytest.approx(-chsh_formula(phi), abs=1e-12)

    def test_logical_curve_after_twirl(self, twirled_logical):
        for phi in PHI_GRID:
            result = chsh_exact(twirled_logical, ChshSettings.for_angle(phi, Flavor.LOGICAL))
            assert abs(result.s_value - chsh_formula(phi)) < 1e-10
            assert result.reject_rate <= 1e-12

    def test_twirled_reduced_states(self, twirled_logical):
        basis = LogicalBasis.standard()
        for keep in (0, 1):
            reduced = partial_trace(twirled_logical, [8, 8], {keep}).matrix
            assert np.max(np.abs(basis.restrict(reduced) - np.eye(4) / 4)) < 1e-10

    def test_twirled_physical_singlet(self):
        rho = twirl_exact(singlet_physical().density(), INDEPENDENT_PHYSICAL)
        result = chsh_exact(rho, ChshSettings.for_angle(math.pi / 3, Flavor.PHYSICAL))
        assert max(abs(e) for e in result.correlators) < 1e-10
        assert result.s_value < 1e-10

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            chsh_exact(singlet_physical().density(), ChshSettings.for_angle(0.1, Flavor.LOGICAL))

    def test_rejected_state(self):
        rho = DensityOperator(matrix=projector(basis_ket("000000")))
        with pytest.raises(UndefinedResultError):
            chsh_exact(rho, ChshSettings.for_angle(0.1, Flavor.LOGICAL))

    def test_product_states_obey_bound(self, rng):
        for _ in range(100):
            psi = np.kron(haar_random_state(1, rng), haar_random_state(1, rng))
            phi = rng.uniform(0, math.pi / 2)
            result = chsh_exact(DensityOperator(matrix=projector(psi)), ChshSettings.for_angle(phi, Flavor.PHYSICAL))
            assert result.s_value <= 2.0 + 1e-12


class TestLhv:
    def test_enumeration(self):
        rows = lhv_assignments()
        assert len(rows) == 16
        assert {row[-1] for row in rows} == {2, -2}
        assert sum(1 for row in rows if row[-1] == 2) == 8

    def test_bound(self):
        assert lhv_bound() == 2
