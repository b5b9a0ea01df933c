import math

import numpy as np
import pytest

from nsbell.sim.features.chsh.models.chsh_settings import ChshSettings, Flavor
from nsbell.sim.features.chsh.ops.exact import chsh_exact
from nsbell.sim.features.chsh.ops.states import singlet_physical
from nsbell.sim.features.nss.ops.codec import decode_logical, encode
from nsbell.sim.features.qmat.ops.dense import projector
from nsbell.sim.features.spacetime.models.birefringence_params import BirefringenceParams
from nsbell.sim.features.spacetime.ops.birefringence import (
    birefringence_formula,
    birefringence_phase,
    birefringent_channel,
)
from nsbell.sim.features.su2rep.models.group_element import GroupElementU2
from nsbell.sim.features.twirl.ops.rotation import fixed_rotation, fixed_rotation_blocks


def params(**overrides):
    values = dict(k2=1.0, m_tilde=1.0, wavelength=1.0, radius=1.0, mu=0.5)
    values.update(overrides)
    return BirefringenceParams(**values)


class TestBirefringencePhase:
    def test_radial_emission_vanishes(self):
        assert birefringence_phase(params(mu=1.0)) == 0.0

    def test_validation_point(self):
        value = birefringence_formula(1.0, 1.0, 1.0, 1.0, 2.0)
        assert value == pytest.approx(math.sqrt(2 / 3) * 8 * math.pi / 3, abs=1e-9)
        assert value == pytest.approx(6.8403, abs=1e-4)

    def test_scaling(self):
        base = birefringence_phase(params())
        assert birefringence_phase(params(wavelength=2.0)) == pytest.approx(base / 2)
        assert birefringence_phase(params(radius=2.0)) == pytest.approx(base / 4)
        assert birefringence_phase(params(k2=3.0)) == pytest.approx(3 * base)
        assert birefringence_phase(params(m_tilde=0.5)) == pytest.approx(base / 2)

    @pytest.mark.parametrize("mu", [0.05, 0.3, 0.7, 0.99])
    def test_negative_below_one(self, mu):
        assert birefringence_phase(params(mu=mu)) < 0


class TestBirefringentChannel:
    def test_matrix(self):
        g = birefringent_channel(0.8)
        assert np.allclose(g.u2_matrix(), np.diag([1.0, np.exp(0.8j)]), atol=1e-12)

    def test_zero_is_identity(self):
        assert np.allclose(birefringent_channel(0.0).u2_matrix(), GroupElementU2.identity().u2_matrix())

    @pytest.mark.parametrize("delta_phi", [1e-17, 1e-300])
    def test_tiny_phase(self, delta_phi):
        """Phases below the float resolution of 2pi still give a valid element"""
        g = birefringent_channel(delta_phi)
        assert g.alpha == 0.0
        assert np.allclose(g.u2_matrix(), np.eye(2), atol=1e-12)

    @pytest.mark.parametrize("first,second", [(0.3, 1.1), (2.0, 5.0), (-1.0, 0.25)])
    def test_composition(self, first, second):
        composed = birefringent_channel(first) * birefringent_channel(second)
        assert np.max(np.abs(composed.u2_matrix() - birefringent_channel(first + second).u2_matrix())) < 1e-12

    @pytest.mark.parametrize("delta_phi", [0.1, 1.0, math.pi])
    def test_encoded_block_immune(self, delta_phi, rng):
        logical = rng.normal(size=2) + 1j * rng.normal(size=2)
        logical /= np.linalg.norm(logical)
        state = encode(logical, (0.6, 0.8))
        decoded = decode_logical(fixed_rotation(state, birefringent_channel(delta_phi), 3))
        assert np.max(np.abs(decoded.logical_state.matrix - projector(logical))) < 1e-12

    def test_bare_singlet_degraded(self):
        rho = fixed_rotation_blocks(singlet_physical().density(), [birefringent_channel(math.pi), None], 1)
        result = chsh_exact(rho, ChshSettings.for_angle(math.pi / 3, Flavor.PHYSICAL))
        assert result.s_value == pytest.approx(1.0, abs=1e-12)
        assert result.s_value != pytest.approx(2.5)
