from typing import List

import numpy as np

from log_config import logger
from nsbell.sim.features.chsh.models.chsh_settings import ChshSettings, Flavor
from nsbell.sim.features.chsh.models.misalignment_sample import MisalignmentSample
from nsbell.sim.features.chsh.ops.exact import chsh_exact
from nsbell.sim.features.chsh.ops.states import singlet_logical, singlet_physical
from nsbell.sim.features.su2rep.ops.haar import haar_sample
from nsbell.sim.features.twirl.ops.rotation import fixed_rotation_blocks
from nsbell.sim.simulation_error import DomainError


def misalignment_scan(phi: float, pairs: int, rng: np.random.Generator) -> List[MisalignmentSample]:
    """
    CHSH values under fixed, unknown frame misalignments.

    Each sample draws Haar elements g_A and g_B; the bare protocol rotates
    Alice's and Bob's photon by them, the encoded protocol rotates each
    party's three photons collectively.

    Raises:
        DomainError: If pairs < 1
    """
    if pairs < 1:
        raise DomainError("misalignment scan needs at least one pair", operation="misalignment_scan")
    physical_settings = ChshSettings.for_angle(phi, Flavor.PHYSICAL)
    logical_settings = ChshSettings.for_angle(phi, Flavor.LOGICAL)
    physical, logical = singlet_physical().density(), singlet_logical().density()

    samples = []
    for index in range(pairs):
        g_alice, g_bob = haar_sample(rng), haar_sample(rng)
        s_physical = chsh_exact(fixed_rotation_blocks(physical, [g_alice, g_bob], 1), physical_settings)
        s_logical = chsh_exact(fixed_rotation_blocks(logical, [g_alice, g_bob], 3), logical_settings)
        samples.append(
            MisalignmentSample(
                index=index,
                g_alice=g_alice,
                g_bob=g_bob,
                s_physical=s_physical.s_value,
                s_logical=s_logical.s_value,
            )
        )
    below = sum(1 for s in samples if not s.physical_violates)
    logger.debug(f"misalignment_scan phi={phi:.6f}: {below}/{pairs} bare samples without violation")
    return samples
